#include "delone/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "delone/kernels.hpp"

namespace delone {

namespace {
constexpr std::size_t kMaxEvalPoints = 400'000'000;

// exact 1-D supremum of distance-to-nearest over [a, b]
double sup_distance_1d(std::vector<double> xs, double a, double b) {
    std::sort(xs.begin(), xs.end());
    auto nearest = [&](double q) {
        auto it = std::lower_bound(xs.begin(), xs.end(), q);
        double best = std::numeric_limits<double>::infinity();
        if (it != xs.end()) best = std::min(best, *it - q);
        if (it != xs.begin()) best = std::min(best, q - *(it - 1));
        return best;
    };
    double worst = std::max(nearest(a), nearest(b));
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double mid = 0.5 * (xs[i] + xs[i + 1]);
        if (mid >= a && mid <= b) worst = std::max(worst, mid - xs[i]);
    }
    return worst;
}
}  // namespace

RegionEvalGrid::RegionEvalGrid(const Region& region, double pitch)
    : region_(region), pitch_(pitch) {
    if (!(pitch > 0.0)) throw std::invalid_argument("covering: resolution must be positive");
    const int n = region.dim();
    Vec lo, hi;
    region.bounds(lo, hi);
    axis_.resize(n);
    std::size_t total = 1;
    for (int d = 0; d < n; ++d) {
        auto& ax = axis_[d];
        for (double x = lo[d]; x < hi[d]; x += pitch) ax.push_back(x);
        ax.push_back(hi[d]);
        if (total > kMaxEvalPoints / ax.size())
            throw std::invalid_argument("covering: resolution too fine for region");
        total *= ax.size();
    }
    count_ = total;
    const double diag = pitch * std::sqrt(static_cast<double>(n));
    dispersion_ = (region.kind() == Region::Kind::Ball) ? diag : 0.5 * diag;
}

bool RegionEvalGrid::fill(std::size_t i, double* buf) const {
    const int n = region_.dim();
    for (int d = n - 1; d >= 0; --d) {
        const auto& ax = axis_[d];
        buf[d] = ax[i % ax.size()];
        i /= ax.size();
    }
    if (region_.kind() == Region::Kind::Box) return true;
    // ball: keep interior grid points, project the near-boundary ring
    const auto& c = region_.center();
    const double rho = region_.radius();
    double d2 = 0.0;
    for (int d = 0; d < n; ++d) {
        const double t = buf[d] - c[d];
        d2 += t * t;
    }
    const double r = std::sqrt(d2);
    if (r <= rho) return true;
    if (r > rho + dispersion_) return false;
    const double s = rho / r;
    for (int d = 0; d < n; ++d) buf[d] = c[d] + s * (buf[d] - c[d]);
    return true;
}

double min_pairwise_distance(const PointSample& sample) {
    if (sample.size() < 2) throw std::invalid_argument("insufficient points");
    GridIndex grid(sample);
    return kernels::min_nn_distance_omp(grid);
}

Interval covering_radius_points(std::span<const double> coords, int dim, const Region& region,
                                double resolution) {
    if (coords.empty()) throw std::invalid_argument("covering: empty sample");
    if (!(resolution > 0.0)) throw std::invalid_argument("covering: resolution must be positive");
    if (region.dim() != dim) throw std::invalid_argument("covering: dimension mismatch");

    if (dim == 1) {
        Vec lo, hi;
        region.bounds(lo, hi);
        const double v =
            sup_distance_1d(std::vector<double>(coords.begin(), coords.end()), lo[0], hi[0]);
        return {v, v};
    }

    GridIndex grid(coords, dim, GridIndex::auto_cell_size(coords, dim));
    RegionEvalGrid eval(region, resolution);
    const double worst = kernels::max_nn_distance_omp(
        eval.count(), dim, [&](std::size_t i, double* buf) { return eval.fill(i, buf); }, grid);
    return {worst, worst + eval.dispersion()};
}

Interval covering_radius(const PointSample& sample, const Region& region, double resolution) {
    if (sample.size() == 0) throw std::invalid_argument("covering: empty sample");
    return covering_radius_points(sample.coords, sample.dim, region, resolution);
}

DeloneConstants delone_constants(const PointSample& sample, const Region& region,
                                 double resolution) {
    DeloneConstants dc;
    dc.r = 0.5 * min_pairwise_distance(sample);
    const Interval cov = covering_radius(sample, region, resolution);
    dc.R = cov.hi;
    dc.kappa = dc.R / dc.r;
    // declared bounds are guarantees from the generator's construction;
    // a violation means the sample or the scan is broken
    if (sample.declared_r && dc.r < *sample.declared_r - 4.0 * sample.tol)
        throw std::runtime_error("delone constants: packing radius below declared bound");
    if (sample.declared_R && cov.lo > *sample.declared_R + 4.0 * sample.tol)
        throw std::runtime_error("delone constants: covering radius above declared bound");
    return dc;
}

}  // namespace delone
