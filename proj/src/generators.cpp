#include "delone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "delone/grid_index.hpp"
#include "delone/irrational.hpp"
#include "delone/kappa.hpp"
#include "delone/kernels.hpp"

namespace delone {

namespace {

constexpr double kOffsetTol = 1e-9;
constexpr std::size_t kMaxPoints = 20'000'000;

double region_circumradius(const Region& region) {
    if (region.kind() == Region::Kind::Ball) return region.radius();
    Vec lo, hi;
    region.bounds(lo, hi);
    double d2 = 0.0;
    for (int i = 0; i < region.dim(); ++i) {
        const double e = 0.5 * (hi[i] - lo[i]);
        d2 += e * e;
    }
    return std::sqrt(d2);
}

Region expanded_box(const Region& region, double margin) {
    Vec lo, hi;
    region.bounds(lo, hi);
    for (int i = 0; i < region.dim(); ++i) {
        lo[i] -= margin;
        hi[i] += margin;
    }
    return Region::box(std::move(lo), std::move(hi));
}

// distance from a point to the nearest lattice point
double dist_to_lattice(const Matrix& basis, const Vec& p) {
    double rough = 0.0;
    for (const auto& b : basis) rough += norm(b);
    const auto cands = enumerate_lattice(basis, p, rough + 1e-9);
    double best2 = std::numeric_limits<double>::infinity();
    for (const auto& lv : cands) best2 = std::min(best2, lv.norm2);
    return std::sqrt(best2);
}

}  // namespace

Generator Generator::crystal(Matrix basis, std::vector<Vec> offsets) {
    const int n = static_cast<int>(basis.size());
    if (n < 1) throw std::invalid_argument("crystal: empty basis");
    for (const auto& row : basis)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("crystal: basis must be square");
    if (std::abs(determinant(basis)) < 1e-12)
        throw std::invalid_argument("crystal: singular basis");
    if (offsets.empty()) offsets.push_back(Vec(n, 0.0));

    // reduce offsets into the fundamental cell
    for (auto& f : offsets) {
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument("crystal: offset dimension mismatch");
        Vec t = lattice_coords(basis, f);
        Vec red(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double u = t[i] - std::floor(t[i]);
            for (int d = 0; d < n; ++d) red[d] += u * basis[i][d];
        }
        f = std::move(red);
    }
    for (std::size_t i = 0; i < offsets.size(); ++i)
        for (std::size_t j = i + 1; j < offsets.size(); ++j)
            if (dist_to_lattice(basis, sub(offsets[i], offsets[j])) <= kOffsetTol)
                throw std::invalid_argument("crystal: duplicate offsets modulo lattice");

    Generator g;
    g.kind_ = Kind::Crystal;
    g.dim_ = n;
    g.basis_ = std::move(basis);
    g.offsets_ = std::move(offsets);

    if (n <= 8) {
        double min_sep = lattice_shortest_vector(g.basis_);
        for (std::size_t i = 0; i < g.offsets_.size(); ++i)
            for (std::size_t j = i + 1; j < g.offsets_.size(); ++j)
                min_sep = std::min(min_sep, dist_to_lattice(g.basis_, sub(g.offsets_[i], g.offsets_[j])));
        g.declared_r_ = 0.5 * min_sep;
        if (g.offsets_.size() == 1 && n <= 4)
            g.declared_R_ = lattice_covering_radius(g.basis_).hi;
    }
    return g;
}

Generator Generator::beatty(double alpha, double delta) {
    if (!(std::abs(delta) < 0.5))
        throw std::invalid_argument("beatty: not uniformly discrete guarantee (|delta| >= 1/2)");
    if (!is_irrational_to_precision(alpha))
        throw std::invalid_argument("beatty: alpha is rational to working precision");
    Generator g;
    g.kind_ = Kind::Beatty;
    g.dim_ = 1;
    g.alpha_ = alpha;
    g.delta_ = delta;
    g.declared_r_ = 0.5 * (1.0 - std::abs(delta));
    g.declared_R_ = 0.5 * (1.0 + std::abs(delta));
    return g;
}

Generator Generator::fibonacci() {
    return beatty(golden_ratio, -1.0 / std::sqrt(5.0));
}

Generator Generator::product(Generator factor, double eta, int dim) {
    if (factor.dim() != 1) throw std::invalid_argument("product: factor must be one-dimensional");
    if (!(eta > 0.0)) throw std::invalid_argument("product: eta must be positive");
    if (dim < 2) throw std::invalid_argument("product: dimension must be >= 2");
    Generator g;
    g.kind_ = Kind::Product;
    g.dim_ = dim;
    g.eta_ = eta;
    if (factor.declared_r_) g.declared_r_ = std::min(*factor.declared_r_, 0.5 * eta);
    if (factor.declared_R_)
        g.declared_R_ = std::sqrt(*factor.declared_R_ * *factor.declared_R_ +
                                  0.25 * eta * eta * (dim - 1));
    g.child_ = std::make_shared<Generator>(std::move(factor));
    return g;
}

Generator Generator::cut_project(Matrix basis, Vec phi, Vec delta_vec) {
    const int n = static_cast<int>(basis.size());
    if (n < 1) throw std::invalid_argument("cut_project: empty basis");
    if (static_cast<int>(phi.size()) != n || static_cast<int>(delta_vec.size()) != n)
        throw std::invalid_argument("cut_project: parameter dimension mismatch");
    if (std::abs(determinant(basis)) < 1e-12)
        throw std::invalid_argument("cut_project: singular basis");

    // proxy for rational independence of 1, phi(b_1), ..., phi(b_n)
    Vec v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = dot(phi, basis[i]);
        if (!is_irrational_to_precision(v[i]))
            throw std::invalid_argument("cut_project: aperiodicity precondition violated");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!is_irrational_to_precision(v[i] / v[j]))
                throw std::invalid_argument("cut_project: aperiodicity precondition violated");

    const double shortest = lattice_shortest_vector(basis);
    const double dnorm = norm(delta_vec);
    if (!(dnorm < shortest))
        throw std::invalid_argument("cut_project: displacement too large for uniform discreteness");

    Generator g;
    g.kind_ = Kind::CutProject;
    g.dim_ = n;
    g.basis_ = std::move(basis);
    g.phi_ = std::move(phi);
    g.delta_vec_ = std::move(delta_vec);
    g.declared_r_ = 0.5 * (shortest - dnorm);
    if (n <= 8) g.declared_R_ = lattice_covering_radius(g.basis_).hi + dnorm;

    // numeric probe: the declared spacing must hold on a small window
    double ext = 0.0;
    for (const auto& b : g.basis_) ext = std::max(ext, norm(b));
    const auto probe = g.points_in(Region::cube(n, -3.0 * ext, 3.0 * ext));
    if (probe.size() >= 2) {
        std::vector<double> coords;
        coords.reserve(probe.size() * n);
        for (const auto& p : probe) coords.insert(coords.end(), p.begin(), p.end());
        GridIndex grid(coords, n, GridIndex::auto_cell_size(coords, n));
        if (kernels::min_nn_distance_serial(grid) < 2.0 * *g.declared_r_ - 1e-9)
            throw std::invalid_argument("cut_project: probe window violates declared packing radius");
    }
    return g;
}

Generator Generator::perturbed(Generator base, Vec target, Vec displacement) {
    const int n = base.dim();
    if (static_cast<int>(target.size()) != n || static_cast<int>(displacement.size()) != n)
        throw std::invalid_argument("perturbed: dimension mismatch");
    if (!base.declared_r_)
        throw std::invalid_argument("perturbed: base has no declared packing radius");
    if (!(norm(displacement) < *base.declared_r_))
        throw std::invalid_argument("perturbed: displacement at least the packing radius");

    // snap the target to the exact enumerated base point
    const auto nearby = base.points_in(Region::ball(target, std::max(1e-6, 16.0 * kOffsetTol)));
    double best = std::numeric_limits<double>::infinity();
    Vec snapped;
    for (const auto& p : nearby) {
        const double d = dist(p, target);
        if (d < best) {
            best = d;
            snapped = p;
        }
    }
    if (!(best <= kOffsetTol)) throw std::invalid_argument("perturbed: target not in base set");

    Generator g;
    g.kind_ = Kind::Perturbed;
    g.dim_ = n;
    g.declared_r_ = *base.declared_r_ - 0.5 * norm(displacement);
    if (base.declared_R_) g.declared_R_ = *base.declared_R_ + norm(displacement);
    g.target_ = std::move(snapped);
    g.displacement_ = std::move(displacement);
    g.child_ = std::make_shared<Generator>(std::move(base));
    return g;
}

std::string Generator::id() const {
    char buf[160];
    switch (kind_) {
        case Kind::Crystal:
            std::snprintf(buf, sizeof buf, "crystal(n=%d,offsets=%zu)", dim_, offsets_.size());
            return buf;
        case Kind::Beatty:
            std::snprintf(buf, sizeof buf, "beatty(alpha=%.17g,delta=%.17g)", alpha_, delta_);
            return buf;
        case Kind::Product:
            std::snprintf(buf, sizeof buf, "product(eta=%.17g,n=%d)x", eta_, dim_);
            return buf + child_->id();
        case Kind::CutProject:
            std::snprintf(buf, sizeof buf, "cut_project(n=%d)", dim_);
            return buf;
        case Kind::Perturbed:
            return "perturbed:" + child_->id();
    }
    return "generator";
}

std::vector<std::pair<std::int64_t, double>> Generator::beatty_points_in(double lo,
                                                                         double hi) const {
    if (kind_ != Kind::Beatty) throw std::logic_error("beatty_points_in: wrong generator kind");
    std::vector<std::pair<std::int64_t, double>> out;
    const double pad = std::abs(delta_) + 1e-9;
    const auto mlo = static_cast<std::int64_t>(std::ceil(lo - pad));
    const auto mhi = static_cast<std::int64_t>(std::floor(hi + pad));
    for (std::int64_t m = mlo; m <= mhi; ++m) {
        const double y = static_cast<double>(m) + delta_ * frac_part(static_cast<double>(m) * alpha_);
        if (y >= lo && y <= hi) out.emplace_back(m, y);
    }
    return out;
}

std::vector<Vec> Generator::points_in(const Region& region) const {
    if (region.dim() != dim_) throw std::invalid_argument("generator: region dimension mismatch");
    std::vector<Vec> pts;

    switch (kind_) {
        case Kind::Crystal: {
            const Vec center = region.inball_center();
            const double rad = region_circumradius(region);
            for (const auto& f : offsets_) {
                const Vec shifted = sub(center, f);
                for (const auto& lv : enumerate_lattice(basis_, shifted, rad + 1e-9)) {
                    Vec p = add(lv.point, f);
                    if (region.contains(p)) pts.push_back(std::move(p));
                }
                if (pts.size() > kMaxPoints) throw std::runtime_error("generator: region too large");
            }
            break;
        }
        case Kind::Beatty: {
            Vec lo, hi;
            region.bounds(lo, hi);
            for (const auto& [m, y] : beatty_points_in(lo[0], hi[0])) pts.push_back({y});
            break;
        }
        case Kind::Product: {
            Vec lo, hi;
            region.bounds(lo, hi);
            const auto factor_pts =
                child_->points_in(Region::box({lo[0] - 1e-12}, {hi[0] + 1e-12}));
            std::vector<std::pair<std::int64_t, std::int64_t>> ranges(dim_);
            std::size_t count = factor_pts.size();
            for (int d = 1; d < dim_; ++d) {
                ranges[d] = {static_cast<std::int64_t>(std::ceil(lo[d] / eta_ - 1e-12)),
                             static_cast<std::int64_t>(std::floor(hi[d] / eta_ + 1e-12))};
                const auto width = std::max<std::int64_t>(0, ranges[d].second - ranges[d].first + 1);
                count *= static_cast<std::size_t>(width);
                if (count > kMaxPoints) throw std::runtime_error("generator: region too large");
            }
            Vec p(dim_);
            std::vector<std::int64_t> k(dim_, 0);
            for (const auto& fp : factor_pts) {
                p[0] = fp[0];
                for (int d = 1; d < dim_; ++d) k[d] = ranges[d].first;
                if (dim_ > 1 && ranges[1].first > ranges[1].second) continue;
                bool more = true;
                for (int d = 1; d < dim_; ++d)
                    if (ranges[d].first > ranges[d].second) more = false;
                while (more) {
                    for (int d = 1; d < dim_; ++d) p[d] = eta_ * static_cast<double>(k[d]);
                    if (region.contains(p)) pts.push_back(p);
                    int d = dim_ - 1;
                    while (d >= 1 && ++k[d] > ranges[d].second) k[d--] = ranges[d].first;
                    if (d < 1) more = false;
                }
            }
            break;
        }
        case Kind::CutProject: {
            const Vec center = region.inball_center();
            const double rad = region_circumradius(region) + norm(delta_vec_);
            for (const auto& lv : enumerate_lattice(basis_, center, rad + 1e-9)) {
                const double f = frac_part(dot(phi_, lv.point));
                Vec p = lv.point;
                for (int d = 0; d < dim_; ++d) p[d] += f * delta_vec_[d];
                if (region.contains(p)) pts.push_back(std::move(p));
            }
            if (pts.size() > kMaxPoints) throw std::runtime_error("generator: region too large");
            break;
        }
        case Kind::Perturbed: {
            const double margin = norm(displacement_) + 1e-9;
            const auto base_pts = child_->points_in(expanded_box(region, margin));
            for (const auto& bp : base_pts) {
                if (dist(bp, target_) <= kOffsetTol) {
                    Vec moved = add(target_, displacement_);
                    if (region.contains(moved)) pts.push_back(std::move(moved));
                } else if (region.contains(bp)) {
                    pts.push_back(bp);
                }
            }
            break;
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

PointSample Generator::sample(const Region& window, double tol) const {
    PointSample s;
    s.dim = dim_;
    s.tol = tol;
    s.window = window;
    s.source = id();
    s.declared_r = declared_r_;
    s.declared_R = declared_R_;
    const auto pts = points_in(window);
    s.coords.reserve(pts.size() * dim_);
    for (const auto& p : pts) s.push_point(p);

    if (s.declared_r && s.size() >= 2) {
        GridIndex grid(s);
        const double min_sep = kernels::min_nn_distance_omp(grid);
        if (min_sep < 2.0 * *s.declared_r - 8.0 * tol)
            throw std::runtime_error("generator: sample violates declared packing radius");
    }
    return s;
}

}  // namespace delone
