#include "delone/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace delone {

namespace {
constexpr std::int64_t kMaxCells = std::int64_t(1) << 27;
}

double GridIndex::auto_cell_size(std::span<const double> coords, int dim) {
    const std::size_t n = coords.size() / dim;
    if (n == 0) return 1.0;
    Vec lo(dim, std::numeric_limits<double>::infinity());
    Vec hi(dim, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i)
        for (int d = 0; d < dim; ++d) {
            lo[d] = std::min(lo[d], coords[i * dim + d]);
            hi[d] = std::max(hi[d], coords[i * dim + d]);
        }
    double max_ext = 0.0;
    for (int d = 0; d < dim; ++d) max_ext = std::max(max_ext, hi[d] - lo[d]);
    if (!(max_ext > 0.0)) return 1.0;  // all points coincide
    // degenerate axes are widened so a line of points in the plane still
    // gets a usable pitch
    double vol = 1.0;
    for (int d = 0; d < dim; ++d) vol *= std::max(hi[d] - lo[d], max_ext / 64.0);
    const double h = std::pow(vol / static_cast<double>(n), 1.0 / dim);
    return std::clamp(h, max_ext / 4096.0, max_ext);
}

GridIndex::GridIndex(std::span<const double> coords, int dim, double cell_size)
    : dim_(dim), h_(cell_size), coords_(coords.begin(), coords.end()) {
    if (dim < 1) throw std::invalid_argument("grid: dimension must be >= 1");
    if (coords.size() % dim != 0) throw std::invalid_argument("grid: ragged coordinates");
    count_ = coords.size() / dim;
    if (count_ == 0) throw std::invalid_argument("grid: empty point set");
    if (!(h_ > 0.0)) h_ = auto_cell_size(coords, dim);

    Vec lo(dim_, std::numeric_limits<double>::infinity());
    Vec hi(dim_, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < count_; ++i)
        for (int d = 0; d < dim_; ++d) {
            lo[d] = std::min(lo[d], coords_[i * dim_ + d]);
            hi[d] = std::max(hi[d], coords_[i * dim_ + d]);
        }

    // widen the pitch until the dense cell table fits
    for (;;) {
        cmin_.assign(dim_, 0);
        cnum_.assign(dim_, 0);
        std::int64_t total = 1;
        bool ok = true;
        for (int d = 0; d < dim_; ++d) {
            cmin_[d] = static_cast<std::int64_t>(std::floor(lo[d] / h_));
            const auto cmax = static_cast<std::int64_t>(std::floor(hi[d] / h_));
            cnum_[d] = cmax - cmin_[d] + 1;
            if (total > kMaxCells / cnum_[d]) {
                ok = false;
                break;
            }
            total *= cnum_[d];
        }
        if (ok) break;
        h_ *= 2.0;
    }

    std::int64_t total = 1;
    for (int d = 0; d < dim_; ++d) total *= cnum_[d];

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(total) + 1, 0);
    std::vector<std::int64_t> c(dim_);
    for (std::size_t i = 0; i < count_; ++i) counts[cell_of(point(i), c) + 1]++;
    for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
    bucket_start_ = counts;
    bucket_items_.resize(count_);
    std::vector<std::uint32_t> fill(bucket_start_.begin(), bucket_start_.end());
    for (std::size_t i = 0; i < count_; ++i) {
        const auto cell = cell_of(point(i), c);
        bucket_items_[fill[cell]++] = static_cast<std::uint32_t>(i);
    }
}

GridIndex::GridIndex(const PointSample& sample, double cell_size)
    : GridIndex(std::span<const double>(sample.coords), sample.dim, cell_size) {}

std::int64_t GridIndex::cell_of(std::span<const double> p, std::vector<std::int64_t>& c) const {
    c.resize(dim_);
    for (int d = 0; d < dim_; ++d) {
        auto v = static_cast<std::int64_t>(std::floor(p[d] / h_)) - cmin_[d];
        c[d] = std::clamp<std::int64_t>(v, 0, cnum_[d] - 1);
    }
    return flat_index(c);
}

std::int64_t GridIndex::flat_index(const std::vector<std::int64_t>& c) const {
    std::int64_t idx = 0;
    for (int d = 0; d < dim_; ++d) idx = idx * cnum_[d] + c[d];
    return idx;
}

void GridIndex::query_ball(std::span<const double> c, double radius,
                           std::vector<std::uint32_t>& out) const {
    out.clear();
    std::vector<std::int64_t> clo(dim_), chi(dim_), cur(dim_);
    for (int d = 0; d < dim_; ++d) {
        clo[d] = std::clamp<std::int64_t>(
            static_cast<std::int64_t>(std::floor((c[d] - radius) / h_)) - cmin_[d], 0, cnum_[d] - 1);
        chi[d] = std::clamp<std::int64_t>(
            static_cast<std::int64_t>(std::floor((c[d] + radius) / h_)) - cmin_[d], 0, cnum_[d] - 1);
        cur[d] = clo[d];
    }
    const double r2 = radius * radius;
    for (;;) {
        const auto cell = flat_index(cur);
        for (auto k = bucket_start_[cell]; k < bucket_start_[cell + 1]; ++k) {
            const auto i = bucket_items_[k];
            if (dist2(point(i), c) <= r2) out.push_back(i);
        }
        int d = dim_ - 1;
        while (d >= 0 && ++cur[d] > chi[d]) cur[d--] = clo[d];
        if (d < 0) break;
    }
}

double GridIndex::nearest_distance(std::span<const double> q, std::int64_t exclude) const {
    std::vector<std::int64_t> cq(dim_), cur(dim_);
    for (int d = 0; d < dim_; ++d)
        cq[d] = static_cast<std::int64_t>(std::floor(q[d] / h_)) - cmin_[d];

    double best2 = std::numeric_limits<double>::infinity();
    // first shell with any valid cell, and the shell beyond which every
    // cell has been visited (the query point may sit far outside the grid)
    std::int64_t shell_min = 0, shell_all = 0;
    for (int d = 0; d < dim_; ++d) {
        std::int64_t below = 0;
        if (cq[d] < 0) below = -cq[d];
        if (cq[d] > cnum_[d] - 1) below = cq[d] - (cnum_[d] - 1);
        shell_min = std::max(shell_min, below);
        shell_all = std::max({shell_all, std::abs(cq[d]), std::abs(cnum_[d] - 1 - cq[d])});
    }

    for (std::int64_t shell = shell_min; shell <= shell_all; ++shell) {
        // cells beyond Chebyshev distance `shell` hold points at least
        // shell * h away, so the scan can stop once best <= shell * h
        // (checked after the shell below has been visited)
        std::vector<std::int64_t> clo(dim_), chi(dim_);
        bool any = false;
        for (int d = 0; d < dim_; ++d) {
            clo[d] = std::max<std::int64_t>(cq[d] - shell, 0);
            chi[d] = std::min<std::int64_t>(cq[d] + shell, cnum_[d] - 1);
            if (clo[d] > chi[d]) {
                any = true;
                break;
            }
        }
        if (!any) {
            cur = clo;
            for (;;) {
                std::int64_t cheb = 0;
                for (int d = 0; d < dim_; ++d) cheb = std::max(cheb, std::abs(cur[d] - cq[d]));
                if (cheb == shell) {
                    const auto cell = flat_index(cur);
                    for (auto k = bucket_start_[cell]; k < bucket_start_[cell + 1]; ++k) {
                        const auto i = bucket_items_[k];
                        if (static_cast<std::int64_t>(i) == exclude) continue;
                        best2 = std::min(best2, dist2(point(i), q));
                    }
                }
                int d = dim_ - 1;
                while (d >= 0 && ++cur[d] > chi[d]) cur[d--] = clo[d];
                if (d < 0) break;
            }
        }
        const double reach = static_cast<double>(shell) * h_;
        if (best2 <= reach * reach) break;
    }
    return std::sqrt(best2);
}

bool GridIndex::contains_point(std::span<const double> q, double tol) const {
    return find_point(q, tol) >= 0;
}

std::int64_t GridIndex::find_point(std::span<const double> q, double tol) const {
    std::vector<std::int64_t> clo(dim_), chi(dim_), cur(dim_);
    for (int d = 0; d < dim_; ++d) {
        clo[d] = std::clamp<std::int64_t>(
            static_cast<std::int64_t>(std::floor((q[d] - tol) / h_)) - cmin_[d], 0, cnum_[d] - 1);
        chi[d] = std::clamp<std::int64_t>(
            static_cast<std::int64_t>(std::floor((q[d] + tol) / h_)) - cmin_[d], 0, cnum_[d] - 1);
        cur[d] = clo[d];
    }
    const double t2 = tol * tol;
    for (;;) {
        const auto cell = flat_index(cur);
        for (auto k = bucket_start_[cell]; k < bucket_start_[cell + 1]; ++k) {
            const auto i = bucket_items_[k];
            if (dist2(point(i), q) <= t2) return static_cast<std::int64_t>(i);
        }
        int d = dim_ - 1;
        while (d >= 0 && ++cur[d] > chi[d]) cur[d--] = clo[d];
        if (d < 0) break;
    }
    return -1;
}

}  // namespace delone
