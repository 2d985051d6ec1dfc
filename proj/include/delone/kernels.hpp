#ifndef DELONE_KERNELS_HPP
#define DELONE_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "delone/geometry.hpp"
#include "delone/grid_index.hpp"

// Data-parallel inner loops, each in two variants: an OpenMP kernel used in
// production and a serial reference the tests compare against.  All
// reductions are min/max/and, so results are schedule-independent.

namespace delone::kernels {

// --- minimum nearest-neighbor distance over the indexed points ------------

inline double min_nn_distance_serial(const GridIndex& grid) {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t n = static_cast<std::int64_t>(grid.point_count());
    for (std::int64_t i = 0; i < n; ++i)
        best = std::min(best, grid.nearest_distance(grid.point(i), i));
    return best;
}

inline double min_nn_distance_omp(const GridIndex& grid) {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t n = static_cast<std::int64_t>(grid.point_count());
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t i = 0; i < n; ++i)
        best = std::min(best, grid.nearest_distance(grid.point(i), i));
    return best;
}

// --- maximum distance-to-sample over an implicit evaluation set -----------
//
// fn(i, buf) writes evaluation point i into buf and returns false for
// positions that should be skipped.

template <class PointFn>
double max_nn_distance_serial(std::size_t count, int dim, PointFn fn, const GridIndex& grid) {
    double worst = 0.0;
    std::vector<double> buf(dim);
    for (std::size_t i = 0; i < count; ++i) {
        if (!fn(i, buf.data())) continue;
        worst = std::max(worst, grid.nearest_distance({buf.data(), buf.size()}));
    }
    return worst;
}

template <class PointFn>
double max_nn_distance_omp(std::size_t count, int dim, PointFn fn, const GridIndex& grid) {
    double worst = 0.0;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel reduction(max : worst)
    {
        std::vector<double> buf(dim);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            if (!fn(static_cast<std::size_t>(i), buf.data())) continue;
            worst = std::max(worst, grid.nearest_distance({buf.data(), buf.size()}));
        }
    }
    return worst;
}

// --- translation-closure scan (is p a period of the windowed sample?) -----
//
// For every sample point x inside `inner`, both x+p and x-p must be sample
// points within tol.

inline bool shift_closure_serial(const PointSample& sample, const GridIndex& grid,
                                 std::span<const double> p, const Region& inner) {
    const std::int64_t n = static_cast<std::int64_t>(sample.size());
    bool ok = true;
    std::vector<double> fwd(sample.dim), bwd(sample.dim);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto x = sample.point(i);
        if (!inner.contains(x)) continue;
        for (int d = 0; d < sample.dim; ++d) {
            fwd[d] = x[d] + p[d];
            bwd[d] = x[d] - p[d];
        }
        if (!grid.contains_point({fwd.data(), fwd.size()}, sample.tol) ||
            !grid.contains_point({bwd.data(), bwd.size()}, sample.tol)) {
            ok = false;
            break;
        }
    }
    return ok;
}

inline bool shift_closure_omp(const PointSample& sample, const GridIndex& grid,
                              std::span<const double> p, const Region& inner) {
    const std::int64_t n = static_cast<std::int64_t>(sample.size());
    bool ok = true;
#pragma omp parallel reduction(&& : ok)
    {
        std::vector<double> fwd(sample.dim), bwd(sample.dim);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            if (!ok) continue;
            const auto x = sample.point(i);
            if (!inner.contains(x)) continue;
            for (int d = 0; d < sample.dim; ++d) {
                fwd[d] = x[d] + p[d];
                bwd[d] = x[d] - p[d];
            }
            if (!grid.contains_point({fwd.data(), fwd.size()}, sample.tol) ||
                !grid.contains_point({bwd.data(), bwd.size()}, sample.tol))
                ok = false;
        }
    }
    return ok;
}

}  // namespace delone::kernels

#endif
