#ifndef DELONE_GRID_INDEX_HPP
#define DELONE_GRID_INDEX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "delone/geometry.hpp"

namespace delone {

// Uniform bucket grid over a flat coordinate array.  Buckets hold point
// indices in insertion order, so every query result is deterministic.
class GridIndex {
public:
    GridIndex(std::span<const double> coords, int dim, double cell_size);
    explicit GridIndex(const PointSample& sample, double cell_size = 0.0);

    int dim() const { return dim_; }
    double cell_size() const { return h_; }
    std::size_t point_count() const { return count_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }

    // indices of points p with |p - c| <= radius, ascending cell order
    void query_ball(std::span<const double> c, double radius,
                    std::vector<std::uint32_t>& out) const;

    // Euclidean distance from q to the nearest indexed point; `exclude`
    // skips one index (for nearest-neighbor-of-a-member queries)
    double nearest_distance(std::span<const double> q, std::int64_t exclude = -1) const;

    // true iff some point lies within tol of q
    bool contains_point(std::span<const double> q, double tol) const;
    // index of a point within tol of q, or -1
    std::int64_t find_point(std::span<const double> q, double tol) const;

    // density-based default pitch for a coordinate array
    static double auto_cell_size(std::span<const double> coords, int dim);

private:
    std::int64_t cell_of(std::span<const double> p, std::vector<std::int64_t>& c) const;
    std::int64_t flat_index(const std::vector<std::int64_t>& c) const;

    int dim_ = 0;
    double h_ = 1.0;
    std::size_t count_ = 0;
    std::vector<double> coords_;     // owned copy, row-major
    std::vector<std::int64_t> cmin_; // integer cell bounds
    std::vector<std::int64_t> cnum_;
    std::vector<std::uint32_t> bucket_start_;  // CSR layout
    std::vector<std::uint32_t> bucket_items_;
};

}  // namespace delone

#endif
