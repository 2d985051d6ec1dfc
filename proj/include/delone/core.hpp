#ifndef DELONE_CORE_HPP
#define DELONE_CORE_HPP

#include <span>

#include "delone/geometry.hpp"
#include "delone/grid_index.hpp"

namespace delone {

// Lazily enumerated evaluation set covering a region at a given pitch.
// Box regions use an axis grid that includes both faces; ball regions use
// the bounding-box grid with near-boundary points projected onto the
// sphere.  Every point of the region is within dispersion() of some valid
// evaluation point.
class RegionEvalGrid {
public:
    RegionEvalGrid(const Region& region, double pitch);

    std::size_t count() const { return count_; }
    int dim() const { return region_.dim(); }
    double dispersion() const { return dispersion_; }

    // writes evaluation point i; returns false for skipped slots
    bool fill(std::size_t i, double* buf) const;

private:
    Region region_;
    double pitch_ = 0.0;
    double dispersion_ = 0.0;
    std::size_t count_ = 0;
    std::vector<std::vector<double>> axis_;  // per-axis coordinates
};

// Minimum distance over distinct point pairs.  The packing radius is half
// of this value.  Throws "insufficient points" for samples of size < 2.
double min_pairwise_distance(const PointSample& sample);

// Certified bracket for sup over `region` of the distance to the nearest
// sample point.  Exact in dimension 1; grid-scanned at `resolution`
// otherwise, with hi - lo <= resolution * sqrt(n).
Interval covering_radius(const PointSample& sample, const Region& region, double resolution);

// Same computation for a bare coordinate array (used for center sets).
Interval covering_radius_points(std::span<const double> coords, int dim, const Region& region,
                                double resolution);

// r from the pair scan, R from the upper end of the covering bracket.
DeloneConstants delone_constants(const PointSample& sample, const Region& region,
                                 double resolution);

// Two-pass covering bracket over the sample's own window: the first pass
// estimates the boundary margin, the second evaluates over the shrunk
// region where the distance field is not truncated.  Pass resolution 0
// for an automatic pitch.
Interval covering_radius_auto(const PointSample& sample, double resolution = 0.0);

}  // namespace delone

#endif
