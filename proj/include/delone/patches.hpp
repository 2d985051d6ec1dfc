#ifndef DELONE_PATCHES_HPP
#define DELONE_PATCHES_HPP

#include <cstdint>
#include <vector>

#include "delone/core.hpp"
#include "delone/geometry.hpp"

namespace delone {

// T-patch anchored at a set point: member offsets relative to the center,
// strictly inside the open ball of radius T.  Offsets include the zero
// vector and are sorted by their quantized form.
struct Patch {
    Vec center;
    double radius = 0.0;
    std::vector<Vec> offsets;
};

// Translation-invariant key: offsets snapped to a grid of pitch tol and
// sorted.  `key_shifted` snaps to the half-shifted grid; `straddle` marks
// patches with a coordinate too close to a cell boundary to trust a single
// grid.
struct CanonicalPatch {
    double radius = 0.0;
    std::vector<std::int64_t> key;
    std::vector<std::int64_t> key_shifted;
    bool straddle = false;
};

struct PatchClass {
    std::vector<std::int64_t> key;       // canonical key (smallest member key)
    std::vector<double> rep_offsets;     // representative offsets, flat
    std::vector<std::uint32_t> members;  // indices into the center arrays
};

// Partition of the margin-valid centers of a sample into translation
// classes of T-patches.
struct PatchClassRegistry {
    double T = 0.0;
    double tol = 0.0;
    int dim = 0;
    Region window;
    std::vector<std::uint32_t> center_ids;  // sample point index per center
    std::vector<double> center_coords;      // flat, aligned with center_ids
    std::vector<PatchClass> classes;        // sorted by key
    std::vector<std::uint32_t> class_of;    // class index per center
    Interval m_bracket;                     // bootstrap repetitivity estimate
    bool exact = false;  // window inradius >= m_bracket.hi + T

    std::size_t class_count() const { return classes.size(); }
    std::size_t center_count() const { return center_ids.size(); }
    // flat coordinates of the centers of one class (its Sigma_P within the window)
    std::vector<double> sigma_coords(std::size_t class_id) const;
};

struct RepetitivityResult {
    Interval bracket;
    bool exact = false;  // lower-bound-only when false
};

struct CurveRow {
    double T = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;
};

struct ComplexityCurve {
    enum class Kind { PatchCount, Repetitivity };
    Kind kind = Kind::PatchCount;
    std::vector<CurveRow> rows;
};

// Patch of radius T around a sample member.  Throws "margin violation"
// when B(center; T) leaves the window and "center not in sample" when the
// center is not a member within tol.
Patch extract_patch(const PointSample& sample, std::span<const double> center, double T);

CanonicalPatch canonicalize(const Patch& patch, double tol);

// Census over every margin-valid center.  `resolution` controls the grid
// pitch of the bootstrap repetitivity scan in dimension >= 2; pass 0 for
// an automatic pitch.
PatchClassRegistry patch_census(const PointSample& sample, double T, double tol,
                                double resolution = 0.0);

// M_X(T) as the largest covering radius of a class center set over the
// margin-valid inner region.
RepetitivityResult repetitivity(const PointSample& sample, double T, double tol,
                                double resolution);
RepetitivityResult repetitivity_of(const PatchClassRegistry& registry, double resolution = 0.0);

ComplexityCurve patch_count_curve(const PointSample& sample, const std::vector<double>& T_list,
                                  double tol, double resolution = 0.0);
ComplexityCurve repetitivity_curve(const PointSample& sample, const std::vector<double>& T_list,
                                   double tol, double resolution);

}  // namespace delone

#endif
