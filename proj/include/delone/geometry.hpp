#ifndef DELONE_GEOMETRY_HPP
#define DELONE_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace delone {

// n-dimensional point or displacement, coordinates in length units.
using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }
inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

inline double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(dist2(a, b));
}

inline Vec sub(std::span<const double> a, std::span<const double> b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(std::span<const double> a, std::span<const double> b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scale(std::span<const double> a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// Closed interval [lo, hi]; used for certified brackets of real quantities.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Bounded evaluation region: open-ended "where" for enumeration and scans.
// Containment is closed on the boundary.
class Region {
public:
    enum class Kind { Ball, Box };

    static Region ball(Vec center, double radius);
    static Region box(Vec lo, Vec hi);
    // [lo, hi] on every axis
    static Region cube(int dim, double lo, double hi);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    const Vec& center() const { return center_; }
    double radius() const { return radius_; }
    const Vec& lo() const { return lo_; }
    const Vec& hi() const { return hi_; }

    bool contains(std::span<const double> p) const;
    // true iff the closed ball B(c; r) lies inside the region
    bool contains_ball(std::span<const double> c, double r) const;

    // axis-aligned bounding box
    void bounds(Vec& lo, Vec& hi) const;

    // region offset inward by t (ball: radius - t, box: sides - 2t);
    // throws if the result is empty
    Region shrunk(double t) const;

    // radius of the largest ball contained in the region
    double inradius() const;
    Vec inball_center() const;

private:
    Kind kind_ = Kind::Box;
    int dim_ = 0;
    Vec center_;
    double radius_ = 0.0;
    Vec lo_, hi_;
};

// Finite excerpt of a point set together with the window it faithfully
// covers.  Coordinates are stored flat, row-major.
struct PointSample {
    int dim = 0;
    double tol = 1e-9;  // coordinate equivalence tolerance
    Region window;
    std::vector<double> coords;
    std::string source;
    std::optional<double> declared_r;  // lower bound on packing radius
    std::optional<double> declared_R;  // upper bound on covering radius

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }

    Vec point_vec(std::size_t i) const {
        auto p = point(i);
        return Vec(p.begin(), p.end());
    }

    void push_point(std::span<const double> p) {
        coords.insert(coords.end(), p.begin(), p.end());
    }

    // checks window containment and, when declared_r is set, the minimum
    // spacing guarantee; throws on violation
    void validate() const;
};

struct DeloneConstants {
    double r = 0.0;      // packing radius
    double R = 0.0;      // covering radius (upper end of the bracket)
    double kappa = 0.0;  // R / r
};

inline const double golden_ratio = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace delone

#endif
