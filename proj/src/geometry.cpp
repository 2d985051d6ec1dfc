#include "delone/geometry.hpp"

#include <algorithm>
#include <limits>

namespace delone {

Region Region::ball(Vec center, double radius) {
    if (center.empty()) throw std::invalid_argument("region: empty center");
    if (!(radius > 0.0)) throw std::invalid_argument("region: radius must be positive");
    Region r;
    r.kind_ = Kind::Ball;
    r.dim_ = static_cast<int>(center.size());
    r.center_ = std::move(center);
    r.radius_ = radius;
    return r;
}

Region Region::box(Vec lo, Vec hi) {
    if (lo.empty() || lo.size() != hi.size())
        throw std::invalid_argument("region: box corners must have equal nonzero dimension");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw std::invalid_argument("region: box requires lo < hi componentwise");
    Region r;
    r.kind_ = Kind::Box;
    r.dim_ = static_cast<int>(lo.size());
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

Region Region::cube(int dim, double lo, double hi) {
    return box(Vec(dim, lo), Vec(dim, hi));
}

bool Region::contains(std::span<const double> p) const {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("region: dimension mismatch");
    if (kind_ == Kind::Ball) return dist2(p, center_) <= radius_ * radius_;
    for (int i = 0; i < dim_; ++i)
        if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    return true;
}

bool Region::contains_ball(std::span<const double> c, double r) const {
    if (static_cast<int>(c.size()) != dim_) throw std::invalid_argument("region: dimension mismatch");
    if (kind_ == Kind::Ball) return dist(c, center_) + r <= radius_;
    for (int i = 0; i < dim_; ++i)
        if (c[i] - r < lo_[i] || c[i] + r > hi_[i]) return false;
    return true;
}

void Region::bounds(Vec& lo, Vec& hi) const {
    if (kind_ == Kind::Ball) {
        lo = center_;
        hi = center_;
        for (int i = 0; i < dim_; ++i) {
            lo[i] -= radius_;
            hi[i] += radius_;
        }
    } else {
        lo = lo_;
        hi = hi_;
    }
}

Region Region::shrunk(double t) const {
    if (t < 0.0) throw std::invalid_argument("region: negative shrink");
    if (kind_ == Kind::Ball) {
        if (!(radius_ - t > 0.0)) throw std::invalid_argument("region: shrink leaves empty region");
        return ball(center_, radius_ - t);
    }
    Vec lo = lo_, hi = hi_;
    for (int i = 0; i < dim_; ++i) {
        lo[i] += t;
        hi[i] -= t;
        if (!(lo[i] < hi[i])) throw std::invalid_argument("region: shrink leaves empty region");
    }
    return box(std::move(lo), std::move(hi));
}

double Region::inradius() const {
    if (kind_ == Kind::Ball) return radius_;
    double r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim_; ++i) r = std::min(r, 0.5 * (hi_[i] - lo_[i]));
    return r;
}

Vec Region::inball_center() const {
    if (kind_ == Kind::Ball) return center_;
    Vec c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = 0.5 * (lo_[i] + hi_[i]);
    return c;
}

void PointSample::validate() const {
    if (dim < 1) throw std::invalid_argument("sample: dimension must be >= 1");
    if (window.dim() != dim) throw std::invalid_argument("sample: window dimension mismatch");
    if (coords.size() % dim != 0) throw std::invalid_argument("sample: ragged coordinate array");
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        if (!window.contains(point(i)))
            throw std::invalid_argument("sample: point outside window");
    if (declared_r && n >= 2) {
        const double min_allowed = 2.0 * *declared_r - 4.0 * tol;
        // O(n^2) fallback is avoided by callers with large samples; the
        // generator path validates through the grid index instead.
        if (n <= 4096) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (dist(point(i), point(j)) < min_allowed)
                        throw std::runtime_error("sample: declared packing radius violated");
        }
    }
}

}  // namespace delone
