#ifndef DELONE_GENERATORS_HPP
#define DELONE_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delone/geometry.hpp"
#include "delone/linalg.hpp"

namespace delone {

// Immutable description of an infinite Delone set with exact enumeration of
// the points inside any bounded region.  Each constructor validates its
// preconditions and, where the construction carries spacing guarantees,
// records declared packing/covering bounds that later computations are
// checked against.
class Generator {
public:
    enum class Kind { Crystal, Beatty, Product, CutProject, Perturbed };

    // lattice + finite offset set; offsets are reduced into the
    // fundamental cell and must be distinct modulo the lattice
    static Generator crystal(Matrix basis, std::vector<Vec> offsets);

    // Y(alpha; delta) = { m + delta * frac(m * alpha) : m integer }
    static Generator beatty(double alpha, double delta);

    // Y(tau; -1/sqrt(5)), the Fibonacci quasicrystal
    static Generator fibonacci();

    // factor x eta*Z^{n-1} for a one-dimensional factor
    static Generator product(Generator factor, double eta, int dim);

    // { lambda + frac(phi(lambda)) * delta_vec : lambda in Lambda }
    static Generator cut_project(Matrix basis, Vec phi, Vec delta_vec);

    // base with the single point at `target` moved by `displacement`
    static Generator perturbed(Generator base, Vec target, Vec displacement);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    std::string id() const;
    std::optional<double> declared_r() const { return declared_r_; }
    std::optional<double> declared_R() const { return declared_R_; }

    // every point of the set inside the region (closed containment),
    // sorted lexicographically
    std::vector<Vec> points_in(const Region& region) const;

    // PointSample over the window, with source/declared metadata filled in
    // and the declared spacing checked
    PointSample sample(const Region& window, double tol = 1e-9) const;

    // Beatty sets only: (index m, point) for all points in [lo, hi]
    std::vector<std::pair<std::int64_t, double>> beatty_points_in(double lo, double hi) const;

    // parameter access for serialization
    const Matrix& basis() const { return basis_; }
    const std::vector<Vec>& offsets() const { return offsets_; }
    double alpha() const { return alpha_; }
    double delta() const { return delta_; }
    double eta() const { return eta_; }
    const Vec& phi() const { return phi_; }
    const Vec& delta_vec() const { return delta_vec_; }
    const Generator& child() const { return *child_; }
    const Vec& target() const { return target_; }
    const Vec& displacement() const { return displacement_; }

private:
    Generator() = default;

    Kind kind_ = Kind::Crystal;
    int dim_ = 0;
    std::optional<double> declared_r_;
    std::optional<double> declared_R_;

    Matrix basis_;               // crystal, cut_project
    std::vector<Vec> offsets_;   // crystal
    double alpha_ = 0.0;         // beatty
    double delta_ = 0.0;         // beatty
    double eta_ = 0.0;           // product
    Vec phi_;                    // cut_project
    Vec delta_vec_;              // cut_project
    std::shared_ptr<const Generator> child_;  // product factor / perturbed base
    Vec target_;                 // perturbed
    Vec displacement_;           // perturbed
};

}  // namespace delone

#endif
