#ifndef DELONE_KAPPA_HPP
#define DELONE_KAPPA_HPP

#include <optional>
#include <string>
#include <vector>

#include "delone/geometry.hpp"
#include "delone/linalg.hpp"

namespace delone {

// Known bounds on the packing-covering constants in one dimension n.
struct KappaReport {
    int n = 0;
    double delone_lower = 0.0;   // sqrt(2n/(n+1))
    double delone_upper = 0.0;   // 2 (saturated packings)
    double lattice_upper = 0.0;  // Ryshkov sqrt((n+2)/3), Leech value at n = 24
    std::optional<double> exact; // n = 1, 2 only
    std::vector<std::string> sources;
};

// Length of the shortest nonzero lattice vector.
double lattice_shortest_vector(const Matrix& basis);

// Covering radius of the lattice.  Exact (lo == hi) for n <= 4 via
// Voronoi-relevant vectors; a certified grid bracket for 5 <= n <= 8.
Interval lattice_covering_radius(const Matrix& basis);

// R / r of the lattice; uses the upper end of the covering bracket.
double kappa_lattice(const Matrix& basis);

KappaReport kappa_bounds(int n);

// Period-certificate coefficient kappa/(kappa+2), fed by the exact value
// when known and by the proven lower bound otherwise (which only shrinks
// the threshold, keeping certificates sound).
double c_threshold(int n);

// Named bases: Z1..Z8, hex (= A2), fcc (= A3), bcc (= A3*).
Matrix named_lattice(const std::string& name);
std::vector<std::string> lattice_catalog();

}  // namespace delone

#endif
