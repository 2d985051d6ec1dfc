#ifndef DELONE_LINALG_HPP
#define DELONE_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "delone/geometry.hpp"

namespace delone {

// Dense square matrix as a list of rows.  A lattice basis stores one basis
// vector per row; the lattice point with integer coefficients k is
// sum_i k[i] * rows[i].
using Matrix = std::vector<Vec>;

Matrix identity_matrix(int n);
Matrix transpose(const Matrix& a);
double determinant(Matrix a);
// solves a^T x = rhs when `rows_are_vectors`; plain a x = rhs otherwise
Vec solve_linear(Matrix a, Vec rhs);
Matrix invert(const Matrix& a);

Vec lattice_point(const Matrix& basis, std::span<const std::int64_t> coeffs);
// real coefficients t with x = sum t_i basis[i]
Vec lattice_coords(const Matrix& basis, std::span<const double> x);

// LLL-reduced copy of the basis (delta = 0.75, floating point)
Matrix lll_reduce(Matrix basis);

struct LatticeVector {
    std::vector<std::int64_t> coeffs;
    Vec point;
    double norm2;
};

// All lattice vectors v with |v - center| <= radius (Fincke-Pohst).
// Throws if the candidate count explodes (degenerate basis).
std::vector<LatticeVector> enumerate_lattice(const Matrix& basis, std::span<const double> center,
                                             double radius);

}  // namespace delone

#endif
