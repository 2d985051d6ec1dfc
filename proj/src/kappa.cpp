#include "delone/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "delone/grid_index.hpp"

namespace delone {

namespace {

Vec origin(int n) { return Vec(n, 0.0); }

// crude covering-radius upper bound: half the cell diameter
double rough_covering_bound(const Matrix& basis) {
    double s = 0.0;
    for (const auto& b : basis) s += norm(b);
    return 0.5 * s;
}

// Voronoi-relevant vectors: per nonzero parity class of coefficients, the
// strict minimum-norm pair +-v (ties mean the class contributes no facet).
std::vector<Vec> relevant_vectors(const Matrix& basis, double enum_radius) {
    const int n = static_cast<int>(basis.size());
    auto cands = enumerate_lattice(basis, origin(n), enum_radius);

    std::map<std::vector<int>, std::vector<const LatticeVector*>> by_parity;
    for (const auto& lv : cands) {
        if (lv.norm2 <= 0.0) continue;
        std::vector<int> par(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            par[i] = static_cast<int>(((lv.coeffs[i] % 2) + 2) % 2);
            zero = zero && par[i] == 0;
        }
        if (zero) continue;  // v in 2*Lambda never defines a facet
        by_parity[par].push_back(&lv);
    }

    std::vector<Vec> rel;
    for (auto& [par, vs] : by_parity) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto* v : vs) best = std::min(best, v->norm2);
        std::vector<const LatticeVector*> minima;
        for (const auto* v : vs)
            if (v->norm2 <= best * (1.0 + 1e-9)) minima.push_back(v);
        if (minima.size() == 2) {
            rel.push_back(minima[0]->point);
            rel.push_back(minima[1]->point);
        }
    }
    return rel;
}

Interval covering_radius_exact(const Matrix& basis) {
    const int n = static_cast<int>(basis.size());
    const double rough = rough_covering_bound(basis);
    const auto rel = relevant_vectors(basis, 2.0 * rough * (1.0 + 1e-9));
    if (rel.size() < static_cast<std::size_t>(n))
        throw std::runtime_error("kappa: relevant-vector search failed");

    double scale = 0.0;
    for (const auto& v : rel) scale = std::max(scale, norm2(v));
    const double eps = 1e-9 * scale;

    // Voronoi vertices: solutions of 2<x,v_i> = |v_i|^2 for n facets,
    // kept when inside every half-space.
    double worst2 = 0.0;
    const int m = static_cast<int>(rel.size());
    std::vector<int> idx(n);
    auto check_vertex = [&](const Vec& x) {
        for (const auto& w : rel)
            if (2.0 * dot(x, w) > norm2(w) + eps) return;
        worst2 = std::max(worst2, norm2(x));
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == n) {
            Matrix a(n);
            Vec b(n);
            for (int i = 0; i < n; ++i) {
                a[i] = rel[idx[i]];
                b[i] = 0.5 * norm2(rel[idx[i]]);
            }
            if (std::abs(determinant(a)) < 1e-9 * std::pow(std::sqrt(scale), n)) return;
            check_vertex(solve_linear(std::move(a), std::move(b)));
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    const double r = std::sqrt(worst2);
    return {r, r};
}

// coefficient-space grid scan; certified but coarse, for n in [5, 8]
Interval covering_radius_bracket(const Matrix& basis) {
    const int n = static_cast<int>(basis.size());
    const double rough = rough_covering_bound(basis);
    Vec cell_center(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < n; ++d) cell_center[d] += 0.5 * basis[i][d];

    double cell_half_diam = 0.0;
    for (const auto& b : basis) cell_half_diam += 0.5 * norm(b);
    const auto pts = enumerate_lattice(basis, cell_center, rough + cell_half_diam + 1e-9);
    std::vector<double> coords;
    coords.reserve(pts.size() * n);
    for (const auto& lv : pts) coords.insert(coords.end(), lv.point.begin(), lv.point.end());
    GridIndex grid(coords, n, GridIndex::auto_cell_size(coords, n));

    const int steps = std::max(2, static_cast<int>(std::floor(std::pow(2e7, 1.0 / n))));
    double sum_b = 0.0;
    for (const auto& b : basis) sum_b += norm(b);
    const double disp = 0.5 * sum_b / steps;

    double worst = 0.0;
    std::vector<std::int64_t> c(n, 0);
    Vec x(n);
    for (;;) {
        for (int d = 0; d < n; ++d) x[d] = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = static_cast<double>(c[i]) / steps;
            for (int d = 0; d < n; ++d) x[d] += u * basis[i][d];
        }
        worst = std::max(worst, grid.nearest_distance(x));
        int d = n - 1;
        while (d >= 0 && ++c[d] > steps) c[d--] = 0;
        if (d < 0) break;
    }
    return {worst, worst + disp};
}

}  // namespace

double lattice_shortest_vector(const Matrix& basis) {
    const int n = static_cast<int>(basis.size());
    if (n < 1) throw std::invalid_argument("lattice: empty basis");
    if (std::abs(determinant(basis)) < 1e-12) throw std::invalid_argument("lattice: basis is singular");
    const Matrix red = lll_reduce(basis);
    double bound = std::numeric_limits<double>::infinity();
    for (const auto& b : red) bound = std::min(bound, norm(b));
    double best2 = std::numeric_limits<double>::infinity();
    for (const auto& lv : enumerate_lattice(red, origin(n), bound * (1.0 + 1e-12)))
        if (lv.norm2 > 0.0) best2 = std::min(best2, lv.norm2);
    return std::sqrt(best2);
}

Interval lattice_covering_radius(const Matrix& basis) {
    const int n = static_cast<int>(basis.size());
    if (n < 1) throw std::invalid_argument("lattice: empty basis");
    for (const auto& row : basis)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("lattice: basis must be square");
    if (std::abs(determinant(basis)) < 1e-12) throw std::invalid_argument("lattice: basis is singular");
    if (n == 1) {
        const double r = 0.5 * std::abs(basis[0][0]);
        return {r, r};
    }
    const Matrix red = lll_reduce(basis);
    if (n <= 4) return covering_radius_exact(red);
    if (n <= 8) return covering_radius_bracket(red);
    throw std::invalid_argument("lattice: dimensions above 8 unsupported");
}

double kappa_lattice(const Matrix& basis) {
    const double r = 0.5 * lattice_shortest_vector(basis);
    const double R = lattice_covering_radius(basis).hi;
    return R / r;
}

KappaReport kappa_bounds(int n) {
    if (n < 1) throw std::invalid_argument("kappa: dimension must be >= 1");
    KappaReport rep;
    rep.n = n;
    rep.delone_lower = std::sqrt(2.0 * n / (n + 1.0));
    rep.delone_upper = 2.0;
    rep.lattice_upper = std::sqrt((n + 2.0) / 3.0);
    rep.sources = {"simplex ratio lower bound", "saturated packing upper bound",
                   "Ryshkov lattice bound"};
    if (n == 1) {
        rep.exact = 1.0;
        rep.sources.push_back("integer lattice");
    } else if (n == 2) {
        rep.exact = 2.0 / std::sqrt(3.0);
        rep.sources.push_back("hexagonal lattice");
    } else if (n == 24) {
        // stored Leech-lattice value; not computed here
        rep.lattice_upper = std::sqrt(2.0);
        rep.sources.push_back("Leech lattice");
    }
    rep.lattice_upper = std::max(rep.lattice_upper, rep.delone_lower);
    return rep;
}

double c_threshold(int n) {
    const KappaReport rep = kappa_bounds(n);
    const double kappa = rep.exact ? *rep.exact : rep.delone_lower;
    return kappa / (kappa + 2.0);
}

Matrix named_lattice(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'z')) {
        const int n = std::stoi(name.substr(1));
        if (n < 1 || n > 8) throw std::invalid_argument("lattice: Z1..Z8 supported");
        return identity_matrix(n);
    }
    if (name == "hex" || name == "A2")
        return {{1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    if (name == "fcc" || name == "A3")
        return {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
    if (name == "bcc" || name == "A3*")
        return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.5, 0.5, 0.5}};
    throw std::invalid_argument("lattice: unknown name '" + name + "'");
}

std::vector<std::string> lattice_catalog() {
    return {"Z1", "Z2", "Z3", "Z4", "hex", "fcc", "bcc"};
}

}  // namespace delone
