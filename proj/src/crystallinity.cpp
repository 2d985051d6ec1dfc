#include "delone/crystallinity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "delone/grid_index.hpp"
#include "delone/kernels.hpp"

namespace delone {

namespace {

// largest class; ties broken by canonical key order (classes are sorted)
std::size_t base_class_of(const PatchClassRegistry& reg) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < reg.classes.size(); ++i)
        if (reg.classes[i].members.size() > reg.classes[best].members.size()) best = i;
    return best;
}

bool verify_period_with(const PointSample& sample, const GridIndex& grid,
                        std::span<const double> p) {
    const double plen = norm(p);
    if (plen <= sample.tol) throw std::invalid_argument("period: trivial shift rejected");
    if (!(plen < sample.window.inradius()))
        throw std::invalid_argument("period: shift exceeds window inradius");
    return kernels::shift_closure_omp(sample, grid, p, sample.window.shrunk(plen));
}

}  // namespace

Verdict certify_by_count(const PatchClassRegistry& registry, double R_upper) {
    if (!(R_upper > 0.0)) throw std::invalid_argument("certify: covering radius must be positive");
    Verdict v;
    v.certificate = "patch-count threshold";
    v.T = registry.T;
    v.measured = static_cast<double>(registry.class_count());
    v.threshold = registry.T / (2.0 * R_upper);
    v.kind = (registry.exact && v.measured < v.threshold) ? Verdict::Kind::CertifiedCrystal
                                                          : Verdict::Kind::Inconclusive;
    return v;
}

Verdict certify_by_repetitivity(const RepetitivityResult& m, double T) {
    Verdict v;
    v.certificate = "repetitivity threshold";
    v.T = T;
    v.measured = m.bracket.hi;
    v.threshold = T / 3.0;
    v.kind = (m.exact && std::isfinite(m.bracket.hi) && m.bracket.hi < v.threshold)
                 ? Verdict::Kind::CertifiedCrystal
                 : Verdict::Kind::Inconclusive;
    return v;
}

Verdict certify_period(const RepetitivityResult& m, double T, int n, double kappa_lower) {
    if (n < 1) throw std::invalid_argument("certify: dimension must be >= 1");
    if (!(kappa_lower > 0.0)) throw std::invalid_argument("certify: kappa bound must be positive");
    Verdict v;
    v.certificate = "repetitivity period threshold";
    v.T = T;
    v.measured = m.bracket.hi;
    v.threshold = kappa_lower / (kappa_lower + 2.0) * T;
    v.kind = (m.exact && std::isfinite(m.bracket.hi) && m.bracket.hi < v.threshold)
                 ? Verdict::Kind::CertifiedPeriods
                 : Verdict::Kind::Inconclusive;
    return v;
}

bool verify_period(const PointSample& sample, std::span<const double> p) {
    GridIndex grid(sample);
    return verify_period_with(sample, grid, p);
}

std::vector<Vec> extract_periods(const PatchClassRegistry& registry, const PointSample& sample,
                                 double T) {
    if (registry.classes.empty()) return {};
    const auto base = base_class_of(registry);
    const auto sigma = registry.sigma_coords(base);
    const int dim = registry.dim;
    const auto count = sigma.size() / dim;
    const double reach = (2.0 / 3.0) * T;

    // candidate differences within (2/3)T, deduplicated on the tol grid
    std::map<std::vector<std::int64_t>, Vec> candidates;
    if (count >= 2) {
        GridIndex sigma_grid(sigma, dim, GridIndex::auto_cell_size(sigma, dim));
        std::vector<std::uint32_t> nbrs;
        for (std::size_t i = 0; i < count; ++i) {
            std::span<const double> x(sigma.data() + i * dim, static_cast<std::size_t>(dim));
            sigma_grid.query_ball(x, reach, nbrs);
            for (const auto j : nbrs) {
                if (j == i) continue;
                const auto y = sigma_grid.point(j);
                if (!(dist(x, y) < reach)) continue;
                Vec d = sub(y, x);
                if (norm(d) <= sample.tol) continue;
                std::vector<std::int64_t> key(dim);
                for (int k = 0; k < dim; ++k) key[k] = std::llround(d[k] / sample.tol);
                candidates.emplace(std::move(key), std::move(d));
            }
        }
    }

    std::vector<Vec> cand_list;
    cand_list.reserve(candidates.size());
    for (auto& [k, d] : candidates)
        if (norm(d) < sample.window.inradius()) cand_list.push_back(d);

    GridIndex grid(sample);
    std::vector<char> ok(cand_list.size(), 0);
    const auto n_cand = static_cast<std::int64_t>(cand_list.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_cand; ++i)
        ok[i] = verify_period_with(sample, grid, cand_list[i]) ? 1 : 0;

    std::vector<Vec> verified;
    for (std::int64_t i = 0; i < n_cand; ++i)
        if (ok[i]) verified.push_back(std::move(cand_list[i]));
    std::sort(verified.begin(), verified.end(), [](const Vec& a, const Vec& b) {
        const double na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return verified;
}

bool stagnation_test(const PointSample& sample, double U, double V, double R, double tol,
                     double resolution) {
    if (!(V > U + 2.0 * R)) throw std::invalid_argument("stagnation: gap too small");
    const auto reg_u = patch_census(sample, U, tol, resolution);
    const auto reg_v = patch_census(sample, V, tol, resolution);
    if (!reg_u.exact || !reg_v.exact)
        throw std::runtime_error("stagnation: census not exact on this window");
    return reg_u.class_count() == reg_v.class_count();
}

CosetDecomposition coset_decomposition(const PointSample& sample, double U, double tol,
                                       double resolution) {
    const auto reg = patch_census(sample, U, tol, resolution);
    if (!reg.exact) throw std::runtime_error("coset: census not exact on this window");
    const int dim = reg.dim;
    const auto base = base_class_of(reg);
    const auto sigma = reg.sigma_coords(base);
    const auto count = sigma.size() / dim;
    if (count < static_cast<std::size_t>(dim) + 1)
        throw std::runtime_error("coset: not stagnated / window artifact");

    // base point: class member nearest the window center
    const Vec wc = reg.window.inball_center();
    std::size_t x0_idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        std::span<const double> p(sigma.data() + i * dim, static_cast<std::size_t>(dim));
        const double d = dist2(p, wc);
        if (d < best) {
            best = d;
            x0_idx = i;
        }
    }
    Vec x0(sigma.begin() + x0_idx * dim, sigma.begin() + (x0_idx + 1) * dim);

    // shortest independent difference vectors, then reduction
    std::vector<Vec> diffs;
    diffs.reserve(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == x0_idx) continue;
        diffs.emplace_back(
            sub({sigma.data() + i * dim, static_cast<std::size_t>(dim)}, x0));
    }
    std::sort(diffs.begin(), diffs.end(), [](const Vec& a, const Vec& b) {
        const double na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });

    Matrix basis;
    Matrix gs;  // Gram-Schmidt of the chosen vectors
    for (const auto& d : diffs) {
        if (static_cast<int>(basis.size()) == dim) break;
        Vec resid = d;
        for (const auto& g : gs) {
            const double g2 = norm2(g);
            if (g2 <= 0.0) continue;
            const double mu = dot(resid, g) / g2;
            for (int k = 0; k < dim; ++k) resid[k] -= mu * g[k];
        }
        if (norm(resid) > 1e-7 * std::max(1.0, norm(d))) {
            basis.push_back(d);
            gs.push_back(std::move(resid));
        }
    }
    if (static_cast<int>(basis.size()) != dim)
        throw std::runtime_error("coset: base class does not span the space");
    basis = lll_reduce(std::move(basis));
    for (auto& b : basis) {
        for (int k = 0; k < dim; ++k) {
            if (b[k] > 0.0) break;
            if (b[k] < 0.0) {
                for (int j = 0; j < dim; ++j) b[j] = -b[j];
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end());

    CosetDecomposition dec;
    dec.base_point = x0;
    dec.basis = basis;

    // one offset per class, reduced into the fundamental cell
    for (std::size_t c = 0; c < reg.classes.size(); ++c) {
        const auto m = reg.classes[c].members.front();
        Vec rep(reg.center_coords.begin() + m * dim, reg.center_coords.begin() + (m + 1) * dim);
        Vec u = lattice_coords(basis, sub(rep, x0));
        Vec off(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            const double f = u[i] - std::floor(u[i]);
            // snap coordinates that are a whole lattice step within tol
            const double fs = (std::min(f, 1.0 - f) * norm(basis[i]) <= tol) ? 0.0 : f;
            for (int k = 0; k < dim; ++k) off[k] += fs * basis[i][k];
        }
        dec.offsets.push_back(std::move(off));
    }

    // every center must sit on its class coset
    double residual = 0.0;
    for (std::size_t c = 0; c < reg.center_count(); ++c) {
        std::span<const double> p(reg.center_coords.data() + c * dim,
                                  static_cast<std::size_t>(dim));
        Vec rel = sub(p, x0);
        const auto& off = dec.offsets[reg.class_of[c]];
        for (int k = 0; k < dim; ++k) rel[k] -= off[k];
        Vec u = lattice_coords(basis, rel);
        Vec err(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            const double f = u[i] - std::round(u[i]);
            for (int k = 0; k < dim; ++k) err[k] += f * basis[i][k];
        }
        residual = std::max(residual, norm(err));
    }
    dec.residual = residual;
    if (residual > tol) throw std::runtime_error("coset: not stagnated / window artifact");
    return dec;
}

}  // namespace delone
