#include "delone/patches.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "delone/grid_index.hpp"

namespace delone {

namespace {

// fraction of a cell treated as boundary-adjacent for the straddle guard
constexpr double kStraddleBand = 1e-3;

struct PatchRec {
    std::vector<std::int64_t> key;
    std::vector<std::int64_t> key_shifted;
    bool straddle = false;
    std::vector<double> offsets;  // flat, sorted by quantized form
};

// quantize one patch worth of offsets; shared by canonicalize() and the census
PatchRec quantize_offsets(const std::vector<double>& flat, int dim, double tol) {
    PatchRec rec;
    const std::size_t k = flat.size() / dim;
    std::vector<std::vector<std::int64_t>> q(k, std::vector<std::int64_t>(2 * dim));
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) {
        order[i] = i;
        for (int d = 0; d < dim; ++d) {
            const double u = flat[i * dim + d] / tol;
            q[i][d] = std::llround(u);
            q[i][dim + d] = std::llround(u + 0.5);
            if (std::abs(u - std::floor(u) - 0.5) < kStraddleBand) rec.straddle = true;
        }
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
    rec.key.reserve(k * dim);
    rec.key_shifted.reserve(k * dim);
    rec.offsets.reserve(k * dim);
    for (const auto i : order) {
        for (int d = 0; d < dim; ++d) {
            rec.key.push_back(q[i][d]);
            rec.key_shifted.push_back(q[i][dim + d]);
            rec.offsets.push_back(flat[i * dim + d]);
        }
    }
    return rec;
}

// offset-set equality up to tol per coordinate (order-free)
bool offsets_match(const std::vector<double>& a, const std::vector<double>& b, int dim,
                   double tol) {
    if (a.size() != b.size()) return false;
    const std::size_t k = a.size() / dim;
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < k && !found; ++j) {
            if (used[j]) continue;
            bool close = true;
            for (int d = 0; d < dim && close; ++d)
                close = std::abs(a[i * dim + d] - b[j * dim + d]) <= tol;
            if (close) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<double> patch_offsets_flat(const PointSample& sample, const GridIndex& grid,
                                       std::span<const double> center, double T,
                                       std::vector<std::uint32_t>& scratch) {
    grid.query_ball(center, T, scratch);
    std::vector<double> flat;
    flat.reserve(scratch.size() * sample.dim);
    // open ball with the boundary band excluded: a point at distance
    // exactly T must fall on the same side for every translate of the
    // patch, which raw < T comparisons cannot guarantee
    const double t_eff = std::max(T - sample.tol, 0.0);
    const double t2 = t_eff * t_eff;
    for (const auto idx : scratch) {
        const auto p = sample.point(idx);
        if (dist2(p, center) < t2) {
            for (int d = 0; d < sample.dim; ++d) flat.push_back(p[d] - center[d]);
        }
    }
    return flat;
}

Interval class_covering(const PatchClassRegistry& reg, const Region& inner, double resolution) {
    Interval m{0.0, 0.0};
    for (std::size_t c = 0; c < reg.classes.size(); ++c) {
        const auto sigma = reg.sigma_coords(c);
        const Interval cov = covering_radius_points(sigma, reg.dim, inner, resolution);
        m.lo = std::max(m.lo, cov.lo);
        m.hi = std::max(m.hi, cov.hi);
    }
    return m;
}

double auto_resolution(const Region& inner) { return std::max(inner.inradius() / 128.0, 1e-9); }

}  // namespace

std::vector<double> PatchClassRegistry::sigma_coords(std::size_t class_id) const {
    const auto& cls = classes.at(class_id);
    std::vector<double> out;
    out.reserve(cls.members.size() * dim);
    for (const auto m : cls.members)
        for (int d = 0; d < dim; ++d) out.push_back(center_coords[m * dim + d]);
    return out;
}

Patch extract_patch(const PointSample& sample, std::span<const double> center, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("patch: radius must be positive");
    if (!sample.window.contains_ball(center, T)) throw std::invalid_argument("patch: margin violation");
    GridIndex grid(sample);
    if (!grid.contains_point(center, sample.tol))
        throw std::invalid_argument("patch: center not in sample");
    std::vector<std::uint32_t> scratch;
    const auto flat = patch_offsets_flat(sample, grid, center, T, scratch);
    auto rec = quantize_offsets(flat, sample.dim, sample.tol);
    Patch p;
    p.center.assign(center.begin(), center.end());
    p.radius = T;
    const std::size_t k = rec.offsets.size() / sample.dim;
    p.offsets.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        p.offsets.emplace_back(rec.offsets.begin() + i * sample.dim,
                               rec.offsets.begin() + (i + 1) * sample.dim);
    return p;
}

CanonicalPatch canonicalize(const Patch& patch, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("canonicalize: tol must be positive");
    std::vector<double> flat;
    const int dim = patch.offsets.empty() ? 1 : static_cast<int>(patch.offsets[0].size());
    for (const auto& o : patch.offsets) flat.insert(flat.end(), o.begin(), o.end());
    auto rec = quantize_offsets(flat, dim, tol);
    CanonicalPatch c;
    c.radius = patch.radius;
    c.key = std::move(rec.key);
    c.key_shifted = std::move(rec.key_shifted);
    c.straddle = rec.straddle;
    return c;
}

PatchClassRegistry patch_census(const PointSample& sample, double T, double tol,
                                double resolution) {
    if (!(T > 0.0)) throw std::invalid_argument("census: T must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("census: tol must be positive");
    if (sample.size() < 2) throw std::invalid_argument("census: sample too small");

    GridIndex grid(sample);
    {
        // canonicalization needs tol well below the point spacing
        double r_est = sample.declared_r ? *sample.declared_r : 0.0;
        if (r_est <= 0.0) {
            double min_sep = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < sample.size(); ++i)
                min_sep = std::min(min_sep, grid.nearest_distance(sample.point(i),
                                                                  static_cast<std::int64_t>(i)));
            r_est = 0.5 * min_sep;
        }
        if (!(tol < r_est / 4.0))
            throw std::invalid_argument("census: tol must be below a quarter packing radius");
    }

    PatchClassRegistry reg;
    reg.T = T;
    reg.tol = tol;
    reg.dim = sample.dim;
    reg.window = sample.window;

    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample.window.contains_ball(sample.point(i), T)) {
            reg.center_ids.push_back(static_cast<std::uint32_t>(i));
            const auto p = sample.point(i);
            reg.center_coords.insert(reg.center_coords.end(), p.begin(), p.end());
        }
    }
    if (reg.center_ids.empty()) throw std::invalid_argument("census: window too small for T");

    const auto n_centers = static_cast<std::int64_t>(reg.center_ids.size());
    std::vector<PatchRec> recs(n_centers);
#pragma omp parallel
    {
        std::vector<std::uint32_t> scratch;
#pragma omp for schedule(static)
        for (std::int64_t c = 0; c < n_centers; ++c) {
            std::span<const double> center(reg.center_coords.data() + c * sample.dim,
                                           static_cast<std::size_t>(sample.dim));
            const auto flat = patch_offsets_flat(sample, grid, center, T, scratch);
            recs[c] = quantize_offsets(flat, sample.dim, tol);
        }
    }

    // serial merge in center order keeps ids deterministic
    std::map<std::vector<std::int64_t>, std::uint32_t> by_key;
    std::vector<bool> class_straddle;
    reg.class_of.resize(n_centers);
    for (std::int64_t c = 0; c < n_centers; ++c) {
        auto& rec = recs[c];
        auto [it, inserted] = by_key.try_emplace(rec.key, static_cast<std::uint32_t>(reg.classes.size()));
        if (inserted) {
            PatchClass cls;
            cls.key = rec.key;
            cls.rep_offsets = std::move(rec.offsets);
            reg.classes.push_back(std::move(cls));
            class_straddle.push_back(rec.straddle);
        } else {
            class_straddle[it->second] = class_straddle[it->second] || rec.straddle;
        }
        reg.classes[it->second].members.push_back(static_cast<std::uint32_t>(c));
        reg.class_of[c] = it->second;
    }

    // straddle reconciliation: classes flagged on the primary grid are
    // regrouped by the shifted key and merged after a direct offset match
    bool any_straddle = false;
    for (const auto s : class_straddle) any_straddle = any_straddle || s;
    if (any_straddle) {
        std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> by_shifted;
        for (std::int64_t c = 0; c < n_centers; ++c)
            if (class_straddle[reg.class_of[c]])
                by_shifted[recs[c].key_shifted].push_back(reg.class_of[c]);

        // union-find with the smallest class index as root
        std::vector<std::uint32_t> parent(reg.classes.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<std::uint32_t>(i);
        auto find_root = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](std::uint32_t a, std::uint32_t b) {
            a = find_root(a);
            b = find_root(b);
            if (a == b) return;
            if (a > b) std::swap(a, b);
            parent[b] = a;
        };
        for (auto& [skey, ids] : by_shifted) {
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b)
                    if (offsets_match(reg.classes[ids[a]].rep_offsets,
                                      reg.classes[ids[b]].rep_offsets, sample.dim, tol))
                        unite(ids[a], ids[b]);
        }

        std::vector<std::uint32_t> remap(reg.classes.size());
        bool changed = false;
        for (std::size_t i = 0; i < remap.size(); ++i) {
            remap[i] = find_root(static_cast<std::uint32_t>(i));
            changed = changed || remap[i] != i;
        }
        if (changed) {
            std::vector<PatchClass> merged;
            std::vector<std::uint32_t> new_id(reg.classes.size());
            for (std::size_t i = 0; i < reg.classes.size(); ++i) {
                if (remap[i] == i) {
                    new_id[i] = static_cast<std::uint32_t>(merged.size());
                    merged.push_back(std::move(reg.classes[i]));
                } else {
                    new_id[i] = new_id[remap[i]];
                    auto& dst = merged[new_id[i]];
                    dst.members.insert(dst.members.end(), reg.classes[i].members.begin(),
                                       reg.classes[i].members.end());
                }
            }
            for (auto& cls : merged) std::sort(cls.members.begin(), cls.members.end());
            reg.classes = std::move(merged);
            for (std::int64_t c = 0; c < n_centers; ++c) reg.class_of[c] = new_id[reg.class_of[c]];
        }
    }

    // order classes by canonical key
    std::vector<std::uint32_t> order(reg.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return reg.classes[a].key < reg.classes[b].key; });
    std::vector<std::uint32_t> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::uint32_t>(i);
    std::vector<PatchClass> sorted;
    sorted.reserve(reg.classes.size());
    for (const auto i : order) sorted.push_back(std::move(reg.classes[i]));
    reg.classes = std::move(sorted);
    for (auto& c : reg.class_of) c = rank[c];

    // bootstrap exactness: the window certifies completeness once it holds
    // a ball of radius M + T
    const auto rep = repetitivity_of(reg, resolution);
    reg.m_bracket = rep.bracket;
    reg.exact = reg.window.inradius() >= rep.bracket.hi + T;
    return reg;
}

RepetitivityResult repetitivity_of(const PatchClassRegistry& registry, double resolution) {
    const Region inner = registry.window.shrunk(registry.T);
    double res = resolution > 0.0 ? resolution : auto_resolution(inner);
    for (int attempt = 0;; ++attempt) {
        try {
            // Pass 1 over the full margin-valid region overestimates near
            // the boundary (center-set members beyond the window would
            // serve those evaluation points); its value is a safe margin.
            const Interval margin = class_covering(registry, inner, res);
            RepetitivityResult out;
            if (inner.inradius() > margin.hi) {
                // pass 2: distances inside inner (-) margin are fields of
                // the full center sets, so the bracket is trustworthy
                out.bracket = class_covering(registry, inner.shrunk(margin.hi), res);
                out.exact = registry.window.inradius() >= margin.hi + registry.T;
            } else {
                out.bracket = margin;  // lower-bound-only
                out.exact = false;
            }
            return out;
        } catch (const std::invalid_argument&) {
            if (resolution > 0.0 || attempt >= 8) throw;
            res *= 2.0;  // automatic pitch was too fine for the region
        }
    }
}

RepetitivityResult repetitivity(const PointSample& sample, double T, double tol,
                                double resolution) {
    const auto reg = patch_census(sample, T, tol, resolution);
    return {reg.m_bracket, reg.exact};
}

ComplexityCurve patch_count_curve(const PointSample& sample, const std::vector<double>& T_list,
                                  double tol, double resolution) {
    if (!std::is_sorted(T_list.begin(), T_list.end()))
        throw std::invalid_argument("curve: T list must be ascending");
    ComplexityCurve curve;
    curve.kind = ComplexityCurve::Kind::PatchCount;
    for (const double T : T_list) {
        const auto reg = patch_census(sample, T, tol, resolution);
        const auto n = static_cast<double>(reg.class_count());
        curve.rows.push_back({T, n, n, reg.exact});
    }
    for (std::size_t i = 1; i < curve.rows.size(); ++i)
        if (curve.rows[i - 1].exact && curve.rows[i].exact &&
            curve.rows[i].lo < curve.rows[i - 1].lo)
            throw std::logic_error("curve: patch counts not monotone on exact windows");
    return curve;
}

ComplexityCurve repetitivity_curve(const PointSample& sample, const std::vector<double>& T_list,
                                   double tol, double resolution) {
    if (!std::is_sorted(T_list.begin(), T_list.end()))
        throw std::invalid_argument("curve: T list must be ascending");
    ComplexityCurve curve;
    curve.kind = ComplexityCurve::Kind::Repetitivity;
    for (const double T : T_list) {
        const auto rep = repetitivity(sample, T, tol, resolution);
        curve.rows.push_back({T, rep.bracket.lo, rep.bracket.hi, rep.exact});
    }
    for (std::size_t i = 1; i < curve.rows.size(); ++i)
        if (curve.rows[i - 1].exact && curve.rows[i].exact &&
            curve.rows[i].hi < curve.rows[i - 1].lo - 1e-12)
            throw std::logic_error("curve: repetitivity not monotone on exact windows");
    return curve;
}

}  // namespace delone
