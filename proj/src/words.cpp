#include "delone/words.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "delone/irrational.hpp"

namespace delone {

Word Word::from_symbols(std::vector<int> symbols) {
    if (symbols.empty()) throw std::invalid_argument("word: empty symbol sequence");
    int max_sym = 0;
    for (int s : symbols) {
        if (s < 0) throw std::invalid_argument("word: negative symbol");
        max_sym = std::max(max_sym, s);
    }
    Word w;
    w.symbols = std::move(symbols);
    w.alphabet = max_sym + 1;
    return w;
}

NdWord NdWord::from_box(std::vector<int> extents, std::vector<int> symbols) {
    if (extents.empty()) throw std::invalid_argument("word: empty extents");
    std::size_t total = 1;
    for (int e : extents) {
        if (e < 1) throw std::invalid_argument("word: extents must be positive");
        total *= static_cast<std::size_t>(e);
    }
    if (symbols.size() != total) throw std::invalid_argument("word: symbol array incomplete");
    int max_sym = 0;
    for (int s : symbols) {
        if (s < 0) throw std::invalid_argument("word: negative symbol");
        max_sym = std::max(max_sym, s);
    }
    NdWord w;
    w.dim = static_cast<int>(extents.size());
    w.extents = std::move(extents);
    w.symbols = std::move(symbols);
    w.alphabet = max_sym + 1;
    return w;
}

NdWord NdWord::from_word(const Word& w) {
    NdWord nd;
    nd.dim = 1;
    nd.extents = {static_cast<int>(w.size())};
    nd.symbols = w.symbols;
    nd.alphabet = w.alphabet;
    return nd;
}

std::size_t NdWord::index(std::span<const int> pos) const {
    std::size_t idx = 0;
    for (int d = 0; d < dim; ++d) idx = idx * extents[d] + pos[d];
    return idx;
}

Word sturmian_word(double alpha, std::size_t length) {
    if (length < 1) throw std::invalid_argument("sturmian: length must be >= 1");
    if (!(alpha > 0.0) || !is_irrational_to_precision(alpha))
        throw std::invalid_argument("sturmian: alpha must be positive and irrational");
    const auto base = static_cast<long long>(std::floor(alpha));
    Word w;
    w.alphabet = 2;
    w.symbols.reserve(length);
    for (std::size_t m = 1; m <= length; ++m) {
        const auto lo = static_cast<long long>(std::floor(static_cast<double>(m) * alpha));
        const auto hi = static_cast<long long>(std::floor(static_cast<double>(m + 1) * alpha));
        w.symbols.push_back(static_cast<int>(hi - lo - base));
    }
    return w;
}

FactorIndex::FactorIndex(const Word& w) : n_(static_cast<int>(w.size())), syms_(w.symbols) {
    // suffix array by prefix doubling
    sa_.resize(n_);
    std::iota(sa_.begin(), sa_.end(), 0);
    std::vector<int> rank(syms_.begin(), syms_.end()), tmp(n_);
    for (int k = 1;; k <<= 1) {
        auto cmp = [&](int a, int b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            const int ra = a + k < n_ ? rank[a + k] : -1;
            const int rb = b + k < n_ ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa_.begin(), sa_.end(), cmp);
        tmp[sa_[0]] = 0;
        for (int i = 1; i < n_; ++i) tmp[sa_[i]] = tmp[sa_[i - 1]] + (cmp(sa_[i - 1], sa_[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa_[n_ - 1]] == n_ - 1) break;
    }
    // Kasai LCP
    lcp_.assign(n_, 0);
    std::vector<int> inv(n_);
    for (int i = 0; i < n_; ++i) inv[sa_[i]] = i;
    int h = 0;
    for (int i = 0; i < n_; ++i) {
        if (inv[i] > 0) {
            const int j = sa_[inv[i] - 1];
            while (i + h < n_ && j + h < n_ && syms_[i + h] == syms_[j + h]) ++h;
            lcp_[inv[i]] = h;
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
}

long FactorIndex::complexity(int m) const {
    if (m < 1) throw std::invalid_argument("complexity: m must be >= 1");
    if (m > n_) throw std::invalid_argument("complexity: m exceeds word length");
    long groups = 0;
    bool have_prev = false;
    int running = std::numeric_limits<int>::max();
    for (int i = 0; i < n_; ++i) {
        if (i > 0) running = std::min(running, lcp_[i]);
        if (sa_[i] <= n_ - m) {
            if (!have_prev || running < m) ++groups;
            have_prev = true;
            running = std::numeric_limits<int>::max();
        }
    }
    return groups;
}

FactorIndex::RecurrenceResult FactorIndex::recurrence(int m) const {
    if (m < 1) throw std::invalid_argument("recurrence: m must be >= 1");
    if (m > n_) throw std::invalid_argument("recurrence: m exceeds word length");
    RecurrenceResult res;
    res.complete = true;
    std::vector<int> group;
    auto flush = [&]() {
        if (group.empty()) return;
        if (group.size() == 1) {
            res.complete = false;
        } else {
            std::sort(group.begin(), group.end());
            for (std::size_t i = 1; i < group.size(); ++i)
                res.value = std::max<long>(res.value, group[i] - group[i - 1]);
        }
        group.clear();
    };
    bool have_prev = false;
    int running = std::numeric_limits<int>::max();
    for (int i = 0; i < n_; ++i) {
        if (i > 0) running = std::min(running, lcp_[i]);
        if (sa_[i] <= n_ - m) {
            if (have_prev && running < m) flush();
            group.push_back(sa_[i]);
            have_prev = true;
            running = std::numeric_limits<int>::max();
        }
    }
    flush();
    return res;
}

long word_complexity(const Word& w, int m) { return FactorIndex(w).complexity(m); }

FactorIndex::RecurrenceResult recurrence(const Word& w, int m) {
    return FactorIndex(w).recurrence(m);
}

namespace {

struct PatternHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

long cubic_complexity(const NdWord& w, int m) {
    if (m < 1) throw std::invalid_argument("cubic complexity: m must be >= 1");
    for (int e : w.extents)
        if (m > e) throw std::invalid_argument("cubic complexity: m exceeds box extent");

    std::unordered_set<std::vector<int>, PatternHash> seen;
    std::vector<int> pos(w.dim, 0), corner(w.dim, 0);
    std::vector<int> pat;
    const auto pat_size = static_cast<std::size_t>(std::pow(static_cast<double>(m), w.dim) + 0.5);
    for (;;) {
        pat.clear();
        pat.reserve(pat_size);
        std::vector<int> off(w.dim, 0);
        for (;;) {
            for (int d = 0; d < w.dim; ++d) pos[d] = corner[d] + off[d];
            pat.push_back(w.at(pos));
            int d = w.dim - 1;
            while (d >= 0 && ++off[d] >= m) off[d--] = 0;
            if (d < 0) break;
        }
        seen.insert(pat);
        int d = w.dim - 1;
        while (d >= 0 && ++corner[d] > w.extents[d] - m) corner[d--] = 0;
        if (d < 0) break;
    }
    return static_cast<long>(seen.size());
}

PeriodicityResult full_periodicity_test(const NdWord& w, int m_limit) {
    PeriodicityResult res;
    int min_ext = std::numeric_limits<int>::max();
    for (int e : w.extents) min_ext = std::min(min_ext, e);
    const int limit = std::min(m_limit, min_ext);
    res.tested_up_to = limit;
    res.axis_periods.assign(w.dim, std::nullopt);
    if (limit < 2) {
        res.kind = PeriodicityResult::Kind::Inconclusive;
        return res;
    }

    for (int m = 1; m <= limit; ++m) res.complexity.push_back(cubic_complexity(w, m));
    for (int m = 1; m < limit; ++m)
        if (res.complexity[m] == res.complexity[m - 1]) {
            res.stagnation_m = m;
            break;
        }

    // direct per-axis period search, verified over the whole box
    std::vector<int> pos(w.dim, 0), shifted(w.dim, 0);
    for (int axis = 0; axis < w.dim; ++axis) {
        for (int p = 1; p < w.extents[axis]; ++p) {
            bool ok = true;
            std::fill(pos.begin(), pos.end(), 0);
            for (;;) {
                if (pos[axis] + p < w.extents[axis]) {
                    shifted = pos;
                    shifted[axis] += p;
                    if (w.at(pos) != w.at(shifted)) {
                        ok = false;
                        break;
                    }
                }
                int d = w.dim - 1;
                while (d >= 0 && ++pos[d] >= w.extents[d]) pos[d--] = 0;
                if (d < 0) break;
            }
            if (ok) {
                res.axis_periods[axis] = p;
                break;
            }
        }
    }

    bool all_axes = true;
    for (const auto& ap : res.axis_periods) all_axes = all_axes && ap.has_value();

    if (res.stagnation_m) {
        if (all_axes) {
            res.kind = PeriodicityResult::Kind::FullyPeriodic;
            res.basis = Matrix(w.dim, Vec(w.dim, 0.0));
            for (int d = 0; d < w.dim; ++d) res.basis[d][d] = static_cast<double>(*res.axis_periods[d]);
        } else {
            // stagnated but no verified basis: the box is too small
            res.kind = PeriodicityResult::Kind::Inconclusive;
        }
    } else if (all_axes) {
        res.kind = PeriodicityResult::Kind::FullyPeriodic;
        res.basis = Matrix(w.dim, Vec(w.dim, 0.0));
        for (int d = 0; d < w.dim; ++d) res.basis[d][d] = static_cast<double>(*res.axis_periods[d]);
    } else {
        res.kind = PeriodicityResult::Kind::AperiodicWitness;
    }
    return res;
}

MorseHedlundReport morse_hedlund_report(const Word& w, int m_max) {
    if (m_max < 1 || m_max > static_cast<int>(w.size()))
        throw std::invalid_argument("report: m_max outside word");
    MorseHedlundReport rep;
    FactorIndex idx(w);
    rep.alphabet_used = static_cast<int>(idx.complexity(1));
    rep.limsup_reference = golden_ratio + 1.0;
    for (int m = 1; m <= m_max; ++m) {
        MorseHedlundRow row;
        row.m = m;
        row.complexity = idx.complexity(m);
        row.bound = m + rep.alphabet_used - 1;
        row.complexity_ok = row.complexity >= row.bound;
        const auto rec = idx.recurrence(m);
        row.recurrence = rec.value;
        row.recurrence_complete = rec.complete;
        row.recurrence_ok = rec.complete && rec.value >= row.bound;
        row.ratio = rec.complete ? static_cast<double>(rec.value - 1) / m : 0.0;
        if (rec.complete) rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace delone
