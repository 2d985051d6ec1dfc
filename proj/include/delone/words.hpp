#ifndef DELONE_WORDS_HPP
#define DELONE_WORDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "delone/linalg.hpp"

namespace delone {

// Finite excerpt of a one-dimensional symbolic sequence.
struct Word {
    std::vector<int> symbols;
    int alphabet = 1;  // symbols lie in [0, alphabet)

    static Word from_symbols(std::vector<int> symbols);
    std::size_t size() const { return symbols.size(); }
};

// Symbol array over a finite box in Z^n, row-major.
struct NdWord {
    int dim = 1;
    std::vector<int> extents;
    std::vector<int> symbols;
    int alphabet = 1;

    static NdWord from_box(std::vector<int> extents, std::vector<int> symbols);
    static NdWord from_word(const Word& w);

    std::size_t index(std::span<const int> pos) const;
    int at(std::span<const int> pos) const { return symbols[index(pos)]; }
};

// Beatty/Sturmian word: symbol_m = floor((m+1)a) - floor(ma) - floor(a),
// over {0,1}, for m = 1..length.
Word sturmian_word(double alpha, std::size_t length);

// Suffix-array index over a word; built once, then queried per factor
// length m.
class FactorIndex {
public:
    explicit FactorIndex(const Word& w);

    // number of distinct length-m factors
    long complexity(int m) const;

    struct RecurrenceResult {
        long value = 0;      // max gap between successive starts of a factor
        bool complete = false;  // false when some factor occurs only once
    };
    RecurrenceResult recurrence(int m) const;

    int length() const { return n_; }

private:
    int n_ = 0;
    std::vector<int> syms_;
    std::vector<int> sa_;
    std::vector<int> lcp_;  // lcp_[i] = lcp(sa_[i-1], sa_[i]), lcp_[0] = 0
};

long word_complexity(const Word& w, int m);
FactorIndex::RecurrenceResult recurrence(const Word& w, int m);

// number of distinct m x ... x m sub-cube patterns
long cubic_complexity(const NdWord& w, int m);

struct PeriodicityResult {
    enum class Kind { FullyPeriodic, AperiodicWitness, Inconclusive };
    Kind kind = Kind::Inconclusive;
    // diagonal period basis (axis_periods[i] * e_i) when fully periodic
    Matrix basis;
    // smallest box-verified period per axis, when one exists
    std::vector<std::optional<int>> axis_periods;
    std::optional<int> stagnation_m;  // first m with N(m+1) == N(m)
    int tested_up_to = 0;
    std::vector<long> complexity;  // N(1) .. N(tested_up_to)
};

// Stagnation-based periodicity test on the box, with a per-axis period
// search either way.
PeriodicityResult full_periodicity_test(const NdWord& w, int m_limit);

struct MorseHedlundRow {
    int m = 0;
    long complexity = 0;       // N_S(m)
    long bound = 0;            // m + A - 1
    bool complexity_ok = false;
    long recurrence = 0;       // max occurrence-start gap
    bool recurrence_complete = false;
    bool recurrence_ok = false;
    double ratio = 0.0;        // (R_S(m) - m)/m = (recurrence - 1)/m
};

struct MorseHedlundReport {
    int alphabet_used = 0;  // distinct symbols occurring
    std::vector<MorseHedlundRow> rows;
    double max_ratio = 0.0;        // over rows with complete recurrence
    double limsup_reference = 0.0; // golden ratio + 1
};

MorseHedlundReport morse_hedlund_report(const Word& w, int m_max);

}  // namespace delone

#endif
