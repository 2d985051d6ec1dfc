#ifndef DELONE_CRYSTALLINITY_HPP
#define DELONE_CRYSTALLINITY_HPP

#include <string>
#include <vector>

#include "delone/geometry.hpp"
#include "delone/linalg.hpp"
#include "delone/patches.hpp"

namespace delone {

// Outcome of a certificate test.  Finite windows never certify the
// infinite set outright, so window_caveat stays true throughout.
struct Verdict {
    enum class Kind { CertifiedCrystal, CertifiedPeriods, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string certificate;  // which threshold test produced the verdict
    double T = 0.0;
    double measured = 0.0;
    double threshold = 0.0;
    bool window_caveat = true;
    std::vector<Vec> periods;  // filled by extract_periods-based verdicts
};

struct CosetDecomposition {
    Matrix basis;
    Vec base_point;            // lattice passes through this sample point
    std::vector<Vec> offsets;  // one per class, first entry zero
    double residual = 0.0;     // worst deviation of a center from its coset
};

// class count against T/(2R); R_upper must upper-bound the covering radius
Verdict certify_by_count(const PatchClassRegistry& registry, double R_upper);

// repetitivity bracket against T/3
Verdict certify_by_repetitivity(const RepetitivityResult& m, double T);

// repetitivity bracket against c(n)*T with c = kappa/(kappa+2); a lower
// bound for kappa only shrinks the threshold, keeping the verdict sound
Verdict certify_period(const RepetitivityResult& m, double T, int n, double kappa_lower);

// true iff every sample point of the window shrunk by |p| has both
// translates x+p and x-p in the sample (within tol)
bool verify_period(const PointSample& sample, std::span<const double> p);

// Candidate periods are center differences within the largest class,
// shorter than (2/3)T, each checked with verify_period.  Sorted by norm.
std::vector<Vec> extract_periods(const PatchClassRegistry& registry, const PointSample& sample,
                                 double T);

// equal exact class counts at U and V with V > U + 2R
bool stagnation_test(const PointSample& sample, double U, double V, double R, double tol,
                     double resolution = 0.0);

// lattice + offsets recovered from an exact census at U
CosetDecomposition coset_decomposition(const PointSample& sample, double U, double tol,
                                       double resolution = 0.0);

}  // namespace delone

#endif
