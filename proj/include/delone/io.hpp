#ifndef DELONE_IO_HPP
#define DELONE_IO_HPP

#include <string>

#include "delone/crystallinity.hpp"
#include "delone/generators.hpp"
#include "delone/geometry.hpp"
#include "delone/kappa.hpp"
#include "delone/patches.hpp"
#include "delone/words.hpp"

namespace delone::io {

// floating-point formatting used in every emitted file: 17 significant
// digits round-trips IEEE doubles bit-exactly
std::string g17(double x);

std::string region_to_json(const Region& region);
Region region_from_json_text(const std::string& text);

// {dim, tol, window, points, source}
std::string sample_to_json(const PointSample& sample);
PointSample sample_from_json(const std::string& text);

// one point per row; parsing reconstructs the window as a padded bounding
// box unless the caller supplies one
std::string sample_to_csv(const PointSample& sample);
PointSample sample_from_csv(const std::string& text);

std::string generator_to_json(const Generator& gen);
Generator generator_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& verdict);
std::string decomposition_to_json(const CosetDecomposition& dec);
std::string registry_to_json(const PatchClassRegistry& registry);
std::string kappa_report_to_json(const KappaReport& report);

// (T, value_lo, value_hi, exact_flag)
std::string curve_to_csv(const ComplexityCurve& curve);
// CLI merged format: (T, N_lo, N_exact, M_lo, M_hi, M_exact)
std::string combined_curve_csv(const ComplexityCurve& counts, const ComplexityCurve& reps);

std::string report_to_csv(const MorseHedlundReport& report);

// word files: one line of symbols for 1-D, or a numeric header
// "dim ext1 ... extn alphabet" followed by row-major symbols
std::string word_to_text(const Word& w);
std::string ndword_to_text(const NdWord& w);
Word word_from_text(const std::string& text);
NdWord ndword_from_text(const std::string& text);

}  // namespace delone::io

#endif
