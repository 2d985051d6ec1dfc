#ifndef DELONE_IRRATIONAL_HPP
#define DELONE_IRRATIONAL_HPP

#include <cmath>

namespace delone {

// Working-precision irrationality proxy via continued fractions: a value is
// treated as rational when its expansion terminates (residual < 1e-12)
// while the convergent denominator is still <= 1e6.  Denominators beyond
// that are indistinguishable from irrationals in double precision.
bool is_irrational_to_precision(double alpha);

// fractional part in [0, 1)
inline double frac_part(double x) { return x - std::floor(x); }

}  // namespace delone

#endif
