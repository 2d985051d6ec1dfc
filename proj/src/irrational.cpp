#include "delone/irrational.hpp"

#include <cstdint>

namespace delone {

bool is_irrational_to_precision(double alpha) {
    constexpr double kResidual = 1e-12;
    constexpr std::int64_t kMaxDenominator = 1'000'000;

    const double x0 = std::abs(alpha);
    double f = x0 - std::floor(x0);
    if (f < kResidual || 1.0 - f < kResidual) return false;  // integer

    // convergent denominators: q_{-1} = 0, q_0 = 1, q_k = a_k q_{k-1} + q_{k-2}
    std::int64_t q_prev = 0, q = 1;
    for (int step = 0; step < 128; ++step) {
        const double x = 1.0 / f;
        const double a = std::floor(x);
        if (a > (2e18 - static_cast<double>(q_prev)) / static_cast<double>(q)) return true;
        const std::int64_t q_next = static_cast<std::int64_t>(a) * q + q_prev;
        q_prev = q;
        q = q_next;
        if (q > kMaxDenominator) return true;
        f = x - a;
        if (f < kResidual) return false;  // expansion terminated at p/q
    }
    return true;
}

}  // namespace delone
