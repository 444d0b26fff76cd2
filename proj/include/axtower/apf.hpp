#pragma once

#include "axtower/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace axtower {

/// μ_n = n e - 1 + p e/(p-1), n >= 1.
Rational ramification_break(int n, std::int64_t p, int e);

struct RamificationProfile {
    std::int64_t p = 0;
    int e = 0;
    std::vector<Rational> breaks;      // μ_1 < ... < μ_n
    /// degrees[j] = [K_n : K_n^μ] for μ in (μ_j, μ_{j+1}], with μ_0 = -1.
    std::vector<std::int64_t> degrees;
};

RamificationProfile ramification_profile(int n, std::int64_t p, int e);

struct DifferentReport {
    Rational derivative;         // v(f'(π_n)), f = X^{p^n} - π
    Rational closed_expression;  // e(n+1) - e/p^n
    bool agree() const { return derivative == closed_expression; }
};

DifferentReport different_valuation(int n, std::int64_t p, int e);

struct IntegralReport {
    Rational integral;    // ∫_{-1}^{∞} (1 - 1/[K_n : K_n^μ]) dμ over the step function of the breaks
    Rational normalized;  // integral / e
    Rational derivative;
    bool agree() const { return normalized == derivative; }
};

IntegralReport herbrand_integral_check(int n, std::int64_t p, int e);

}  // namespace axtower
