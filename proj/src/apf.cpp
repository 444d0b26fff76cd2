#include "axtower/apf.hpp"

#include "axtower/errors.hpp"

namespace axtower {

namespace {

void check(std::int64_t p, int e) {
    if (p < 2) throw InvalidArgument("p must be a prime");
    if (e < 1) throw InvalidArgument("e must be >= 1");
}

}  // namespace

Rational ramification_break(int n, std::int64_t p, int e) {
    check(p, e);
    if (n < 1) throw InvalidArgument("breaks are indexed from n = 1");
    return Rational(n * e - 1) + Rational(p * e, p - 1);
}

RamificationProfile ramification_profile(int n, std::int64_t p, int e) {
    check(p, e);
    if (n < 0) throw InvalidArgument("n must be >= 0");
    RamificationProfile r{p, e, {}, {}};
    for (int j = 1; j <= n; ++j) r.breaks.push_back(ramification_break(j, p, e));
    for (int j = 0; j < n; ++j) r.degrees.push_back(ipow(p, n - j));
    return r;
}

DifferentReport different_valuation(int n, std::int64_t p, int e) {
    check(p, e);
    if (n < 0) throw InvalidArgument("n must be >= 0");
    const std::int64_t pn = ipow(p, n);
    // f'(π_n) = p^n π_n^{p^n - 1}, v(π_n) = 1/(e p^n).
    return {Rational(n) + Rational(pn - 1, e * pn), Rational(e * (n + 1)) - Rational(e, pn)};
}

IntegralReport herbrand_integral_check(int n, std::int64_t p, int e) {
    const auto prof = ramification_profile(n, p, e);
    Rational total(0);
    Rational lower(-1);
    for (int j = 0; j < n; ++j) {
        total += (prof.breaks[j] - lower) * (Rational(1) - Rational(1, prof.degrees[j]));
        lower = prof.breaks[j];
    }
    return {total, total / e, different_valuation(n, p, e).derivative};
}

}  // namespace axtower
