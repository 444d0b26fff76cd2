#include "axtower/rational.hpp"

#include "axtower/errors.hpp"

#include <limits>

namespace axtower {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t floor(const Rational& q) {
    const auto n = q.numerator();
    const auto d = q.denominator();  // always positive
    auto r = n / d;
    if (n % d != 0 && n < 0) --r;
    return r;
}

std::int64_t ceil(const Rational& q) {
    return -floor(-q);
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && (r > std::numeric_limits<std::int64_t>::max() / (base < 0 ? -base : base)))
            throw InvalidArgument("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

int vp(std::int64_t n, std::int64_t p) {
    if (n == 0) throw InvalidArgument("vp(0) is infinite");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace axtower
