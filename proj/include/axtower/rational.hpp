#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace axtower {

using Rational = boost::rational<std::int64_t>;

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// Integer power with an overflow check.
std::int64_t ipow(std::int64_t base, unsigned exponent);

/// Exponent of p in n (n != 0).
int vp(std::int64_t n, std::int64_t p);

}  // namespace axtower
