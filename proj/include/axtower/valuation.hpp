#pragma once

#include "axtower/rational.hpp"

#include <compare>
#include <string>

namespace axtower {

/// A p-adic valuation normalized by v(p) = 1.
///
/// `Exact` values are known; `AtLeast` means the element is zero modulo the
/// precision cutoff stored in `value`; `Infinite` is reserved for exact zero.
class Valuation {
public:
    enum class Kind { Exact, AtLeast, Infinite };

    static Valuation exact(Rational v) { return {Kind::Exact, v}; }
    static Valuation at_least(Rational v) { return {Kind::AtLeast, v}; }
    static Valuation infinite() { return {Kind::Infinite, Rational(0)}; }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_at_least() const { return kind_ == Kind::AtLeast; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_finite() const { return kind_ == Kind::Exact; }

    /// Exact value; throws PrecisionExhausted otherwise.
    Rational value() const;
    /// The exact value or the cutoff; meaningless for Infinite.
    Rational bound() const { return value_; }

    /// True when the valuation is provably >= q.
    bool certainly_at_least(const Rational& q) const;
    /// True when the valuation is provably < q.
    bool certainly_below(const Rational& q) const { return kind_ == Kind::Exact && value_ < q; }

    /// Shifts by a rational (multiplication by an element of known valuation).
    Valuation operator+(const Rational& q) const;

    bool operator==(const Valuation&) const = default;

    /// "a/b", "+inf" or ">= a/b".
    std::string to_string() const;

private:
    Valuation(Kind k, Rational v) : kind_(k), value_(v) {}

    Kind kind_;
    Rational value_;
};

/// Minimum of two exact-or-infinite valuations.
Valuation min_exact(const Valuation& a, const Valuation& b);

}  // namespace axtower
