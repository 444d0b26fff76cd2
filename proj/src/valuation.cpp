#include "axtower/valuation.hpp"

#include "axtower/errors.hpp"

namespace axtower {

Rational Valuation::value() const {
    if (kind_ == Kind::Exact) return value_;
    if (kind_ == Kind::AtLeast)
        throw PrecisionExhausted("valuation only known to be >= " + axtower::to_string(value_));
    throw InvalidArgument("valuation is infinite");
}

bool Valuation::certainly_at_least(const Rational& q) const {
    switch (kind_) {
        case Kind::Infinite: return true;
        case Kind::Exact:
        case Kind::AtLeast: return value_ >= q;
    }
    return false;
}

Valuation Valuation::operator+(const Rational& q) const {
    if (kind_ == Kind::Infinite) return *this;
    return {kind_, value_ + q};
}

std::string Valuation::to_string() const {
    switch (kind_) {
        case Kind::Exact: return axtower::to_string(value_);
        case Kind::AtLeast: return ">= " + axtower::to_string(value_);
        case Kind::Infinite: return "+inf";
    }
    return {};
}

Valuation min_exact(const Valuation& a, const Valuation& b) {
    if (a.is_at_least() || b.is_at_least())
        throw PrecisionExhausted("min of truncated valuations is ambiguous");
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return a.value() <= b.value() ? a : b;
}

}  // namespace axtower
