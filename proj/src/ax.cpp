#include "axtower/ax.hpp"

#include "axtower/errors.hpp"

#include <stdexcept>
#include <vector>

namespace axtower {

namespace {

using i64 = std::int64_t;

struct Term {
    i64 index;
    Valuation value;
};

struct Minimum {
    Valuation value = Valuation::infinite();
    std::optional<i64> arg;
};

// Minimum over terms that are Exact or AtLeast. A zero-at-precision term only
// matters if its lower bound could undercut the exact minimum.
Minimum resolve_min(const std::vector<Term>& terms) {
    Minimum out;
    for (const auto& t : terms) {
        if (!t.value.is_exact()) continue;
        if (!out.arg || t.value.value() < out.value.value()) {
            out.value = t.value;
            out.arg = t.index;
        }
    }
    if (!out.arg) return out;
    for (const auto& t : terms) {
        if (t.value.is_at_least() && t.value.bound() < out.value.value())
            throw PrecisionExhausted("coefficient at index " + std::to_string(t.index) +
                                     " is zero only to precision " + t.value.to_string() +
                                     ", below the exact minimum " + out.value.to_string());
    }
    return out;
}

}  // namespace

OscillationReport galois_oscillation(const TowerElement& x) {
    OscillationReport rep;
    const int n = x.level();
    if (n == 0 || x.is_exact_zero()) return rep;
    const auto& cfg = x.config();
    const i64 p = cfg->p();
    const i64 pn = ipow(p, n);
    const i64 epn = cfg->e() * pn;
    const auto a = coefficients_over_base(x);
    std::vector<Term> terms;
    for (i64 i = 1; i < pn; ++i) {
        const Valuation v = a[i].valuation();
        if (v.is_infinite()) continue;
        const Rational c = Rational(i, epn) + Rational(ipow(p, vp(i, p)), ipow(p, n - 1) * (p - 1));
        const Valuation t = v + c;
        rep.per_index_terms.emplace(i, t);
        terms.push_back({i, t});
    }
    for (std::size_t s = 0; s < terms.size(); ++s)
        for (std::size_t t = s + 1; t < terms.size(); ++t)
            if (terms[s].value.is_exact() && terms[t].value.is_exact() && terms[s].value == terms[t].value)
                throw std::logic_error("oscillation terms at indices " + std::to_string(terms[s].index) + " and " +
                                       std::to_string(terms[t].index) + " coincide");
    const Minimum m = resolve_min(terms);
    rep.oscillation = m.value;
    rep.argmin_index = m.arg;
    return rep;
}

TowerElement best_approximant(const TowerElement& x, int m) {
    if (m < 0) throw InvalidArgument("level must be >= 0");
    const int n = x.level();
    if (m >= n) return x;
    const auto& cfg = x.config();
    const i64 step = ipow(cfg->p(), n - m);
    const auto a = coefficients_over_base(x);
    TowerElement y = TowerElement::zero(cfg, m);
    for (i64 i = 0; i < static_cast<i64>(a.size()); i += step) y += a[i].embed(m).mul_pi_power(i / step);
    return y;
}

Valuation approximation_defect(const TowerElement& x, int m) {
    if (m < 0) throw InvalidArgument("level must be >= 0");
    const int n = x.level();
    if (m >= n || x.is_exact_zero()) return Valuation::infinite();
    const auto& cfg = x.config();
    const i64 p = cfg->p();
    const i64 pn = ipow(p, n);
    const i64 step = ipow(p, n - m);
    const auto a = coefficients_over_base(x);
    std::vector<Term> terms;
    for (i64 j = 1; j < pn; ++j) {
        if (j % step == 0) continue;
        const Valuation v = a[j].valuation();
        if (v.is_infinite()) continue;
        terms.push_back({j, v + Rational(j, cfg->e() * pn)});
    }
    const Valuation closed = resolve_min(terms).value;

    const Valuation direct = (x - best_approximant(x, m).embed(n)).valuation();
    if (closed.is_exact() ? !(direct == closed) : direct.is_exact())
        throw std::logic_error("approximation defect: closed form " + closed.to_string() +
                               " disagrees with direct subtraction " + direct.to_string());
    return closed;
}

IdentityReport oscillation_identity(const TowerElement& x) {
    IdentityReport r;
    r.lhs = galois_oscillation(x).oscillation;
    const i64 p = x.config()->p();
    for (int m = 0; m <= x.level(); ++m) {
        const Valuation d = approximation_defect(x, m);
        r.rhs = min_exact(r.rhs, d + Rational(1, ipow(p, m) * (p - 1)));
    }
    return r;
}

EquivalenceReport approximation_equivalence(const TowerElement& x, const Rational& A) {
    EquivalenceReport r;
    r.oscillation_side = galois_oscillation(x).oscillation.certainly_at_least(A);
    const i64 p = x.config()->p();
    r.approximation_side = true;
    for (int m = 0; m <= x.level(); ++m) {
        if (!approximation_defect(x, m).certainly_at_least(A - Rational(1, ipow(p, m) * (p - 1))))
            r.approximation_side = false;
    }
    return r;
}

AxConstants ax_constants(i64 p, int m) {
    if (p < 2) throw InvalidArgument("p must be a prime");
    if (m < 0) throw InvalidArgument("m must be >= 0");
    return {Rational(1, ipow(p, m) * (p - 1)), Rational(p, (p - 1) * (p - 1))};
}

}  // namespace axtower
