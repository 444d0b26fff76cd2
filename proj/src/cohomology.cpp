#include "axtower/cohomology.hpp"

#include "axtower/ax.hpp"
#include "axtower/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace axtower {

namespace {

using i64 = std::int64_t;

void require_unramified(const Config& cfg, const char* what) {
    if (cfg->e() != 1) throw UnsupportedConfig(std::string(what) + " needs e = 1");
}

/// Nonzero Teichmüller digits of x at negative indices.
std::map<i64, ResidueElement> negative_digits(const TowerElement& x) {
    std::map<i64, ResidueElement> out;
    if (x.is_exact_zero() || x.shift() >= 0) return out;
    for (auto& [i, c] : teichmuller_expand(x, x.shift(), 0))
        if (!c.is_zero()) out.emplace(i, c);
    return out;
}

i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

// ------------------------------------------------------------ invariant classes

InvariantClass validate_invariant(const TowerElement& xi) {
    InvariantClass c{xi, xi - best_approximant(xi, 0).embed(xi.level())};
    const i64 p = xi.config()->p();
    c.oscillation = galois_oscillation(xi).oscillation;
    c.normalized_valuation = c.normalized.valuation();
    c.validated = c.oscillation.certainly_at_least(Rational(0)) &&
                  c.normalized_valuation.certainly_at_least(Rational(-1, p - 1));
    return c;
}

bool same_class(const InvariantClass& a, const InvariantClass& b) {
    return (a.normalized - b.normalized).valuation().certainly_at_least(Rational(0));
}

TorsionReport torsion_check(const InvariantClass& cls) {
    if (!cls.validated) throw InvalidArgument("torsion_check needs a validated class");
    const auto& cfg = cls.rep.config();
    const int e = cfg->e();
    TorsionReport t;
    t.bound = static_cast<int>(ceil(Rational(e, cfg->p() - 1)));
    const Valuation& v = cls.normalized_valuation;
    if (v.certainly_at_least(Rational(0))) {
        t.n = 0;
    } else if (v.is_exact()) {
        t.n = static_cast<int>(ceil(-v.value() * e));
    } else {
        throw PrecisionExhausted("valuation of the class is only known to be " + v.to_string());
    }
    if (!t.within_bound())
        throw std::logic_error("class killed only by π^" + std::to_string(t.n) + ", above the bound " +
                               std::to_string(t.bound));
    return t;
}

std::vector<std::vector<ResidueElement>> psi_digit_families(const InvariantClass& cls, int count) {
    const auto& cfg = cls.rep.config();
    const i64 p = cfg->p();
    const int e = cfg->e();
    if (e > p - 1) throw UnsupportedConfig("digit families need e <= p-1; use ramified_support");
    if (count < 0) throw InvalidArgument("count must be >= 0");
    const int n = cls.normalized.level();
    std::vector<std::vector<ResidueElement>> out(e, std::vector<ResidueElement>(count, ResidueElement::zero(cfg->field())));
    for (const auto& [idx, c] : negative_digits(cls.normalized)) {
        // idx = -j p^{n-m}, 1 <= j <= e, 1 <= m <= n
        const i64 k = -idx;
        bool placed = false;
        for (int m = 1; m <= n && !placed; ++m) {
            const i64 step = ipow(p, n - m);
            if (k % step != 0) continue;
            const i64 j = k / step;
            if (j < 1 || j > e) continue;
            if (m <= count) out[j - 1][m - 1] = c;
            placed = true;
        }
        if (!placed)
            throw SupportViolation("nonzero digit " + c.to_string() + " at index " + std::to_string(idx) +
                                   " of level " + std::to_string(n) + " is outside the η_m^j support");
    }
    return out;
}

std::vector<ResidueElement> psi_digits(const InvariantClass& cls, int count) {
    require_unramified(cls.rep.config(), "psi_digits");
    return psi_digit_families(cls, count).front();
}

std::vector<TowerElement> xi_tower_sequence(const InvariantClass& cls, int s_max) {
    const auto& cfg = cls.rep.config();
    require_unramified(cfg, "xi_tower_sequence");
    if (s_max < 0) throw InvalidArgument("s_max must be >= 0");
    const int n = cls.normalized.level();
    const i64 eta0 = -ipow(cfg->p(), n);  // η_0 = 1/p = π_n^{-p^n}
    std::vector<TowerElement> out{cls.normalized};
    for (int s = 0; s < s_max; ++s) {
        const TowerElement y = out.back().pow(static_cast<unsigned>(cfg->p()));
        const ResidueElement t = teichmuller_expand(y, eta0, eta0 + 1).at(eta0);
        out.push_back(y - TowerElement::teichmuller(cfg, n, t, eta0));
    }
    return out;
}

TwistRelation find_K_linear_dependence(const std::vector<TowerElement>& xis, int r_max) {
    if (xis.size() < 2) throw InvalidArgument("need at least two elements");
    const auto& cfg = xis.front().config();
    require_unramified(cfg, "find_K_linear_dependence");
    int level = 0;
    for (const auto& x : xis) {
        require_same_config(cfg, x.config());
        level = std::max(level, x.level());
    }
    const i64 pn = ipow(cfg->p(), level);
    // Column s holds the residues of p a_{s,i}, i >= 1: the class data of ξ_s.
    std::vector<ResidueVector> cols;
    for (const auto& x : xis) {
        const auto a = coefficients_over_base(x.embed(level));
        ResidueVector col;
        for (i64 i = 1; i < pn; ++i) {
            if (a[i].valuation().certainly_below(Rational(-1)))
                throw InvalidArgument("element has valuation below -1/(p-1) normalization");
            col.push_back(residue(a[i].mul_pi_power(1)));
        }
        cols.push_back(std::move(col));
    }
    if (std::all_of(cols.front().begin(), cols.front().end(), [](const ResidueElement& c) { return c.is_zero(); }))
        throw InvalidArgument("the first element represents the zero class");
    // Digits x_1..x_n are known; an order-r relation is tested on the windows
    // m = 1..n-r, the rows not touched by the truncation at level n.
    const int avail = std::min(static_cast<int>(xis.size()) - 1, level / 2);
    if (r_max > level / 2)
        throw WindowTooShort("level " + std::to_string(level) + " gives digits x_1..x_" + std::to_string(level) +
                             "; order " + std::to_string(r_max) + " needs " + std::to_string(2 * r_max));
    const int top = r_max < 0 ? avail : std::min(r_max, avail);
    const i64 p = cfg->p();
    for (int r = 1; r <= top; ++r) {
        std::vector<ResidueVector> rows;
        for (i64 i = 1; i < pn; ++i) {
            // i = p^n - p^{n-m} carries the digit of η_m.
            const i64 gap = pn - i;
            const bool eta_row = gap == ipow(p, vp(gap, p));
            if (eta_row && level - vp(gap, p) > level - r) continue;
            ResidueVector row;
            for (int s = 0; s <= r; ++s) row.push_back(cols[s][i - 1]);
            rows.push_back(std::move(row));
        }
        if (auto v = lex_first_nonzero(cfg->field(), kernel_basis(cfg->field(), rows, r + 1)))
            return TwistRelation(cfg->field(), *v);
    }
    throw NoDependenceFound("no K-linear dependence of order <= " + std::to_string(top));
}

// ------------------------------------------------------- witness polynomial

TowerElement AdditiveWitnessPolynomial::evaluate(const TowerElement& y) const {
    const int level = std::max(y.level(), constant.level());
    TowerElement acc = constant.embed(level);
    const TowerElement yy = y.embed(level);
    TowerElement power = yy;  // y^{p^s}
    for (std::size_t s = 0; s < delta.size(); ++s) {
        if (s > 0) power = power.pow(static_cast<unsigned>(config->p()));
        acc += delta[s].embed(level) * power;
    }
    return acc;
}

AdditiveWitnessPolynomial build_witness_polynomial(const Config& cfg, const TwistRelation& rel,
                                                   const std::vector<ResidueElement>& digit_prefix) {
    require_unramified(cfg, "build_witness_polynomial");
    if (!same_field(cfg->field(), rel.field())) throw FieldMismatch("relation over a different residue field");
    if (!rel.dr_nonzero()) throw LeadingCoefficientZero("witness polynomial needs d_r != 0");
    const int r = rel.order();
    if (digit_prefix.size() < static_cast<std::size_t>(2 * r))
        throw WindowTooShort("witness polynomial of order " + std::to_string(r) + " needs digits x_1..x_" +
                             std::to_string(2 * r));
    AdditiveWitnessPolynomial P{cfg, rel, digit_prefix, {}, TowerElement::zero(cfg, r)};
    for (const auto& d : rel.coeffs()) P.delta.push_back(TowerElement::teichmuller(cfg, 0, d, 0));
    // x[k] is x_k (1-based).
    auto x = [&](int k) { return digit_prefix[k - 1]; };
    TowerElement c = TowerElement::zero(cfg, r);
    for (int m = 1; m <= r; ++m) {
        TowerElement coef = TowerElement::zero(cfg, 0);
        for (int s = r + 1 - m; s <= r; ++s)
            coef += P.delta[s] * TowerElement::teichmuller(cfg, 0, frobenius(x(m + s), s), 0);
        c += coef.embed(r) * TowerElement::eta(cfg, m, r);
    }
    P.constant = -c;
    return P;
}

TowerElement witness_partial_root(const AdditiveWitnessPolynomial& P, int n) {
    if (n < 1) throw InvalidArgument("stage n must be >= 1");
    const int r = P.relation.order();
    const auto& cfg = P.config;
    std::vector<ResidueElement> digits = P.digits;
    if (digits.size() < static_cast<std::size_t>(n + r)) {
        const TwistSequence seed(digits.begin(), digits.begin() + r);
        const auto ext = extend_sequence(P.relation, seed, n + r);
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (!(digits[i] == ext[i]))
                throw InvalidArgument("digit prefix does not satisfy the relation at x_" + std::to_string(i + 1));
        digits = ext;
    }
    const int level = n + r;
    TowerElement xi = TowerElement::zero(cfg, level);
    for (int i = r + 1; i <= n + r; ++i)
        xi += TowerElement::teichmuller(cfg, level, digits[i - 1], -ipow(cfg->p(), level - i));
    return xi;
}

Valuation approximate_root_defect(const AdditiveWitnessPolynomial& P, int n) {
    return P.evaluate(witness_partial_root(P, n)).valuation();
}

std::map<i64, Valuation> stage_polynomial_valuations(const AdditiveWitnessPolynomial& P, int n) {
    const auto& cfg = P.config;
    const i64 p = cfg->p();
    const int r = P.relation.order();
    const int level = n + r + 1;
    const TowerElement S = witness_partial_root(P, n).embed(level);
    const TowerElement E = TowerElement::eta(cfg, level, level);
    const i64 top = ipow(p, r);
    std::vector<TowerElement> Spow{TowerElement::from_integer(cfg, level, 1)};
    for (i64 k = 1; k <= top; ++k) Spow.push_back(Spow.back() * S);
    std::map<i64, Valuation> out;
    out.emplace(0, P.evaluate(S).valuation());
    TowerElement Ej = TowerElement::from_integer(cfg, level, 1);
    for (i64 j = 1; j <= top; ++j) {
        Ej = Ej * E;
        TowerElement c = TowerElement::zero(cfg, level);
        for (int s = 0; s <= r; ++s) {
            const i64 ps = ipow(p, s);
            const i64 b = binomial(ps, j);
            if (b == 0) continue;
            c += P.delta[s].embed(level) * TowerElement::from_integer(cfg, level, b) * Spow[ps - j];
        }
        out.emplace(j, (c * Ej).valuation());
    }
    return out;
}

// ------------------------------------------------------------ Newton polygon

NewtonPolygon newton_polygon(const std::map<i64, Valuation>& coeff_valuations) {
    std::vector<std::pair<i64, Rational>> pts;
    for (const auto& [j, v] : coeff_valuations)
        if (v.is_exact()) pts.emplace_back(j, v.value());
    if (pts.empty() || (pts.size() == 1 && pts.front().first == 0))
        throw DegenerateInput("Newton polygon of a constant or zero polynomial");
    for (auto it = coeff_valuations.rbegin(); it != coeff_valuations.rend(); ++it) {
        if (it->second.is_infinite()) continue;
        if (!it->second.is_exact()) throw DegenerateInput("leading coefficient is not known to be nonzero");
        break;
    }

    std::vector<std::pair<i64, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b unless it lies strictly below the chord a -> pt.
            const Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            const Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.zero_roots = hull.front().first;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const i64 len = hull[k + 1].first - hull[k].first;
        np.segments.push_back({(hull[k + 1].second - hull[k].second) / Rational(len), len});
    }
    // Coefficients that are zero only to working precision must not undercut the hull.
    for (const auto& [j, v] : coeff_valuations) {
        if (!v.is_at_least()) continue;
        if (j < hull.front().first)
            throw PrecisionExhausted("coefficient of degree " + std::to_string(j) + " is undetermined");
        for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
            if (j < hull[k].first || j > hull[k + 1].first) continue;
            const Rational at = hull[k].second + np.segments[k].slope * Rational(j - hull[k].first);
            if (v.bound() < at)
                throw PrecisionExhausted("coefficient of degree " + std::to_string(j) +
                                         " could lie below the Newton polygon");
        }
    }
    return np;
}

bool has_positive_valuation_root(const NewtonPolygon& np) {
    if (np.zero_roots > 0) return true;
    return std::any_of(np.segments.begin(), np.segments.end(),
                       [](const NewtonSegment& s) { return s.slope < Rational(0); });
}

bool has_integral_root(const NewtonPolygon& np) {
    if (np.zero_roots > 0) return true;
    return std::any_of(np.segments.begin(), np.segments.end(),
                       [](const NewtonSegment& s) { return s.slope <= Rational(0); });
}

// ------------------------------------------------------ ramified combinatorics

std::int64_t gamma_index(i64 p, int e, int i, i64 j) {
    const i64 tau = e / (p - 1);
    const i64 rho = e * p / (p - 1);
    const i64 pi = ipow(p, i);
    for (i64 s = rho; s > tau; --s)
        if (((s - j) % pi + pi) % pi == 0) return s;
    throw InvalidArgument("no s in (tau, rho] congruent to j modulo p^i");
}

IndexSet index_sets(i64 p, int e, int r) {
    if (p < 2) throw InvalidArgument("p must be a prime");
    if (e < 1 || r < 1) throw InvalidArgument("e and r must be >= 1");
    IndexSet s;
    s.p = p;
    s.e = e;
    s.r = r;
    s.tau = e / (p - 1);
    s.rho = e * p / (p - 1);
    s.bound = Rational(p * e, r * (p - 1) * (p - 1));
    std::set<std::pair<int, i64>> I;
    for (int i = 1; r * ipow(p, i) < s.rho; ++i) {
        const i64 pi = ipow(p, i);
        for (i64 j = s.tau + 1; j <= s.rho; ++j)
            if (j % pi != 0) I.emplace(i, gamma_index(p, e, i, j));
    }
    s.pairs.assign(I.begin(), I.end());
    for (const auto& [i, g] : s.pairs)
        if (r * ipow(p, i) < g) s.pairs_r.emplace_back(i, g);
    return s;
}

std::map<std::pair<int, i64>, TowerElement> ramified_support(const InvariantClass& cls) {
    const auto& cfg = cls.rep.config();
    const i64 p = cfg->p();
    const int e = cfg->e();
    const i64 tau = e / (p - 1);
    const i64 rho = e * p / (p - 1);
    const int n = cls.normalized.level();
    std::map<std::pair<int, i64>, TowerElement> out;
    for (const auto& [idx, c] : negative_digits(cls.normalized)) {
        // π_n^{-k} = η_i^j with j = k p^t in (τ, ρ], i = n + t.
        i64 j = -idx;
        int t = 0;
        while (j > rho && j % p == 0) {
            j /= p;
            --t;
        }
        while (j <= tau) {
            j *= p;
            ++t;
        }
        if (j <= tau || j > rho)
            throw SupportViolation("nonzero digit " + c.to_string() + " at index " + std::to_string(idx) +
                                   " of level " + std::to_string(n) + " is not of the form η_i^j, j in (" +
                                   std::to_string(tau) + "," + std::to_string(rho) + "]");
        const int i = n + t;
        if (i <= 0 || j % ipow(p, i) == 0) continue;  // lies in K
        const i64 g = gamma_index(p, e, i, j);
        const i64 lambda = (g - j) / ipow(p, i);
        const auto key = std::make_pair(i, g);
        auto term = TowerElement::teichmuller(cfg, 0, c, lambda);
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, term);
        else it->second += term;
    }
    return out;
}

TowerElement resum_ramified_support(const Config& cfg, int level,
                                    const std::map<std::pair<int, i64>, TowerElement>& support) {
    int top = level;
    for (const auto& [key, beta] : support) top = std::max(top, key.first);
    TowerElement acc = TowerElement::zero(cfg, top);
    for (const auto& [key, beta] : support) {
        const auto [i, g] = key;
        acc += beta.embed(top).mul_pi_power(-g * ipow(cfg->p(), top - i));
    }
    return acc;
}

}  // namespace axtower
