#include "axtower/ax.hpp"
#include "axtower/errors.hpp"

#include <doctest.h>

#include <random>

using namespace axtower;

namespace {

Config cfg_p(std::int64_t p) { return TowerConfig::unramified(ResidueField::prime(p)); }

TowerElement pi(const Config& c, int n) { return TowerElement::uniformizer(c, n); }

Valuation exact(std::int64_t a, std::int64_t b = 1) { return Valuation::exact(Rational(a, b)); }

}  // namespace

TEST_CASE("oracle on hand-checked elements") {
    auto c2 = cfg_p(2);
    auto c3 = cfg_p(3);
    CHECK(cyclotomic_oracle_oscillation(pi(c2, 1)) == exact(3, 2));
    CHECK(cyclotomic_oracle_oscillation(pi(c2, 2) + pi(c2, 1)) == exact(3, 4));
    CHECK(cyclotomic_oracle_oscillation(pi(c3, 1)) == exact(5, 6));
    CHECK(cyclotomic_oracle_oscillation(TowerElement::from_integer(c2, 2, 7)) == Valuation::infinite());
    CHECK(cyclotomic_oracle_oscillation(2, 1, {{-1, Rational(1, 3)}}) == exact(1, 2));
    CHECK_THROWS_AS(cyclotomic_oracle_oscillation(pi(cfg_p(5), 1)), UnsupportedConfig);
    CHECK_THROWS_AS(cyclotomic_oracle_oscillation(pi(c3, 2)), UnsupportedConfig);
}

TEST_CASE("oscillation formula") {
    auto c2 = cfg_p(2);
    auto c3 = cfg_p(3);
    auto r = galois_oscillation(pi(c3, 1));
    CHECK(r.oscillation == exact(5, 6));
    CHECK(r.argmin_index == 1);
    CHECK(galois_oscillation(pi(c2, 2) + pi(c2, 1)).oscillation == exact(3, 4));
    CHECK(galois_oscillation(pi(c2, 1)).oscillation == exact(3, 2));
    CHECK(galois_oscillation(TowerElement::from_integer(c2, 0, 5)).oscillation.is_infinite());
    CHECK(galois_oscillation(pi(c2, 1).embed(3) * pi(c2, 1).embed(3)).oscillation.is_infinite());
    // η_1 for p = 2: a_1 = 1/p
    CHECK(galois_oscillation(TowerElement::eta(c2, 1, 1)).oscillation == exact(1, 2));
}

TEST_CASE("best approximants and defects") {
    auto c2 = cfg_p(2);
    auto c3 = cfg_p(3);
    auto x = pi(c2, 2) + pi(c2, 1);
    auto y = best_approximant(x, 1);
    CHECK(y.level() == 1);
    CHECK((y - pi(c2, 1)).valuation().is_at_least());
    CHECK(approximation_defect(x, 1) == exact(1, 4));
    CHECK(approximation_defect(x, 2).is_infinite());
    CHECK(approximation_defect(pi(c3, 1), 0) == exact(1, 3));
    CHECK(best_approximant(pi(c3, 1), 0).is_zero());
    auto z = TowerElement::from_integer(c2, 2, 2) + pi(c2, 2) + pi(c2, 2).pow(3) * TowerElement::from_integer(c2, 2, 2);
    CHECK(approximation_defect(z, 1) == exact(1, 4));
    CHECK(approximation_defect(z, 0) == exact(1, 4));
}

TEST_CASE("identity, equivalence and constants") {
    auto c2 = cfg_p(2);
    auto c3 = cfg_p(3);
    auto id = oscillation_identity(pi(c3, 1));
    CHECK(id.lhs == exact(5, 6));
    CHECK(id.holds());
    auto id2 = oscillation_identity(pi(c2, 2) + pi(c2, 1));
    CHECK(id2.lhs == exact(3, 4));
    CHECK(id2.holds());
    CHECK(oscillation_identity(TowerElement::from_integer(c2, 2, 3)).lhs.is_infinite());
    CHECK(oscillation_identity(TowerElement::from_integer(c2, 2, 3)).holds());

    auto t = approximation_equivalence(pi(c3, 1), Rational(5, 6));
    CHECK(t.oscillation_side);
    CHECK(t.approximation_side);
    auto f = approximation_equivalence(pi(c3, 1), Rational(5, 6) + Rational(1, 1000));
    CHECK_FALSE(f.oscillation_side);
    CHECK_FALSE(f.approximation_side);

    CHECK(ax_constants(2, 0).optimal == Rational(1));
    CHECK(ax_constants(2, 0).ax_original == Rational(2));
    CHECK(ax_constants(3, 1).optimal == Rational(1, 6));
    CHECK(ax_constants(3, 1).ax_original == Rational(3, 4));
}

TEST_CASE("formula agrees with the oracle on random Laurent polynomials") {
    std::mt19937_64 rng(1);
    for (auto [p, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
        auto cfg = cfg_p(p);
        const std::int64_t pn = ipow(p, n);
        for (int trial = 0; trial < 20; ++trial) {
            std::map<std::int64_t, Rational> terms;
            auto x = TowerElement::zero(cfg, n);
            for (std::int64_t k = -pn; k <= pn; ++k) {
                const auto c = static_cast<std::int64_t>(rng() % p);
                if (c == 0) continue;
                terms[k] = Rational(c);
                x += TowerElement::from_integer(cfg, n, c).mul_pi_power(k);
            }
            CHECK(galois_oscillation(x).oscillation == cyclotomic_oracle_oscillation(p, n, terms));
        }
    }
}
