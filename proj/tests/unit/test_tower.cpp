#include "axtower/errors.hpp"
#include "axtower/tower.hpp"

#include <doctest.h>

#include <random>

using namespace axtower;

namespace {

TowerElement random_element(const Config& cfg, int level, std::int64_t shift, std::mt19937_64& rng) {
    const std::int64_t N = cfg->e() * ipow(cfg->p(), level);
    std::uniform_int_distribution<std::int64_t> d(0, cfg->p() - 1);
    std::vector<WCoeffs> c(N, WCoeffs(cfg->f()));
    for (auto& w : c)
        for (auto& t : w) t = d(rng);
    c[0][0] = 1 + d(rng) % (cfg->p() - 1);
    return TowerElement::from_coeffs(cfg, level, shift, c);
}

Config ramified_2() {
    // E(T) = T^2 + 2T + 2 over Q_2
    return TowerConfig::make(ResidueField::prime(2), 2, {{2}, {2}, {1}}, 0);
}

}  // namespace

TEST_CASE("configuration checks") {
    auto F2 = ResidueField::prime(2);
    CHECK_THROWS_AS(TowerConfig::make(F2, 2, {{4}, {0}, {1}}, 0), InvalidArgument);
    CHECK_THROWS_AS(TowerConfig::make(F2, 2, {{2}, {1}, {1}}, 0), InvalidArgument);
    CHECK_THROWS_AS(TowerConfig::make(F2, 1, {{2}, {1}}, 40), UnsupportedConfig);
    CHECK(TowerConfig::max_precision(2) == 30);
    CHECK(TowerConfig::max_precision(97) == 4);
    CHECK(TowerConfig::default_precision(3) == 12);
    auto cfg = ramified_2();
    // p/π = -π - 2
    CHECK(cfg->p_over_pi()[0][0] == cfg->modulus() - 2);
    CHECK(cfg->p_over_pi()[1][0] == cfg->modulus() - 1);
}

TEST_CASE("uniformizer valuations") {
    auto cfg = TowerConfig::unramified(ResidueField::prime(3));
    for (int n = 0; n <= 3; ++n) {
        auto pi = TowerElement::uniformizer(cfg, n);
        CHECK(pi.valuation() == Valuation::exact(Rational(1, ipow(3, n))));
        CHECK(TowerElement::eta(cfg, n, 3).valuation() == Valuation::exact(Rational(-1, ipow(3, n))));
    }
    auto pi2 = TowerElement::uniformizer(cfg, 2);
    auto diff = pi2.pow(9) - TowerElement::from_integer(cfg, 2, 3);
    CHECK(diff.valuation().is_at_least());
    CHECK(TowerElement::zero(cfg, 1).valuation() == Valuation::infinite());
    CHECK(TowerElement::from_integer(cfg, 0, 18).valuation() == Valuation::exact(Rational(2)));
}

TEST_CASE("ramified base field") {
    auto cfg = ramified_2();
    auto pi = TowerElement::uniformizer(cfg, 0);
    CHECK(pi.valuation() == Valuation::exact(Rational(1, 2)));
    // π^2 = -2π - 2
    auto lhs = pi * pi;
    auto rhs = TowerElement::from_integer(cfg, 0, -2) - pi * TowerElement::from_integer(cfg, 0, 2);
    CHECK((lhs - rhs).valuation().is_at_least());
    auto pi1 = TowerElement::uniformizer(cfg, 1);
    CHECK(pi1.valuation() == Valuation::exact(Rational(1, 4)));
    CHECK((pi1.pow(2) - pi.embed(1)).valuation().is_at_least());
    CHECK(pi1.pow(4).valuation() == Valuation::exact(Rational(1)));
}

TEST_CASE("ring identities on random elements") {
    std::mt19937_64 rng(7);
    for (auto cfg : {TowerConfig::unramified(ResidueField::prime(2)), TowerConfig::unramified(ResidueField::prime(5)),
                     ramified_2(), TowerConfig::unramified(ResidueField::make(2, {1, 1, 1})),
                     TowerConfig::pure(ResidueField::prime(3), 2)}) {
        for (int n = 0; n <= 2; ++n) {
            auto x = random_element(cfg, n, -3, rng);
            auto y = random_element(cfg, n, 2, rng);
            auto z = random_element(cfg, n, 0, rng);
            CHECK((x * (y + z) - (x * y + x * z)).is_zero());
            CHECK(((x + y) - y - x).is_zero());
            CHECK((x * y - y * x).is_zero());
            CHECK((x * y).valuation() == Valuation::exact(x.valuation().value() + y.valuation().value()));
            CHECK((x.embed(n + 1) * y.embed(n + 1) - (x * y).embed(n + 1)).is_zero());
            CHECK(x.embed(n + 1).valuation() == x.valuation());
            CHECK((x - x).valuation().is_at_least());
        }
    }
}

TEST_CASE("precision is tracked") {
    auto cfg = TowerConfig::unramified(ResidueField::prime(2), 5);
    auto one = TowerElement::from_integer(cfg, 1, 1);
    CHECK(one.cutoff() == 10);
    auto eta = TowerElement::eta(cfg, 1, 1);
    CHECK((one * eta).cutoff() == 9);
    auto zero_ish = one - one;
    CHECK(zero_ish.valuation() == Valuation::at_least(Rational(5)));
    CHECK_THROWS_AS(zero_ish.valuation().value(), PrecisionExhausted);
    auto sum = one + one.mul_pi_power(20);
    CHECK(sum.cutoff() == 10);
}

TEST_CASE("Teichmuller digits") {
    auto F3 = ResidueField::prime(3);
    auto cfg = TowerConfig::unramified(F3);
    auto minus_one = TowerElement::from_integer(cfg, 0, -1);
    auto digits = teichmuller_expand(minus_one, 0, 5);
    CHECK(digits.at(0) == ResidueElement::from_int(F3, 2));
    for (int i = 1; i < 5; ++i) CHECK(digits.at(i).is_zero());

    auto F2 = ResidueField::prime(2);
    auto cfg2 = TowerConfig::unramified(F2);
    auto d = teichmuller_expand(TowerElement::from_integer(cfg2, 0, 11), 0, 5);
    CHECK(d.at(0).index() == 1);
    CHECK(d.at(1).index() == 1);
    CHECK(d.at(2).index() == 0);
    CHECK(d.at(3).index() == 1);
    CHECK(d.at(4).index() == 0);
    CHECK_THROWS_AS(teichmuller_expand(TowerElement::from_integer(cfg2, 0, 11), 0, 100), PrecisionExhausted);

    auto F5 = ResidueField::prime(5);
    auto cfg5 = TowerConfig::unramified(F5);
    auto i5 = TowerElement::teichmuller(cfg5, 0, ResidueElement::from_int(F5, 2), 0);
    CHECK((i5 * i5 + TowerElement::from_integer(cfg5, 0, 1)).valuation().is_at_least());
}

TEST_CASE("digit expansion reconstructs the element") {
    std::mt19937_64 rng(11);
    for (auto cfg : {TowerConfig::unramified(ResidueField::prime(3), 4), ramified_2(),
                     TowerConfig::unramified(ResidueField::make(3, {1, 0, 1}), 4)}) {
        for (int n = 0; n <= 2; ++n) {
            auto x = random_element(cfg, n, -5, rng);
            auto digits = teichmuller_expand(x, -7, x.cutoff());
            auto acc = TowerElement::zero(cfg, n);
            for (const auto& [i, c] : digits) acc += TowerElement::teichmuller(cfg, n, c, i);
            CHECK((acc - x).valuation().is_at_least());
            CHECK(residue(x.mul_pi_power(5)) == digits.at(-5));
        }
    }
}

TEST_CASE("coefficients over the base field") {
    std::mt19937_64 rng(3);
    for (auto cfg : {TowerConfig::unramified(ResidueField::prime(2)), ramified_2(),
                     TowerConfig::pure(ResidueField::prime(3), 2)}) {
        for (int n = 0; n <= 3; ++n) {
            auto x = random_element(cfg, n, -4, rng);
            auto a = coefficients_over_base(x);
            CHECK(static_cast<std::int64_t>(a.size()) == ipow(cfg->p(), n));
            auto back = from_base_coefficients(cfg, n, a);
            CHECK((back - x).valuation().is_at_least());
        }
    }
    auto cfg = TowerConfig::unramified(ResidueField::prime(2));
    // π_2 + π_2^3 + 5
    auto x = TowerElement::uniformizer(cfg, 2) + TowerElement::uniformizer(cfg, 2).pow(3) +
             TowerElement::from_integer(cfg, 2, 5);
    auto a = coefficients_over_base(x);
    CHECK(a[0].valuation() == Valuation::exact(Rational(0)));
    CHECK(a[1].valuation() == Valuation::exact(Rational(0)));
    CHECK(a[2].valuation().is_at_least());
    CHECK(a[3].valuation() == Valuation::exact(Rational(0)));
}
