#include "axtower/errors.hpp"
#include "axtower/field.hpp"

#include <doctest.h>

using namespace axtower;

namespace {

std::vector<Field> small_fields() {
    return {ResidueField::prime(2),          ResidueField::prime(3),          ResidueField::prime(5),
            ResidueField::make(2, {1, 1, 1}), ResidueField::make(3, {1, 0, 1}), ResidueField::make(2, {1, 1, 0, 1}),
            ResidueField::make(3, {1, 2, 0, 1})};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto F2 = ResidueField::prime(2);
    auto one = ResidueElement::one(F2);
    CHECK((one + one).is_zero());
    auto F7 = ResidueField::prime(7);
    CHECK(ResidueElement::from_int(F7, 3).inv() == ResidueElement::from_int(F7, 5));
    CHECK(ResidueElement::from_int(F7, -1) == ResidueElement::from_int(F7, 6));
}

TEST_CASE("extension field arithmetic") {
    auto F4 = ResidueField::make(2, {1, 1, 1});
    ResidueElement w(F4, {0, 1});
    CHECK(w * w == ResidueElement(F4, {1, 1}));
    CHECK(w.pow(3) == ResidueElement::one(F4));

    auto F9 = ResidueField::make(3, {1, 0, 1});
    ResidueElement t(F9, {0, 1});
    CHECK(t.inv() == ResidueElement(F9, {0, 2}));
    CHECK(t.inv().to_string() == "[0,2]");
}

TEST_CASE("field construction is validated") {
    CHECK_THROWS_AS(ResidueField::prime(4), InvalidArgument);
    CHECK_THROWS_AS(ResidueField::prime(101), UnsupportedConfig);
    CHECK_THROWS_AS(ResidueField::make(2, {1, 0, 1}), InvalidArgument);  // t^2+1 = (t+1)^2
    CHECK_THROWS_AS(ResidueField::make(2, {1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(ResidueField::make(2, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}), UnsupportedConfig);
}

TEST_CASE("mixed fields are rejected") {
    auto a = ResidueElement::one(ResidueField::prime(2));
    auto b = ResidueElement::one(ResidueField::prime(3));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(ResidueElement::zero(ResidueField::prime(5)).inv(), DivisionByZero);
}

TEST_CASE("field axioms and Frobenius exhaustively on small fields") {
    for (const auto& F : small_fields()) {
        CAPTURE(F->order());
        const auto q = F->order();
        for (std::uint64_t i = 0; i < q; ++i) {
            auto a = ResidueElement::from_index(F, i);
            CHECK(a.index() == i);
            CHECK(a.pow(q) == a);
            CHECK(frobenius(a, F->degree()) == a);
            CHECK(frobenius_inverse(frobenius(a, 1), 1) == a);
            CHECK(frobenius(a, 1) == a.pow(F->p()));
            if (!a.is_zero()) CHECK(a * a.inv() == ResidueElement::one(F));
            for (std::uint64_t j = 0; j < q; j += (q > 27 ? 7 : 1)) {
                auto b = ResidueElement::from_index(F, j);
                CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
                CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
                CHECK(a * b == b * a);
            }
        }
    }
}

TEST_CASE("kernel basis and lexicographic first vector") {
    auto F3 = ResidueField::prime(3);
    auto e = [&](std::int64_t v) { return ResidueElement::from_int(F3, v); };
    // x0 + x1 + x2 = 0
    auto basis = kernel_basis(F3, {{e(1), e(1), e(1)}}, 3);
    CHECK(basis.size() == 2);
    auto v = lex_first_nonzero(F3, basis);
    REQUIRE(v.has_value());
    CHECK((*v)[0] == e(0));
    CHECK((*v)[1] == e(1));
    CHECK((*v)[2] == e(2));
    CHECK_FALSE(lex_first_nonzero(F3, {}).has_value());
}
