#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lightsout/field.hpp"
#include "lightsout/poly2.hpp"

using namespace lightsout;

TEST_CASE("poly_mulmod") {
    Poly2 m = Poly2::from_mask(0b111);  // x^2+x+1
    CHECK(poly_mulmod(Poly2::x(), Poly2::x(), m) == Poly2::from_mask(0b11));  // x+1
    Poly2 a = Poly2::from_mask(0b1011);
    Poly2 deg5 = Poly2::from_mask(0b100101);
    CHECK(poly_mulmod(a, Poly2::one(), deg5) == a.mod(deg5));
    Poly2 xp1 = Poly2::from_mask(0b11);
    CHECK(poly_mulmod(xp1, xp1, deg5) == Poly2::from_mask(0b101));  // x^2+1
    CHECK_THROWS_AS(poly_mulmod(a, a, Poly2::zero()), std::invalid_argument);
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(Poly2::from_mask(0b111)));        // x^2+x+1
    CHECK(!is_irreducible(Poly2::from_mask(0b101)));       // x^2+1 = (x+1)^2
    CHECK(is_irreducible(Poly2::from_mask(0b10011)));   // x^4+x+1
    CHECK(is_irreducible(Poly2::from_mask(0b11111)));   // x^4+x^3+x^2+x+1 (5th cyclotomic)
    CHECK(!is_irreducible(Poly2::from_mask(0b11011)));  // x^4+x^3+x+1 has root 1
}

TEST_CASE("find_modulus smallest masks") {
    CHECK(find_modulus(1).low_mask() == 0b10);       // x
    CHECK(find_modulus(2).low_mask() == 0b111);      // x^2+x+1
    CHECK(find_modulus(4).low_mask() == 0b10011);    // x^4+x+1
    CHECK(find_modulus(3).low_mask() == 0b1011);     // x^3+x+1
}

TEST_CASE("elem_order") {
    FieldCtx gf4(2);
    CHECK(elem_order(gf4.one()) == 1);
    for (std::uint64_t r = 2; r <= 3; ++r) CHECK(elem_order(gf4.elem(r)) == 3);
    CHECK_THROWS_AS(elem_order(gf4.zero()), std::invalid_argument);

    FieldCtx gf16(4);
    FieldElem alpha = root_of_unity(5, gf16);
    CHECK(alpha.pow(5).is_one());
    CHECK(!alpha.is_one());
    CHECK(elem_order(alpha) == 5);
}

TEST_CASE("factor_small") {
    CHECK(factor_small(1).empty());
    using F = std::vector<std::pair<std::uint64_t, int>>;
    CHECK(factor_small(262143) == F{{3, 3}, {7, 1}, {19, 1}, {73, 1}});
    CHECK(factor_small(15) == F{{3, 1}, {5, 1}});
}

TEST_CASE("ord2 and sord2") {
    CHECK(ord2(7) == 3);
    CHECK(ord2(1) == 1);
    CHECK(ord2(37) == 36);
    CHECK(sord2(5) == 2);
    CHECK(sord2(7) == 3);
    CHECK(sord2(37) == 18);
    CHECK(sord2(1) == 1);
    CHECK(sord2(3) == 1);
    CHECK_THROWS_AS(ord2(6), std::invalid_argument);
    CHECK_THROWS_AS(sord2(4), std::invalid_argument);
}

TEST_CASE("root_of_unity") {
    FieldCtx gf4(2);
    FieldElem w = root_of_unity(3, gf4);
    CHECK(elem_order(w) == 3);
    FieldCtx gf8(3);
    CHECK(elem_order(root_of_unity(7, gf8)) == 7);
    CHECK_THROWS_AS(root_of_unity(5, gf8), std::invalid_argument);
}

TEST_CASE("field element mixing is rejected") {
    FieldCtx a(3), b(3);
    CHECK_THROWS_AS(a.one() + b.one(), std::invalid_argument);
}

TEST_CASE("wide field arithmetic agrees with the narrow field") {
    std::mt19937_64 rng(123);
    for (unsigned m : {2u, 9u, 23u, 40u, 61u}) {
        WideFieldCtx wide(m);
        FieldCtx narrow(m);
        for (int t = 0; t < 200; ++t) {
            std::uint64_t x = rng() & narrow.group_order(), y = rng() & narrow.group_order();
            CHECK(std::uint64_t(wide.mul(x, y)) == narrow.mul(x, y));
        }
    }
}

TEST_CASE("wide field axioms beyond the 64-bit range") {
    WideFieldCtx big(82);
    using R = WideFieldCtx::Repr;
    std::mt19937_64 rng(456);
    auto rand_elem = [&] { return (R(rng()) << 64 | rng()) & ((R(1) << 82) - 1); };
    for (int t = 0; t < 60; ++t) {
        R x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK(big.mul(x, y) == big.mul(y, x));
        CHECK(big.mul(big.mul(x, y), z) == big.mul(x, big.mul(y, z)));
        CHECK(big.mul(x, y ^ z) == (big.mul(x, y) ^ big.mul(x, z)));
        // Frobenius: squaring is additive.
        CHECK(big.mul(x ^ y, x ^ y) == (big.mul(x, x) ^ big.mul(y, y)));
        if (x) CHECK(big.mul(x, big.inverse(x)) == 1);
    }
    R alpha = big.root_of_unity(83);
    CHECK(big.pow(alpha, 83) == 1);
    CHECK(alpha != 1);
    // Exact order: 83 is prime, so any nontrivial 83rd root has order 83.
    for (std::uint64_t e = 1; e < 83; ++e) CHECK(big.pow(alpha, e) != 1);
}
