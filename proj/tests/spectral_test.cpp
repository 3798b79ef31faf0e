#include <doctest.h>

#include <stdexcept>

#include "lightsout/automata.hpp"
#include "lightsout/fieldmat.hpp"
#include "lightsout/spectral.hpp"

using namespace lightsout;

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_poly(0) == Poly2::one());
    CHECK(chebyshev_poly(1) == Poly2::x());
    CHECK(chebyshev_poly(2) == Poly2::from_mask(0b101));   // x^2+1
    CHECK(chebyshev_poly(3) == Poly2::from_mask(0b1000));  // x^3
    CHECK(chebyshev_poly(5) == Poly2::from_mask(0b100010));  // x^5+x
    for (std::size_t i = 0; i <= 256; ++i) CHECK(chebyshev_poly(i).degree() == int(i));
}

TEST_CASE("polynomial identities") {
    CHECK(chebyshev_poly(2) == (chebyshev_poly(1) + chebyshev_poly(0)).square());
    CHECK(chebyshev_poly(3) == Poly2::x() * chebyshev_poly(1).square());
    for (std::size_t i = 1; i <= 32; ++i) CHECK(verify_poly_identities(i));
}

TEST_CASE("odd reduction") {
    OddReduction r3 = odd_reduction(3);
    CHECK(r3.a == 2);
    CHECK(r3.b == 1);
    CHECK(r3.identity_holds);
    OddReduction r5 = odd_reduction(5);
    CHECK(r5.a == 1);
    CHECK(r5.b == 3);
    CHECK(r5.identity_holds);
    CHECK(odd_reduction(9).identity_holds);
    CHECK_THROWS_AS(odd_reduction(4), std::invalid_argument);
}

TEST_CASE("characteristic polynomial annihilates") {
    // A_2^2 = I so p_2 = x^2+1 vanishes; A_3 is nilpotent of index 3.
    CHECK(poly_eval_matrix(chebyshev_poly(2), build_phi_matrix(2)).is_zero());
    CHECK(poly_eval_matrix(chebyshev_poly(3), build_phi_matrix(3)).is_zero());
    for (std::size_t n : {2, 3, 6, 12, 15}) CHECK(char_poly_annihilates(n));
}

TEST_CASE("chebyshev equals the characteristic polynomial by field evaluation") {
    // Independent route: interpolate det(cI - A) over GF(2^6) at n+1 points.
    FieldCtx ctx(6);
    for (std::size_t n = 1; n <= 24; ++n) {
        BitMatrix a = build_phi_matrix(n);
        Poly2 p = chebyshev_poly(n);
        for (std::uint64_t c = 0; c <= n; ++c) {
            FieldMat shifted = FieldMat::lift(ctx, a);
            for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, shifted.get(i, i) ^ c);
            CHECK(shifted.determinant() == poly_eval(p, ctx.elem(c)).repr);
        }
    }
}

TEST_CASE("eigen_structure") {
    EigenData e2 = eigen_structure(2);
    CHECK(e2.b == 3);
    CHECK(e2.eigenvalues.size() == 1);
    CHECK(e2.eigenvalues[0].is_one());  // alpha + alpha^-1 = 1 in GF(4)

    EigenData e4 = eigen_structure(4);
    CHECK(e4.eigenvalues.size() == 2);
    FieldElem beta = e4.eigenvalues[0];
    CHECK(e4.eigenvalues[1] == beta * beta);
    CHECK((beta * beta + beta + e4.ctx->one()).is_zero());  // beta^2+beta+1 = 0
    CHECK(elem_order(e4.eigenvalues[0]) == 3);
    CHECK(elem_order(e4.eigenvalues[1]) == 3);

    EigenData e6 = eigen_structure(6);
    CHECK(e6.eigenvalues.size() == 3);
    for (const FieldElem& lambda : e6.eigenvalues) CHECK(elem_order(lambda) == 7);

    EigenData e7 = eigen_structure(7);
    CHECK(e7.b == 1);
    CHECK(e7.eigenvalues.empty());
    CHECK(e7.zero_block_size == 7);
}

TEST_CASE("geometric multiplicity") {
    for (std::size_t n : {2, 4, 9, 12}) CHECK(geometric_multiplicity_check(n));
}

TEST_CASE("sum_as_product") {
    FieldCtx gf8(3);
    auto [k1, k2] = sum_as_product(1, 3, 7, gf8);
    CHECK(k1 == 2);
    CHECK(k2 == 1);
    auto [j1, j2] = sum_as_product(1, 2, 7, gf8);
    CHECK(j1 == 3);
    CHECK(j2 == 2);
    CHECK_THROWS_AS(sum_as_product(2, 5, 7, gf8), std::invalid_argument);  // 5 = -2 mod 7
    CHECK_THROWS_AS(sum_as_product(3, 3, 7, gf8), std::invalid_argument);
    // Wide path: ord2(67) = 66 exceeds the narrow-field cap.
    auto [w1, w2] = sum_as_product(1, 3, 67);
    CHECK(w1 == 2);
    CHECK(w2 == 1);
}

TEST_CASE("group lcm equality") {
    CHECK(!group_lcm_equality(2));
    CHECK(!group_lcm_equality(4));
    CHECK(group_lcm_equality(6));
    CHECK(group_lcm_equality(36));
}

TEST_CASE("jordan profile") {
    auto p9 = jordan_profile_phi(9);  // a=1, b=5: two 4-blocks and a zero 1-block
    CHECK(p9.size() == 3);
    CHECK(p9[0].size == 4);
    CHECK(p9[1].size == 4);
    CHECK(p9[2].zero);
    CHECK(p9[2].size == 1);

    auto p6 = jordan_profile_phi(6);  // three 2-blocks, no zero block
    CHECK(p6.size() == 3);
    for (const auto& blk : p6) {
        CHECK(!blk.zero);
        CHECK(blk.size == 2);
    }

    auto p7 = jordan_profile_phi(7);  // single zero block of size 7
    CHECK(p7.size() == 1);
    CHECK(p7[0].zero);
    CHECK(p7[0].size == 7);
}
