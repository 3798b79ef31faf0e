#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lightsout/automata.hpp"
#include "lightsout/bitmat.hpp"

using namespace lightsout;

namespace {

BitMatrix ones(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, true);
    return m;
}

BitMatrix nilpotent_block(std::size_t m) {
    BitMatrix j(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) j.set(i, i + 1, true);
    return j;
}

}  // namespace

TEST_CASE("mat_add characteristic 2") {
    BitMatrix a = build_phi_matrix(5);
    CHECK(mat_add(a, a).is_zero());
    CHECK(mat_add(a, BitMatrix::zero(5, 5)) == a);
    CHECK(mat_add(build_phi_matrix(2), BitMatrix::identity(2)) == ones(2));
    CHECK_THROWS_AS(mat_add(a, BitMatrix::zero(4, 5)), std::invalid_argument);
}

TEST_CASE("mat_mul identities and swap involution") {
    BitMatrix a = build_phi_matrix(7);
    CHECK(mat_mul(BitMatrix::identity(7), a) == a);
    BitMatrix swap = build_phi_matrix(2);
    CHECK(mat_mul(swap, swap) == BitMatrix::identity(2));
    CHECK_THROWS_AS(mat_mul(a, BitMatrix::zero(3, 3)), std::invalid_argument);
}

TEST_CASE("mat_pow") {
    BitMatrix a = build_phi_matrix(6);
    CHECK(mat_pow(a, 0) == BitMatrix::identity(6));
    CHECK(mat_pow(a, 1) == a);
    // CL(phi_6) = 14 with no transient: A^(k+14) = A^k, and A^14 = A^0 = I.
    CHECK(mat_pow(a, 20) == mat_pow(a, 6));
    CHECK(mat_pow(a, 14) == BitMatrix::identity(6));
    for (std::uint64_t k = 1; k < 14; ++k) CHECK(mat_pow(a, k) != BitMatrix::identity(6));
}

TEST_CASE("kron_product") {
    BitMatrix m = build_phi_matrix(3);
    CHECK(kron_product(BitMatrix::identity(1), m) == m);
    BitMatrix two_blocks = kron_product(BitMatrix::identity(2), build_phi_matrix(2));
    CHECK(two_blocks.rows() == 4);
    CHECK(two_blocks.get(0, 1));
    CHECK(two_blocks.get(2, 3));
    CHECK(!two_blocks.get(0, 2));
    BitMatrix p = kron_product(BitMatrix::zero(3, 3), BitMatrix::zero(4, 4));
    CHECK(p.rows() == 12);
    CHECK(p.cols() == 12);
}

TEST_CASE("kron_sum block-tridiagonal form") {
    std::size_t n = 4;
    BitMatrix a = build_phi_matrix(n);
    BitMatrix t = kron_sum(a, a);
    // Diagonal blocks hold A, off-diagonal blocks hold I.
    BitMatrix expected(n * n, n * n);
    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj) {
            if (bi == bj) {
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (a.get(r, c)) expected.set(bi * n + r, bj * n + c, true);
            } else if (bi + 1 == bj || bj + 1 == bi) {
                for (std::size_t r = 0; r < n; ++r) expected.set(bi * n + r, bj * n + r, true);
            }
        }
    CHECK(t == expected);
    CHECK(kron_sum(BitMatrix::zero(1, 1), BitMatrix::zero(1, 1)) == BitMatrix::zero(1, 1));
    CHECK_THROWS_AS(kron_sum(BitMatrix::zero(2, 3), BitMatrix::zero(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::identity(9)) == 9);
    CHECK(rank(BitMatrix::zero(4, 7)) == 0);
    CHECK(rank(build_phi_matrix(3)) == 2);
}

TEST_CASE("nilpotency_index") {
    CHECK(nilpotency_index(BitMatrix::zero(3, 3)) == 1);
    for (std::size_t m = 1; m <= 9; ++m) CHECK(nilpotency_index(nilpotent_block(m)) == m);
    CHECK(nilpotency_index(kron_sum(nilpotent_block(5), nilpotent_block(5))) == 8);
    CHECK_THROWS_AS(nilpotency_index(BitMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("apply matches explicit multiplication") {
    std::mt19937_64 rng(42);
    BitMatrix a = build_sigma_matrix(5);
    BitVector v(25);
    for (int i = 0; i < 25; ++i) v.set(std::size_t(i), rng() & 1);
    BitVector w = a.apply(v);
    for (std::size_t r = 0; r < 25; ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < 25; ++c) acc ^= a.get(r, c) && v.get(c);
        CHECK(w.get(r) == acc);
    }
}
