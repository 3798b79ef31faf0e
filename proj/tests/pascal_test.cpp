#include <doctest.h>

#include <stdexcept>

#include "lightsout/pascal.hpp"

using namespace lightsout;

TEST_CASE("binom_parity") {
    for (std::uint64_t k = 1; k <= 7; ++k) CHECK(binom_parity(8, k) == 0);
    for (std::uint64_t p : {0ull, 1ull, 5ull, 31ull, 100ull}) {
        CHECK(binom_parity(p, 0) == 1);
        CHECK(binom_parity(p, p) == 1);
    }
    CHECK(binom_parity(4, 6) == 0);  // q > p
}

TEST_CASE("min_power_vanish") {
    CHECK(min_power_vanish(1) == 1);
    CHECK(min_power_vanish(5) == 8);
    CHECK(min_power_vanish(8) == 8);
    CHECK(min_power_vanish(9) == 16);
}

TEST_CASE("reduce_entry") {
    TriangleLocation loc = reduce_entry(28, 1);
    CHECK(loc.n0 == 4);
    CHECK(loc.k0 == 1);
    CHECK(loc.c == 2);
    loc = reduce_entry(8, 4);
    CHECK(loc.n0 == 8);
    CHECK(loc.k0 == 4);
    CHECK(loc.c == 3);
    CHECK_THROWS_AS(reduce_entry(7, 3), std::invalid_argument);   // odd entry
    CHECK_THROWS_AS(reduce_entry(8, 0), std::invalid_argument);   // boundary
}

TEST_CASE("triangle_base") {
    CHECK(triangle_base(28, 1) == 28);
    CHECK(triangle_base(8, 4) == 8);
    CHECK(triangle_base(20, 13) == 16);
    CHECK(!triangle_base(7, 3).has_value());
    CHECK(!triangle_base(9, 0).has_value());
    CHECK(!triangle_base(9, 9).has_value());
}

TEST_CASE("largest_block_kron_sum against the known 5x5 table") {
    const std::uint64_t table[5][5] = {{1, 2, 3, 4, 5},
                                       {2, 2, 4, 4, 6},
                                       {3, 4, 4, 4, 7},
                                       {4, 4, 4, 4, 8},
                                       {5, 6, 7, 8, 8}};
    for (std::uint64_t a = 1; a <= 5; ++a)
        for (std::uint64_t b = 1; b <= 5; ++b)
            CHECK(largest_block_kron_sum(a, b) == table[a - 1][b - 1]);
    for (std::uint64_t m = 1; m <= 40; ++m) CHECK(largest_block_kron_sum(1, m) == m);
    CHECK(largest_block_kron_sum(14, 8) == 16);
}

TEST_CASE("largest_block_oracle") {
    CHECK(largest_block_oracle(1, 1) == 1);
    CHECK(largest_block_oracle(5, 5) == 8);
    CHECK(largest_block_oracle(14, 8) == 16);
}

TEST_CASE("special cases") {
    CHECK(largest_block_kron_sum(5, 5) == 8);  // 2^ceil(log2 5)
    // digits of a-1 = 10b and b-1 = 01b never share a 1 -> maximal size
    CHECK(largest_block_kron_sum(3, 2) == 4);
    CHECK(largest_block_special_cases(5, 5).all());
    CHECK(largest_block_special_cases(3, 2).all());
}

TEST_CASE("phi/sigma block theorems") {
    CHECK(largest_block_oracle(4, 4) == 4);   // n = 9, a = 1
    CHECK(largest_block_oracle(1, 4) == 4);
    CHECK(largest_block_oracle(3, 3) == 4);   // n = 11, a = 2: zero pair gives 2^a
    CHECK(phi_sigma_block_theorems(9).all());
    CHECK(phi_sigma_block_theorems(11).all());
    CHECK(phi_sigma_block_theorems(1).all());  // a = 1 edge: oracle(1,1) = 1
}

TEST_CASE("jordan_block_period") {
    CHECK(jordan_block_period(1, 7) == 7);
    CHECK(jordan_block_period(5, 3) == 24);
    CHECK(jordan_block_period(8, 1) == 8);
}
