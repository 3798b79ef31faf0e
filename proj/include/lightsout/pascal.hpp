#ifndef LIGHTSOUT_PASCAL_HPP
#define LIGHTSOUT_PASCAL_HPP

#include <cstdint>
#include <optional>

namespace lightsout {

// C(p, q) mod 2 by Lucas: 1 iff every bit of q is covered by p. 0 for q > p.
int binom_parity(std::uint64_t p, std::uint64_t q);

// Least p >= 1 with C(p, q) even for all 0 < q < m: the least power of 2 >= m.
std::uint64_t min_power_vanish(std::uint64_t m);

// Location of an even Pascal entry, reduced to the first triangle of its size.
struct TriangleLocation {
    std::uint64_t n0 = 0;  // reduced row
    std::uint64_t k0 = 0;  // reduced column
    unsigned c = 0;        // cut position in bits
};

// Reduce an even entry (0 < k < n, C(n,k) even) to the first triangle of its
// size: c is the largest integer with (n mod 2^c) < (k mod 2^c); n0, k0 keep
// the low c+1 bits. Throws on odd entries.
TriangleLocation reduce_entry(std::uint64_t n, std::uint64_t k);
// Same cut position found by the bit-sweep shortcut (cross-checked in tests):
// from the most significant (0,1) bit pair of (n,k), sweep upward to the
// first (1,0) pair.
TriangleLocation reduce_entry_bitsweep(std::uint64_t n, std::uint64_t k);

// Base row of the all-even triangle containing C(n,k); nullopt for odd entries.
std::optional<std::uint64_t> triangle_base(std::uint64_t n, std::uint64_t k);

// Size of the largest Jordan block of the Kronecker sum of nilpotent blocks
// of sizes a and b: a+b-1 when C(a+b-2, a-1) is odd, else the triangle base.
std::uint64_t largest_block_kron_sum(std::uint64_t a, std::uint64_t b);

// Brute-force value: nilpotency index of kron_sum(N_a, N_b). Capped at
// a*b <= 4096.
std::uint64_t largest_block_oracle(std::uint64_t a, std::uint64_t b);

struct SpecialCaseChecks {
    bool no_shared_digits_iff_max;  // size = a+b-1 iff (a-1) & (b-1) == 0
    bool even_unless_max;           // size is even unless it equals a+b-1
    bool equal_sizes_power_of_2;    // a == b implies size = 2^ceil(log2 a)
    bool epsilon_periodic;          // size(a,b) - a = size(a + 2^ceil(log2 b), b) - (a + 2^ceil(log2 b))
    bool all() const {
        return no_shared_digits_iff_max && even_unless_max && equal_sizes_power_of_2 &&
               epsilon_periodic;
    }
};
SpecialCaseChecks largest_block_special_cases(std::uint64_t a, std::uint64_t b);

struct PhiSigmaBlockChecks {
    bool nonzero_pair;   // oracle(2^(a+1), 2^(a+1))}  = 2^(a+1)
    bool zero_nonzero;   // oracle(2^a - 1, 2^(a+1))   = 2^(a+1)   (a >= 1)
    bool zero_pair;      // oracle(2^a - 1, 2^a - 1)   = bit_ceil(2^a - 1)  (a >= 1)
    bool all() const { return nonzero_pair && zero_nonzero && zero_pair; }
};
// Checks the block-size theorems behind the sigma cycle length for
// n+1 = 2^a * b, against the nilpotency oracle.
PhiSigmaBlockChecks phi_sigma_block_theorems(std::uint64_t n);

// Period of an m x m Jordan block with a nonzero eigenvalue of order t.
std::uint64_t jordan_block_period(std::uint64_t m, std::uint64_t t);

}  // namespace lightsout

#endif
