#include "lightsout/pascal.hpp"

#include <bit>
#include <stdexcept>

#include "lightsout/bitmat.hpp"
#include "lightsout/errors.hpp"

namespace lightsout {

int binom_parity(std::uint64_t p, std::uint64_t q) {
    if (q > p) return 0;
    return (q & ~p) == 0 ? 1 : 0;
}

std::uint64_t min_power_vanish(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("min_power_vanish: m must be >= 1");
    return std::bit_ceil(m);
}

namespace {

std::uint64_t low_bits(std::uint64_t v, unsigned c) {
    return c >= 64 ? v : (v & ((std::uint64_t(1) << c) - 1));
}

void require_even_interior(std::uint64_t n, std::uint64_t k) {
    if (!(0 < k && k < n)) throw std::invalid_argument("reduce_entry: need 0 < k < n");
    if (binom_parity(n, k) != 0) throw std::invalid_argument("reduce_entry: entry is odd");
}

}  // namespace

TriangleLocation reduce_entry(std::uint64_t n, std::uint64_t k) {
    require_even_interior(n, k);
    unsigned c = 0;
    for (unsigned j = 1; j < 64; ++j)
        if (low_bits(n, j) < low_bits(k, j)) c = j;
    if (c == 0) throw std::logic_error("reduce_entry: no cut found for even entry");
    return {low_bits(n, c + 1), low_bits(k, c + 1), c};
}

TriangleLocation reduce_entry_bitsweep(std::uint64_t n, std::uint64_t k) {
    require_even_interior(n, k);
    // Most significant position where n has 0 and k has 1.
    std::uint64_t zo = ~n & k;
    unsigned start = 63 - unsigned(std::countl_zero(zo));
    // Sweep to higher significance for the first (1, 0) pair.
    std::uint64_t oz = n & ~k;
    oz &= ~((std::uint64_t(2) << start) - 1);  // keep bits above `start`
    if (oz == 0) throw std::logic_error("reduce_entry_bitsweep: no (1,0) pair above");
    unsigned c = unsigned(std::countr_zero(oz));
    return {low_bits(n, c + 1), low_bits(k, c + 1), c};
}

std::optional<std::uint64_t> triangle_base(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("triangle_base: need k <= n");
    if (k == 0 || k == n || binom_parity(n, k) == 1) return std::nullopt;
    TriangleLocation loc = reduce_entry(n, k);
    return (n >> loc.c) << loc.c;
}

std::uint64_t largest_block_kron_sum(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("largest_block_kron_sum: sizes must be >= 1");
    std::uint64_t n = a + b - 2, k = a - 1;
    if (binom_parity(n, k) == 1) return a + b - 1;
    return *triangle_base(n, k);
}

std::uint64_t largest_block_oracle(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("largest_block_oracle: sizes must be >= 1");
    if (a * b > 4096) throw CapExceeded("largest_block_oracle: a*b exceeds 4096");
    auto nilpotent = [](std::size_t m) {
        BitMatrix j(m, m);
        for (std::size_t i = 0; i + 1 < m; ++i) j.set(i, i + 1, true);
        return j;
    };
    return nilpotency_index(kron_sum(nilpotent(a), nilpotent(b)));
}

SpecialCaseChecks largest_block_special_cases(std::uint64_t a, std::uint64_t b) {
    SpecialCaseChecks checks{};
    std::uint64_t size = largest_block_kron_sum(a, b);
    checks.no_shared_digits_iff_max = (((a - 1) & (b - 1)) == 0) == (size == a + b - 1);
    checks.even_unless_max = (size % 2 == 0) || size == a + b - 1;
    checks.equal_sizes_power_of_2 = a != b || size == std::bit_ceil(a);
    std::uint64_t period = std::bit_ceil(b);
    checks.epsilon_periodic =
        (size - a) == (largest_block_kron_sum(a + period, b) - (a + period));
    return checks;
}

PhiSigmaBlockChecks phi_sigma_block_theorems(std::uint64_t n) {
    unsigned a = unsigned(std::countr_zero(n + 1));
    std::uint64_t m = std::uint64_t(1) << (a + 1);  // nonzero-eigenvalue block size
    std::uint64_t z = (std::uint64_t(1) << a) - 1;  // zero block size (a >= 1)
    PhiSigmaBlockChecks checks{};
    checks.nonzero_pair = largest_block_oracle(m, m) == m;
    checks.zero_nonzero = a == 0 || largest_block_oracle(z, m) == m;
    checks.zero_pair = a == 0 || largest_block_oracle(z, z) == std::bit_ceil(z);
    return checks;
}

std::uint64_t jordan_block_period(std::uint64_t m, std::uint64_t t) {
    return t * min_power_vanish(m);
}

}  // namespace lightsout
