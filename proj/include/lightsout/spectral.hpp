#ifndef LIGHTSOUT_SPECTRAL_HPP
#define LIGHTSOUT_SPECTRAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lightsout/bitmat.hpp"
#include "lightsout/field.hpp"
#include "lightsout/poly2.hpp"

namespace lightsout {

// Characteristic polynomial of the 1-D automaton matrix over GF(2):
// p_0 = 1, p_1 = x, p_i = x*p_{i-1} + p_{i-2}.
Poly2 chebyshev_poly(std::size_t i);

// p_{2i} = (p_i + p_{i-1})^2 and p_{2i+1} = x * p_i^2, as exact equalities.
bool verify_poly_identities(std::size_t i);

struct OddReduction {
    unsigned a;
    std::uint64_t b;
    bool identity_holds;  // p_n == x^(2^a - 1) * p_{b-1}^(2^a)
};
OddReduction odd_reduction(std::size_t n);  // n must be odd

// Evaluate a GF(2)[x] polynomial at a square bit matrix (Horner).
BitMatrix poly_eval_matrix(const Poly2& p, const BitMatrix& a);

// p_n annihilates A_n, and dropping one copy of the largest repeated factor
// yields a proper divisor that does not (minimality witness).
bool char_poly_annihilates(std::size_t n);

// Eigenvalue structure of A_n with n+1 = 2^a * b, b odd.
struct EigenData {
    std::size_t n = 0;
    unsigned a = 0;
    std::uint64_t b = 1;
    std::shared_ptr<const FieldCtx> ctx;   // null when b == 1 (no nonzero eigenvalues)
    FieldElem alpha{};                     // order-b root of unity (when ctx present)
    std::vector<FieldElem> eigenvalues;    // lambda_k = alpha^k + alpha^-k, k = 1..(b-1)/2
    std::uint64_t nonzero_multiplicity = 0;  // 2^(a+1)
    std::uint64_t zero_block_size = 0;       // 2^a - 1; 0 means no zero block
};
EigenData eigen_structure(std::size_t n);

// Every eigenvalue of A_n (zero included when present) has a one-dimensional
// eigenspace over the extension field.
bool geometric_multiplicity_check(std::size_t n);

// Indices (k1, k2), both in 1..(b-1)/2, with lambda_i + lambda_j =
// lambda_k1 * lambda_k2; verified in the field. Errors when i = +-j (mod b).
std::pair<std::uint64_t, std::uint64_t> sum_as_product(std::uint64_t i, std::uint64_t j,
                                                       std::uint64_t b, const FieldCtx& ctx);
// Same, constructing a suitable field itself (wide path when ord2(b) exceeds
// the FieldCtx cap).
std::pair<std::uint64_t, std::uint64_t> sum_as_product(std::uint64_t i, std::uint64_t j,
                                                       std::uint64_t b);

// lcm of the orders of A's nonzero eigenvalues vs the same for T = A (+) A.
// Expected false exactly for n in {2, 4}.
bool group_lcm_equality(std::size_t n);

struct JordanBlock {
    bool zero;            // zero-eigenvalue block
    FieldElem eigenvalue; // valid when !zero
    std::size_t size;
};
// (b-1)/2 blocks of size 2^(a+1) plus one zero block of size 2^a - 1 (a >= 1).
std::vector<JordanBlock> jordan_profile_phi(std::size_t n);

}  // namespace lightsout

#endif
