#include "lightsout/spectral.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "lightsout/automata.hpp"
#include "lightsout/errors.hpp"
#include "lightsout/fieldmat.hpp"

namespace lightsout {

Poly2 chebyshev_poly(std::size_t i) {
    Poly2 prev = Poly2::one();
    if (i == 0) return prev;
    Poly2 cur = Poly2::x();
    const Poly2 x = Poly2::x();
    for (std::size_t k = 2; k <= i; ++k) {
        Poly2 next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_poly_identities(std::size_t i) {
    if (i < 1) throw std::invalid_argument("verify_poly_identities: i must be >= 1");
    Poly2 pi = chebyshev_poly(i);
    Poly2 pim1 = chebyshev_poly(i - 1);
    bool even_ok = chebyshev_poly(2 * i) == (pi + pim1).square();
    bool odd_ok = chebyshev_poly(2 * i + 1) == Poly2::x() * pi.square();
    return even_ok && odd_ok;
}

OddReduction odd_reduction(std::size_t n) {
    if (n % 2 == 0) throw std::invalid_argument("odd_reduction: n must be odd");
    auto [a, b] = split_pow2(n + 1);
    std::uint64_t pow2 = std::uint64_t(1) << a;
    Poly2 rhs = Poly2::monomial(std::size_t(pow2 - 1)) * chebyshev_poly(std::size_t(b - 1)).pow(pow2);
    return {a, b, chebyshev_poly(n) == rhs};
}

BitMatrix poly_eval_matrix(const Poly2& p, const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("poly_eval_matrix: matrix must be square");
    BitMatrix acc = BitMatrix::zero(a.rows(), a.cols());
    BitMatrix ident = BitMatrix::identity(a.rows());
    for (int i = p.degree(); i >= 0; --i) {
        acc = mat_mul(acc, a);
        if (p.coeff(std::size_t(i))) acc = mat_add(acc, ident);
    }
    return acc;
}

bool char_poly_annihilates(std::size_t n) {
    if (n > 128) throw CapExceeded("char_poly_annihilates: n exceeds 128");
    BitMatrix a = build_phi_matrix(n);
    if (!poly_eval_matrix(chebyshev_poly(n), a).is_zero()) return false;
    // Minimality: drop one copy of the factor with the largest multiplicity.
    // p_n = x^(2^a - 1) * g^(2^(a+1)) with g = p_{(b-1)/2} + p_{(b-1)/2 - 1}
    // square-free; removing one g (or one x when b = 1) must break annihilation.
    auto [av, b] = split_pow2(n + 1);
    Poly2 witness;
    if (b == 1) {
        witness = Poly2::monomial(n - 1);
    } else {
        std::size_t half = std::size_t((b - 1) / 2);
        Poly2 g = chebyshev_poly(half) + chebyshev_poly(half - 1);
        std::uint64_t mult = std::uint64_t(1) << (av + 1);
        witness = Poly2::monomial(std::size_t((std::uint64_t(1) << av) - 1)) * g.pow(mult - 1);
    }
    return !poly_eval_matrix(witness, a).is_zero();
}

EigenData eigen_structure(std::size_t n) {
    EigenData data;
    data.n = n;
    auto [a, b] = split_pow2(std::uint64_t(n) + 1);
    data.a = a;
    data.b = b;
    data.nonzero_multiplicity = std::uint64_t(1) << (a + 1);
    data.zero_block_size = (std::uint64_t(1) << a) - 1;
    if (b == 1) return data;
    if (b > 4095)
        throw CapExceeded("eigen_structure: odd part " + std::to_string(b) +
                          " exceeds the desk-scale cap 4095");
    data.ctx = std::make_shared<const FieldCtx>(ord2(b));
    data.alpha = root_of_unity(b, *data.ctx);
    FieldElem alpha_inv = data.alpha.inverse();
    FieldElem fwd = data.ctx->one(), back = data.ctx->one();
    Poly2 reduced_char = chebyshev_poly(std::size_t(b - 1));
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t k = 1; k <= (b - 1) / 2; ++k) {
        fwd = fwd * data.alpha;
        back = back * alpha_inv;
        FieldElem lambda = fwd + back;
        if (lambda.is_zero())
            throw std::logic_error("eigen_structure: zero eigenvalue in nonzero family");
        if (!seen.insert(lambda.repr).second)
            throw std::logic_error("eigen_structure: repeated eigenvalue");
        if (!poly_eval(reduced_char, lambda).is_zero())
            throw std::logic_error("eigen_structure: eigenvalue is not a root of p_{b-1}");
        data.eigenvalues.push_back(lambda);
    }
    return data;
}

bool geometric_multiplicity_check(std::size_t n) {
    if (n > 64) throw CapExceeded("geometric_multiplicity_check: n exceeds 64");
    EigenData data = eigen_structure(n);
    BitMatrix a = build_phi_matrix(n);
    if (data.a >= 1) {
        // zero eigenvalue: nullity over GF(2)
        if (n - rank(a) != 1) return false;
    }
    if (!data.ctx) return true;
    FieldMat lifted = FieldMat::lift(*data.ctx, a);
    for (const FieldElem& lambda : data.eigenvalues) {
        FieldMat shifted = lifted;
        for (std::size_t i = 0; i < n; ++i)
            shifted.set(i, i, shifted.get(i, i) ^ lambda.repr);
        if (shifted.nullity() != 1) return false;
    }
    return true;
}

namespace {

// Fold an exponent into the canonical eigenvalue index range 1..(b-1)/2,
// using lambda_k = lambda_{b-k}; 0 means the index hit a multiple of b.
std::uint64_t fold_index(std::uint64_t k, std::uint64_t b) {
    k %= b;
    return std::min(k, (b - k) % b);
}

struct SumAsProductIndices {
    std::uint64_t i, j, k1, k2;
};

SumAsProductIndices sum_as_product_indices(std::uint64_t i, std::uint64_t j, std::uint64_t b) {
    if (b < 3 || b % 2 == 0) throw std::invalid_argument("sum_as_product: b must be odd >= 3");
    std::uint64_t fi = fold_index(i, b), fj = fold_index(j, b);
    if (fi == 0 || fj == 0 || fi == fj)
        throw std::invalid_argument("sum_as_product: need i != +-j (mod b), both nonzero");
    if (fi > fj) std::swap(fi, fj);
    std::uint64_t gap = fj - fi;
    std::uint64_t hi = fj;
    if (gap % 2 == 1) {
        hi = b - fj;  // lambda_j = lambda_{b-j}; makes the gap even
        gap = hi - fi;
    }
    std::uint64_t k = gap / 2;
    std::uint64_t k1 = fold_index(fi + k, b), k2 = fold_index(k, b);
    if (k1 == 0 || k2 == 0) throw std::logic_error("sum_as_product: zero factor index");
    return {fi, fj, k1, k2};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> sum_as_product(std::uint64_t i, std::uint64_t j,
                                                       std::uint64_t b, const FieldCtx& ctx) {
    SumAsProductIndices idx = sum_as_product_indices(i, j, b);
    FieldElem alpha = root_of_unity(b, ctx);
    auto lambda = [&](std::uint64_t k) {
        return alpha.pow(k) + alpha.pow(b - k);  // alpha^k + alpha^-k
    };
    if (lambda(idx.i) + lambda(idx.j) != lambda(idx.k1) * lambda(idx.k2))
        throw std::logic_error("sum_as_product: field verification failed");
    return {idx.k1, idx.k2};
}

std::pair<std::uint64_t, std::uint64_t> sum_as_product(std::uint64_t i, std::uint64_t j,
                                                       std::uint64_t b) {
    unsigned m = ord2(b);
    if (m <= FieldCtx::kDegreeCap) {
        FieldCtx ctx(m);
        return sum_as_product(i, j, b, ctx);
    }
    SumAsProductIndices idx = sum_as_product_indices(i, j, b);
    // Wide contexts are immutable; cache them per degree across calls.
    static std::mutex cache_mutex;
    static std::map<unsigned, WideFieldCtx> cache;
    const WideFieldCtx* wide_ptr;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, WideFieldCtx(m)).first;
        wide_ptr = &it->second;
    }
    const WideFieldCtx& wide = *wide_ptr;
    WideFieldCtx::Repr alpha = wide.root_of_unity(b);
    auto lambda = [&](std::uint64_t k) {
        return wide.pow(alpha, k) ^ wide.pow(alpha, b - k);
    };
    if ((lambda(idx.i) ^ lambda(idx.j)) != wide.mul(lambda(idx.k1), lambda(idx.k2)))
        throw std::logic_error("sum_as_product: wide-field verification failed");
    return {idx.k1, idx.k2};
}

namespace {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t g = a;
    for (std::uint64_t x = b; x;) { std::uint64_t t = g % x; g = x; x = t; }
    return (a / g) * b;
}

}  // namespace

bool group_lcm_equality(std::size_t n) {
    EigenData data = eigen_structure(n);
    std::uint64_t phi_lcm = 1, sigma_lcm = 1;
    std::unordered_set<std::uint64_t> sum_reprs;
    for (std::size_t i = 0; i < data.eigenvalues.size(); ++i) {
        phi_lcm = lcm_u64(phi_lcm, elem_order(data.eigenvalues[i]));
        if (data.a >= 1) sum_reprs.insert(data.eigenvalues[i].repr);  // 0 + lambda_i
        for (std::size_t j = i + 1; j < data.eigenvalues.size(); ++j) {
            FieldElem sum = data.eigenvalues[i] + data.eigenvalues[j];
            if (!sum.is_zero()) sum_reprs.insert(sum.repr);
        }
    }
    // One side having nonzero eigenvalues while the other has none counts as
    // unequal (n = 2: T is nilpotent but A is not).
    if (data.eigenvalues.empty() != sum_reprs.empty()) return false;
    for (std::uint64_t repr : sum_reprs)
        sigma_lcm = lcm_u64(sigma_lcm, elem_order(data.ctx->elem(repr)));
    return phi_lcm == sigma_lcm;
}

std::vector<JordanBlock> jordan_profile_phi(std::size_t n) {
    EigenData data = eigen_structure(n);
    std::vector<JordanBlock> blocks;
    for (const FieldElem& lambda : data.eigenvalues)
        blocks.push_back({false, lambda, std::size_t(data.nonzero_multiplicity)});
    if (data.a >= 1) blocks.push_back({true, FieldElem{}, std::size_t(data.zero_block_size)});
    std::size_t total = 0;
    for (const JordanBlock& blk : blocks) total += blk.size;
    if (total != n) throw std::logic_error("jordan_profile_phi: block sizes do not sum to n");
    return blocks;
}

}  // namespace lightsout
