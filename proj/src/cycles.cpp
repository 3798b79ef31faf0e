#include "lightsout/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "lightsout/errors.hpp"
#include "lightsout/pascal.hpp"
#include "lightsout/poly2.hpp"
#include "lightsout/spectral.hpp"

namespace lightsout {

std::size_t rank_stabilization_index(const BitMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("rank_stabilization_index: square only");
    BitMatrix p = BitMatrix::identity(x.rows());
    std::size_t prev = x.rows();
    for (std::size_t k = 0;; ++k) {
        p = mat_mul(p, x);
        std::size_t r = rank(p);
        if (r == prev) return k;
        prev = r;
        if (k > x.rows()) throw std::logic_error("rank_stabilization_index: did not stabilize");
    }
}

OrbitResult matrix_cycle_length(const BitMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("matrix_cycle_length: square only");
    auto step = [&x](const State& s) { return x.apply(s); };
    std::uint64_t cl = 1;
    std::size_t transient = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        State seed(x.rows());
        seed.set(i, true);
        OrbitResult r = orbit_cycle(step, seed);
        cl = std::lcm(cl, r.cycle_length);
        transient = std::max(transient, r.transient);
    }
    std::size_t stab = rank_stabilization_index(x);
    if (stab != transient)
        throw std::logic_error("matrix_cycle_length: basis transient != rank stabilization");
    return {transient, cl};
}

std::string method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::analytic: return "analytic";
        case Method::both: return "both";
    }
    return "?";
}

namespace {

std::uint64_t orders_lcm(const std::vector<FieldElem>& elems) {
    std::uint64_t t = 1;
    for (const FieldElem& e : elems) t = std::lcm(t, elem_order(e));
    return t;
}

void fill_decomposition(CycleReport& r, std::uint64_t b) {
    auto [s, t] = split_pow2(r.cycle_length);
    r.pow2_exponent = s;
    r.odd_part = t;
    if (b >= 3) {
        std::uint64_t subgroup = (std::uint64_t(1) << sord2(b)) - 1;
        if (subgroup % t != 0)
            throw std::logic_error("cycle odd part does not divide 2^sord2(b) - 1");
        r.q = subgroup / t;
        r.field_degree = sord2(b);
    }
}

}  // namespace

CycleReport analytic_cl_phi(std::size_t n) {
    if (n < 1) throw std::invalid_argument("analytic_cl_phi: n must be >= 1");
    auto [a, b] = split_pow2(std::uint64_t(n) + 1);
    CycleReport r;
    r.model = Model::phi;
    r.n = n;
    r.dim = 1;
    r.method = Method::analytic;
    r.transient = std::size_t((std::uint64_t(1) << a) - 1);
    if (b == 1) {
        r.cycle_length = 1;
        fill_decomposition(r, b);
        return r;
    }
    EigenData data = eigen_structure(n);
    std::uint64_t t = orders_lcm(data.eigenvalues);
    r.cycle_length = t << (a + 1);
    fill_decomposition(r, b);
    return r;
}

CycleReport analytic_cl_sigma(std::size_t n) {
    if (n < 1) throw std::invalid_argument("analytic_cl_sigma: n must be >= 1");
    auto [a, b] = split_pow2(std::uint64_t(n) + 1);
    CycleReport r;
    r.model = Model::sigma;
    r.n = n;
    r.dim = 2;
    r.method = Method::analytic;
    // Transient prediction from the pairwise-block theorem: the zero
    // eigenvalue of T arises from (lambda, lambda) pairs (blocks 2^(a+1))
    // and, when a >= 1, the (0, 0) pair (blocks 2^a - 1).
    std::uint64_t m = std::uint64_t(1) << (a + 1);
    std::uint64_t predicted = 0;
    if (b > 1) predicted = largest_block_kron_sum(m, m);
    if (a >= 1) {
        std::uint64_t z = (std::uint64_t(1) << a) - 1;
        predicted = std::max(predicted, largest_block_kron_sum(z, z));
    }
    r.transient = std::size_t(predicted);
    if (b == 1) {
        r.cycle_length = 1;
        fill_decomposition(r, b);
        return r;
    }
    EigenData data = eigen_structure(n);
    std::unordered_set<std::uint64_t> sum_reprs;
    for (std::size_t i = 0; i < data.eigenvalues.size(); ++i) {
        if (a >= 1) sum_reprs.insert(data.eigenvalues[i].repr);  // 0 + lambda_i
        for (std::size_t j = i + 1; j < data.eigenvalues.size(); ++j)
            sum_reprs.insert((data.eigenvalues[i] + data.eigenvalues[j]).repr);
    }
    sum_reprs.erase(0);
    if (sum_reprs.empty()) {
        r.cycle_length = 1;  // T is nilpotent (n = 2)
    } else {
        std::uint64_t t = 1;
        for (std::uint64_t repr : sum_reprs)
            t = std::lcm(t, elem_order(data.ctx->elem(repr)));
        r.cycle_length = t << (a + 1);
    }
    fill_decomposition(r, b);
    return r;
}

MultidimOddPart analytic_odd_part_multidim(std::size_t n, std::size_t d) {
    if (d < 1) throw std::invalid_argument("analytic_odd_part_multidim: d must be >= 1");
    auto [a, b] = split_pow2(std::uint64_t(n) + 1);
    if (b == 1) return {1, true};  // all eigenvalues zero at every dimension
    EigenData data = eigen_structure(n);
    unsigned deg = data.ctx->degree();
    if (deg > 24)
        throw CapExceeded("analytic_odd_part_multidim: field 2^" + std::to_string(deg) +
                          " too large to enumerate");
    std::vector<std::uint64_t> eigs;
    for (const FieldElem& e : data.eigenvalues) eigs.push_back(e.repr);
    if (a >= 1) eigs.push_back(0);
    std::vector<bool> reach(std::size_t(1) << deg, false);
    for (std::uint64_t e : eigs) reach[e] = true;
    for (std::size_t step = 1; step < d; ++step) {
        std::vector<bool> next(reach.size(), false);
        for (std::size_t v = 0; v < reach.size(); ++v) {
            if (!reach[v]) continue;
            for (std::uint64_t e : eigs) next[v ^ e] = true;
        }
        reach = std::move(next);
    }
    std::uint64_t t = 1;
    for (std::size_t v = 1; v < reach.size(); ++v)
        if (reach[v]) t = std::lcm(t, elem_order(data.ctx->elem(v)));
    bool saturated = t == (std::uint64_t(1) << sord2(b)) - 1;
    return {t, saturated};
}

State witness_state(const BitMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("witness_state: square only");
    std::size_t dim = x.rows();
    auto step = [&x](const State& s) { return x.apply(s); };

    std::vector<std::uint64_t> seed_cl(dim);
    std::uint64_t cl = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        State seed(dim);
        seed.set(i, true);
        seed_cl[i] = orbit_cycle(step, seed).cycle_length;
        cl = std::lcm(cl, seed_cl[i]);
    }

    // One seed per maximal prime power of CL, XOR-combined (deduplicated:
    // one seed may cover several prime powers).
    std::unordered_set<std::size_t> chosen;
    for (auto [p, e] : factor_small(cl)) {
        std::uint64_t pe = 1;
        for (int k = 0; k < e; ++k) pe *= p;
        for (std::size_t i = 0; i < dim; ++i) {
            if (seed_cl[i] % pe == 0) {
                chosen.insert(i);
                break;
            }
        }
    }
    State combined(dim);
    for (std::size_t i : chosen) combined.set(i, true);
    if (orbit_cycle(step, combined).cycle_length == cl) return combined;

    // Fallback: exhaustive XOR combinations of up to 3 single lights.
    constexpr std::size_t kBudget = 200000;
    std::size_t tried = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        State s1(dim);
        s1.set(i, true);
        if (seed_cl[i] == cl) return s1;
        for (std::size_t j = i + 1; j < dim; ++j) {
            State s2 = s1;
            s2.set(j, true);
            if (++tried > kBudget) throw std::runtime_error("witness_state: search budget exceeded");
            if (orbit_cycle(step, s2).cycle_length == cl) return s2;
            for (std::size_t k = j + 1; k < dim; ++k) {
                State s3 = s2;
                s3.set(k, true);
                if (++tried > kBudget)
                    throw std::runtime_error("witness_state: search budget exceeded");
                if (orbit_cycle(step, s3).cycle_length == cl) return s3;
            }
        }
    }
    throw std::runtime_error("witness_state: no witness within fallback budget");
}

CycleReport brute_cycle_report(const AutomatonSpec& spec) {
    BitMatrix x = build_matrix(spec);
    OrbitResult orbit = matrix_cycle_length(x);
    CycleReport r;
    r.model = spec.model;
    r.n = spec.n;
    r.dim = spec.dim;
    r.method = Method::brute;
    r.transient = orbit.transient;
    r.cycle_length = orbit.cycle_length;
    auto [s, t] = split_pow2(orbit.cycle_length);
    r.pow2_exponent = s;
    r.odd_part = t;
    return r;
}

}  // namespace lightsout
