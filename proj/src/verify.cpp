#include "lightsout/verify.hpp"

#include <bit>
#include <chrono>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "lightsout/automata.hpp"
#include "lightsout/bitmat.hpp"
#include "lightsout/cycles.hpp"
#include "lightsout/field.hpp"
#include "lightsout/fieldmat.hpp"
#include "lightsout/geometry.hpp"
#include "lightsout/pascal.hpp"
#include "lightsout/poly2.hpp"
#include "lightsout/spectral.hpp"

namespace lightsout {

namespace {

class Checker {
public:
    explicit Checker(std::string suite) : t0_(std::chrono::steady_clock::now()) {
        rep_.suite = std::move(suite);
    }

    void check(bool ok, const std::string& id, const std::string& inputs,
               const std::string& expected = "true", const std::string& got_on_fail = "false") {
        ++rep_.cases;
        if (ok) ++rep_.passed;
        else rep_.failures.push_back({id, inputs, expected, got_on_fail});
    }

    template <typename T, typename U>
    void eq(T got, U expected, const std::string& id, const std::string& inputs) {
        ++rep_.cases;
        if (got == T(expected)) ++rep_.passed;
        else rep_.failures.push_back({id, inputs, std::to_string(std::uint64_t(expected)),
                                      std::to_string(std::uint64_t(got))});
    }

    VerifyReport finish() {
        rep_.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0_).count();
        return rep_;
    }

private:
    VerifyReport rep_;
    std::chrono::steady_clock::time_point t0_;
};

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool acc = false;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
            out.set(i, j, acc);
        }
    return out;
}

// Perfect shuffle: e_i (x) e_j -> e_j (x) e_i for block sizes (p, q).
BitMatrix shuffle_permutation(std::size_t p, std::size_t q) {
    BitMatrix s(p * q, p * q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            s.set(j * p + i, i * q + j, true);
    return s;
}

}  // namespace

VerifyReport verify_linalg() {
    Checker ck("linalg");
    std::mt19937_64 rng(0x11a16u);

    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 32;
        BitMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n),
                  c = random_matrix(rng, n, n);
        std::string in = "n=" + std::to_string(n) + " trial=" + std::to_string(trial);
        ck.check(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)), "mul_associative", in);
        ck.check(mat_mul(a, mat_add(b, c)) == mat_add(mat_mul(a, b), mat_mul(a, c)),
                 "mul_distributes", in);
    }

    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 16;
        std::uint64_t e1 = rng() % 65, e2 = rng() % 65;
        BitMatrix a = random_matrix(rng, n, n);
        ck.check(mat_pow(a, e1 + e2) == mat_mul(mat_pow(a, e1), mat_pow(a, e2)),
                 "pow_additive",
                 "n=" + std::to_string(n) + " e1=" + std::to_string(e1) +
                     " e2=" + std::to_string(e2));
    }

    for (std::size_t p = 1; p <= 4; ++p)
        for (std::size_t q = 1; q <= 4; ++q) {
            BitMatrix a = random_matrix(rng, p, p), b = random_matrix(rng, q, q);
            BitMatrix s = shuffle_permutation(p, q);
            BitMatrix lhs = mat_mul(mat_mul(s, kron_sum(a, b)), s.transpose());
            ck.check(lhs == kron_sum(b, a), "kron_sum_shuffle_similarity",
                     "p=" + std::to_string(p) + " q=" + std::to_string(q));
        }

    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 24, c = 1 + rng() % 24;
        BitMatrix a = random_matrix(rng, r, c);
        ck.eq(rank(a), rank(a.transpose()), "rank_transpose",
              "r=" + std::to_string(r) + " c=" + std::to_string(c));
    }

    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 48, k = 1 + rng() % 48, c = 1 + rng() % 48;
        BitMatrix a = random_matrix(rng, r, k), b = random_matrix(rng, k, c);
        ck.check(mat_mul(a, b) == naive_mul(a, b), "mul_vs_naive",
                 "trial=" + std::to_string(trial));
    }

    // Kronecker-sum row popcounts for the automaton matrices (zero diagonals).
    for (std::size_t n = 1; n <= 6; ++n) {
        BitMatrix a = build_phi_matrix(n);
        BitMatrix t = kron_sum(a, a);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = t.row_popcount(i * n + j) == a.row_popcount(i) + a.row_popcount(j);
        ck.check(ok, "kron_sum_row_popcount", "n=" + std::to_string(n));
    }

    return ck.finish();
}

VerifyReport verify_field() {
    Checker ck("field");
    std::mt19937_64 rng(0xf1e1du);

    for (unsigned m = 1; m <= 20; ++m) {
        FieldCtx ctx(m);
        std::string in = "m=" + std::to_string(m);
        ck.check(find_modulus(m).low_mask() == ctx.modulus_mask(), "modulus_deterministic", in);
        std::uint64_t rebuilt = 1;
        for (auto [p, e] : ctx.group_order_factors())
            for (int i = 0; i < e; ++i) rebuilt *= p;
        ck.eq(rebuilt, ctx.group_order(), "factors_reconstruct_group_order", in);

        std::uint64_t mask = ctx.group_order();
        for (int trial = 0; trial < 100; ++trial) {
            std::uint64_t xr = (rng() & mask);
            if (xr == 0) xr = 1;
            FieldElem x = ctx.elem(xr), y = ctx.elem(rng() & mask);
            std::uint64_t ord = elem_order(x);
            if (trial < 20)
                ck.check((x + y) * (x + y) == x * x + y * y, "frobenius", in);
            ck.check(ctx.group_order() % ord == 0, "order_divides_group", in);
            bool minimal = x.pow(ord).is_one();
            for (auto [p, e] : factor_small(ord)) {
                (void)e;
                minimal = minimal && !x.pow(ord / p).is_one();
            }
            ck.check(minimal, "order_minimal", in + " x=" + std::to_string(xr));
        }
    }

    for (std::uint64_t b = 3; b <= 999; b += 2) {
        unsigned s = sord2(b), o = ord2(b);
        ck.check(s <= o && o <= 2 * s, "sord_ord_bounds", "b=" + std::to_string(b),
                 "sord<=ord<=2*sord",
                 "sord=" + std::to_string(s) + " ord=" + std::to_string(o));
    }

    return ck.finish();
}

namespace {

// Order check through the divisor lattice: J^e = I and J^(e/p) != I for
// every prime p | e pins the period to exactly e.
bool matrix_order_is(const FieldMat& j, std::uint64_t e) {
    if (!j.pow(e).is_identity()) return false;
    for (auto [p, mult] : factor_small(e)) {
        (void)mult;
        if (j.pow(e / p).is_identity()) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_spectral() {
    Checker ck("spectral");
    std::mt19937_64 rng(0x5bec7u);

    // Chebyshev recursion vs the tridiagonal determinant recursion.
    {
        Poly2 prev = Poly2::one(), cur = Poly2::x();
        const Poly2 x = Poly2::x();
        bool ok = chebyshev_poly(0) == prev && chebyshev_poly(1) == cur;
        for (std::size_t k = 2; k <= 64; ++k) {
            Poly2 next = x * cur + prev;
            prev = cur;
            cur = next;
            ok = ok && chebyshev_poly(k) == cur;
        }
        ck.check(ok, "chebyshev_vs_det_recursion", "n<=64");
    }
    ck.check(chebyshev_poly(256).degree() == 256, "chebyshev_degree", "n=256");

    for (std::size_t i = 1; i <= 128; ++i)
        ck.check(verify_poly_identities(i), "poly_identities", "i=" + std::to_string(i));

    for (std::size_t n = 1; n <= 99; n += 2)
        ck.check(odd_reduction(n).identity_holds, "odd_reduction", "n=" + std::to_string(n));

    for (std::size_t n = 1; n <= 64; ++n)
        ck.check(char_poly_annihilates(n), "char_poly_annihilates", "n=" + std::to_string(n));

    // Multiplicity law: p_{2k} = g^2, g square-free, zero not a root.
    for (std::size_t k = 1; 2 * k <= 128; ++k) {
        Poly2 g = chebyshev_poly(k) + chebyshev_poly(k - 1);
        Poly2 p2k = chebyshev_poly(2 * k);
        bool ok = p2k == g.square() && poly_gcd(g, g.derivative()).degree() == 0 && p2k.coeff(0);
        ck.check(ok, "even_multiplicity_law", "2k=" + std::to_string(2 * k));
    }

    // Jordan period law on random blocks over random fields.
    for (int trial = 0; trial < 500; ++trial) {
        unsigned j = 1 + unsigned(rng() % 8);
        FieldCtx ctx(j);
        std::size_t m = 1 + std::size_t(rng() % 16);
        std::uint64_t lambda = 1 + rng() % ctx.group_order();
        std::uint64_t t = elem_order(ctx.elem(lambda));
        std::uint64_t expected = jordan_block_period(m, t);
        FieldMat jb = FieldMat::jordan_block(ctx, lambda, m);
        ck.check(matrix_order_is(jb, expected), "jordan_period_law",
                 "m=" + std::to_string(m) + " j=" + std::to_string(j) +
                     " lambda=" + std::to_string(lambda),
                 "period=" + std::to_string(expected));
        if (trial % 25 == 0) {
            // Entries of powers: diagonal q carries C(p,q) lambda^(p-q).
            std::uint64_t p = rng() % 64;
            FieldMat jp = jb.pow(p);
            bool entries_ok = true;
            for (std::size_t q = 0; q < m && entries_ok; ++q)
                for (std::size_t r = 0; r + q < m && entries_ok; ++r) {
                    std::uint64_t want =
                        binom_parity(p, q) ? ctx.pow(lambda, p - q) : 0;
                    entries_ok = jp.get(r, r + q) == want;
                }
            ck.check(entries_ok, "jordan_power_entries",
                     "m=" + std::to_string(m) + " p=" + std::to_string(p));
        }
    }

    // Eigenvalue structure: construction self-checks distinctness and roots.
    for (std::size_t n = 1; n <= 40; ++n) {
        EigenData data = eigen_structure(n);
        bool size_ok = (data.b - 1) / 2 * data.nonzero_multiplicity + data.zero_block_size == n;
        ck.check(size_ok && data.eigenvalues.size() == (data.b - 1) / 2, "eigen_structure",
                 "n=" + std::to_string(n));
        std::size_t total = 0;
        for (const JordanBlock& blk : jordan_profile_phi(n)) total += blk.size;
        ck.eq(total, n, "jordan_profile_sum", "n=" + std::to_string(n));
    }

    for (std::uint64_t b = 3; b <= 99; b += 2) {
        bool all_ok = true;
        unsigned m = ord2(b);
        std::unique_ptr<FieldCtx> ctx;
        if (m <= FieldCtx::kDegreeCap) ctx = std::make_unique<FieldCtx>(m);
        for (std::uint64_t i = 1; i <= (b - 1) / 2 && all_ok; ++i)
            for (std::uint64_t j = i + 1; j <= (b - 1) / 2 && all_ok; ++j) {
                try {
                    if (ctx) sum_as_product(i, j, b, *ctx);
                    else sum_as_product(i, j, b);
                } catch (const std::exception&) {
                    all_ok = false;
                }
            }
        ck.check(all_ok, "sum_as_product", "b=" + std::to_string(b));
    }

    for (std::size_t n = 1; n <= 32; ++n)
        ck.check(geometric_multiplicity_check(n), "geometric_multiplicity",
                 "n=" + std::to_string(n));

    for (std::size_t n = 1; n <= 64; ++n) {
        bool expected = !(n == 2 || n == 4);
        ck.eq(int(group_lcm_equality(n)), int(expected), "group_lcm_equality",
              "n=" + std::to_string(n));
    }

    return ck.finish();
}

namespace {

// The V-shaped region definition of the triangle base: the smallest row h
// whose tested span C(h, i), h-(n-k) <= i <= k, is entirely even.
std::uint64_t v_region_base_oracle(std::uint64_t n, std::uint64_t k) {
    for (std::uint64_t h = 1; h <= n; ++h) {
        bool all_even = true;
        std::uint64_t lo = h > n - k ? h - (n - k) : 0;
        for (std::uint64_t i = lo; i <= k && all_even; ++i)
            all_even = binom_parity(h, i) == 0;
        if (all_even && lo >= 1) return h;
    }
    return n + 1;
}

// The row-subtraction reduction from the self-similarity of the triangle.
std::pair<std::uint64_t, std::uint64_t> reduce_iterative(std::uint64_t n, std::uint64_t k) {
    for (int guard = 0; guard < 128; ++guard) {
        std::uint64_t g = std::uint64_t(63 - std::countl_zero(n));
        std::uint64_t top = std::uint64_t(1) << g;
        if (n - top < k && k < top) return {n, k};
        n -= top;
        if (k > top) k -= top;
    }
    throw std::logic_error("reduce_iterative: did not terminate");
}

}  // namespace

VerifyReport verify_pascal() {
    Checker ck("pascal");
    std::mt19937_64 rng(0x9a5ca1u);

    bool formula_oracle_ok = true, bounds_ok = true, symmetry_ok = true;
    for (std::uint64_t a = 1; a <= 32 && formula_oracle_ok; ++a)
        for (std::uint64_t b = 1; b <= 32; ++b) {
            std::uint64_t size = largest_block_kron_sum(a, b);
            if (size != largest_block_oracle(a, b)) {
                formula_oracle_ok = false;
                break;
            }
            bounds_ok = bounds_ok && std::max(a, b) <= size && size <= a + b - 1;
            symmetry_ok = symmetry_ok && size == largest_block_kron_sum(b, a);
        }
    ck.check(formula_oracle_ok, "formula_vs_oracle", "a,b<=32 (1024 cases)");
    ck.check(bounds_ok, "block_size_bounds", "a,b<=32");
    ck.check(symmetry_ok, "block_size_symmetry", "a,b<=32");

    // Parity against the multiplicative valuation oracle, exhaustively.
    {
        bool ok = true;
        for (std::uint64_t p = 0; p <= 1024 && ok; ++p) {
            long v2 = 0;  // 2-adic valuation of C(p, q), updated incrementally
            for (std::uint64_t q = 0; q <= p && ok; ++q) {
                ok = binom_parity(p, q) == (v2 == 0 ? 1 : 0);
                if (q < p)
                    v2 += std::countr_zero(p - q) - std::countr_zero(q + 1);
            }
        }
        ck.check(ok, "parity_vs_multiplicative_oracle", "p<=1024");
    }

    for (std::uint64_t m = 1; m <= 64; ++m) {
        std::uint64_t direct = 1;
        while (true) {
            bool vanishes = true;
            for (std::uint64_t q = 1; q < m && vanishes; ++q)
                vanishes = binom_parity(direct, q) == 0;
            if (vanishes) break;
            ++direct;
        }
        ck.eq(min_power_vanish(m), direct, "min_power_vanish", "m=" + std::to_string(m));
    }

    // Both reduction methods, the iterative algorithm, and the first-triangle
    // location invariant, for every even interior entry with n <= 256.
    {
        bool sweep_ok = true, iter_ok = true, location_ok = true, base_ok = true;
        for (std::uint64_t n = 2; n <= 256; ++n)
            for (std::uint64_t k = 1; k < n; ++k) {
                if (binom_parity(n, k)) continue;
                TriangleLocation loc = reduce_entry(n, k);
                TriangleLocation sweep = reduce_entry_bitsweep(n, k);
                sweep_ok = sweep_ok && loc.n0 == sweep.n0 && loc.k0 == sweep.k0 &&
                           loc.c == sweep.c;
                auto [in, ik] = reduce_iterative(n, k);
                iter_ok = iter_ok && loc.n0 == in && loc.k0 == ik;
                std::uint64_t top = std::uint64_t(1) << (63 - std::countl_zero(loc.n0));
                location_ok = location_ok && loc.n0 - top < loc.k0 && loc.k0 < top;
                base_ok = base_ok && *triangle_base(n, k) == ((n >> loc.c) << loc.c);
            }
        ck.check(sweep_ok, "reduce_prefix_vs_bitsweep", "n<=256");
        ck.check(iter_ok, "reduce_vs_iterative_algorithm", "n<=256");
        ck.check(location_ok, "reduced_entry_in_first_triangle", "n<=256");
        ck.check(base_ok, "base_formula_consistency", "n<=256");
    }

    // V-region oracle for the base, on random entries.
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t n = 2 + rng() % 511, k = 1 + rng() % (n - 1);
        std::uint64_t expected = v_region_base_oracle(n, k);
        std::uint64_t got = binom_parity(n, k) ? n + 1 : *triangle_base(n, k);
        ck.eq(got, expected, "triangle_base_vs_v_region",
              "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }

    for (std::uint64_t b = 1; b <= 8; ++b)
        for (std::uint64_t a = 1; a <= 128; ++a)
            ck.check(largest_block_special_cases(a, b).all(), "special_cases",
                     "a=" + std::to_string(a) + " b=" + std::to_string(b));

    for (std::uint64_t n = 1; n <= 24; ++n)
        ck.check(phi_sigma_block_theorems(n).all(), "phi_sigma_block_theorems",
                 "n=" + std::to_string(n));

    return ck.finish();
}

VerifyReport verify_geometry() {
    Checker ck("geometry");
    std::mt19937_64 rng(0x6e0aau);

    for (int trial = 0; trial < 100; ++trial) {
        long parity = long(rng() % 2);
        LineSet u, d;
        std::size_t su = 1 + rng() % 4, sd = 1 + rng() % 4;
        while (u.size() < su) u.insert(2 * (long(rng() % 9) - 4) + parity);
        while (d.size() < sd) d.insert(2 * (long(rng() % 9) - 4) + parity);
        ck.check(check_diagonals(u, d, 15), "framework_correspondence",
                 "trial=" + std::to_string(trial));
    }

    for (std::size_t n = 1; n <= 10; ++n) {
        std::uint64_t cl = matrix_cycle_length(build_phi_matrix(n)).cycle_length;
        AutomatonSpec spec = AutomatonSpec::make(Model::phi, n);
        for (std::size_t i = 0; i < n; ++i) {
            State seed = single_light(spec, i);
            std::string in = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            ck.check(check_reflection(n, seed, std::size_t(2 * cl)), "reflection", in);
            ck.check(check_mirrors_stay_off(n, seed, std::size_t(2 * cl)), "mirrors_stay_off", in);
        }
    }

    // Single-light equivalence on periodic boards (all seeds, same CL).
    for (std::size_t m = 3; m <= 14; ++m) {
        AutomatonSpec spec = AutomatonSpec::make(Model::phibar, m);
        auto step = [&spec](const State& s) { return step_direct(s, spec); };
        std::uint64_t cl0 = periodic_cycle_length(spec);
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i)
            ok = ok && orbit_cycle(step, single_light(spec, i)).cycle_length == cl0;
        ck.check(ok, "periodic_single_light_equivalence", "m=" + std::to_string(m));
    }

    // Checkerboard parity from one light: coordinate sums alternate classes.
    {
        SparsePattern2D p = {{0, 0}};
        bool ok = true;
        for (int t = 1; t <= 20 && ok; ++t) {
            p = infinite_sigma_step(p);
            for (auto [x, y] : p) ok = ok && (((x + y) % 2 + 2) % 2 == t % 2);
        }
        ck.check(ok, "checkerboard_parity", "t<=20");
    }

    // One light spreads to the four diamond tips after 2^k steps.
    for (int k = 0; k <= 5; ++k) {
        SparsePattern2D p = {{0, 0}};
        long d = 1l << k;
        for (long t = 0; t < d; ++t) p = infinite_sigma_step(p);
        SparsePattern2D expected = {{d, 0}, {-d, 0}, {0, d}, {0, -d}};
        ck.check(p == expected, "diamond_tips_power_of_2", "k=" + std::to_string(k));
    }

    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            ck.check(image_sum_check(n, i, 40), "image_sum",
                     "n=" + std::to_string(n) + " i=" + std::to_string(i));

    for (std::size_t n = 1; n <= 12; ++n) {
        DivisibilityReport rep = check_divisibility_theorems(n);
        std::string in = "n=" + std::to_string(n);
        ck.check(rep.sigma_divides_sigmabar, "sigma_divides_sigmabar", in);
        ck.check(rep.sigma_divides_phibar4, "sigma_divides_phibar4", in);
        ck.check(rep.phibar_equals_phi, "phibar_equals_phi", in);
        ck.check(rep.sigma_divides_2phi, "sigma_divides_2phi", in);
        if (rep.doubling_checked) ck.check(rep.doubling_holds, "doubling_lemma", in);
        // Conjecture-at-scale: equality with the periodic sigma board. Fails
        // by design at n = 2, 4 where CL(sigmabar_{2n+2}) = CL(phi_n) while
        // CL(sigma_n) differs (the main theorem's exceptions).
        if (n <= 10 && n != 2 && n != 4)
            ck.eq(rep.cl_sigmabar_2n2, rep.cl_sigma, "sigma_periodic_equality_conjecture", in);
        if (n == 2 || n == 4)
            ck.eq(rep.cl_sigmabar_2n2, rep.cl_phi, "sigmabar_equals_phi_at_exceptions", in);
    }

    for (int trial = 0; trial < 100; ++trial) {
        LineSet pattern;
        std::size_t size = 1 + rng() % 8;
        while (pattern.size() < size) pattern.insert(long(rng() % 17) - 8);
        std::size_t k = 1 + rng() % 6;
        ck.check(doubling_selfsim_check(pattern, k), "doubling_selfsim",
                 "trial=" + std::to_string(trial) + " k=" + std::to_string(k));
    }

    return ck.finish();
}

VerifyReport verify_cycles() {
    Checker ck("cycles");
    std::mt19937_64 rng(0xc9c1e5u);

    for (std::size_t n = 1; n <= 20; ++n) {
        OrbitResult brute = matrix_cycle_length(build_phi_matrix(n));
        CycleReport analytic = analytic_cl_phi(n);
        std::string in = "n=" + std::to_string(n);
        ck.eq(brute.cycle_length, analytic.cycle_length, "phi_brute_vs_analytic", in);
        ck.eq(brute.transient, analytic.transient, "phi_transient", in);
    }

    for (std::size_t n = 1; n <= 16; ++n) {
        OrbitResult brute = matrix_cycle_length(build_sigma_matrix(n));
        CycleReport analytic = analytic_cl_sigma(n);
        std::string in = "n=" + std::to_string(n);
        ck.eq(brute.cycle_length, analytic.cycle_length, "sigma_brute_vs_analytic", in);
        ck.eq(brute.transient, analytic.transient, "sigma_transient", in);
    }

    for (std::size_t n = 1; n <= 64; ++n) {
        CycleReport phi_rep = analytic_cl_phi(n), sigma_rep = analytic_cl_sigma(n);
        std::uint64_t phi = phi_rep.cycle_length;
        std::uint64_t sigma = sigma_rep.cycle_length;
        std::string in = "n=" + std::to_string(n);
        if (n == 2) ck.check(phi == 2 && sigma == 1, "main_theorem_exception", in);
        else if (n == 4) ck.check(phi == 6 && sigma == 2, "main_theorem_exception", in);
        else ck.eq(sigma, phi, "main_theorem", in);
        for (const CycleReport& rep : {phi_rep, sigma_rep}) {
            ck.check(rep.cycle_length == rep.odd_part << rep.pow2_exponent,
                     "report_decomposition", in);
            if (rep.field_degree)
                ck.check(*rep.q * rep.odd_part ==
                             (std::uint64_t(1) << *rep.field_degree) - 1,
                         "report_q_identity", in);
        }
    }

    // Table of known cycle lengths.
    {
        const std::pair<std::size_t, std::uint64_t> known[] = {
            {6, 14}, {7, 1},   {8, 14},  {9, 12},  {10, 62}, {11, 8},
            {12, 126}, {13, 28}, {14, 30}, {15, 1},  {16, 30}, {36, 174762}};
        for (auto [n, cl] : known) {
            ck.eq(analytic_cl_phi(n).cycle_length, cl, "table_phi", "n=" + std::to_string(n));
            ck.eq(analytic_cl_sigma(n).cycle_length, cl, "table_sigma", "n=" + std::to_string(n));
        }
        ck.eq(analytic_cl_phi(36).q.value(), 3, "table_q36", "n=36");
    }

    // Per-seed divisibility and transient bounds on random small automata.
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 10;
        BitMatrix x = (trial % 2) ? build_phi_matrix(n) : build_sigma_matrix(n);
        OrbitResult whole = matrix_cycle_length(x);
        auto step = [&x](const State& s) { return x.apply(s); };
        bool div_ok = true, tr_ok = true;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            State seed(x.rows());
            seed.set(i, true);
            OrbitResult r = orbit_cycle(step, seed);
            div_ok = div_ok && whole.cycle_length % r.cycle_length == 0;
            tr_ok = tr_ok && r.transient <= whole.transient;
        }
        std::string in = "n=" + std::to_string(n) + " trial=" + std::to_string(trial);
        ck.check(div_ok, "per_seed_divides", in);
        ck.check(tr_ok, "per_seed_transient_bound", in);
    }

    // Witness states: measured period equals the matrix cycle length.
    for (std::size_t n = 1; n <= 12; ++n) {
        BitMatrix a = build_phi_matrix(n);
        State w = witness_state(a);
        auto step = [&a](const State& s) { return a.apply(s); };
        ck.eq(orbit_cycle(step, w).cycle_length, matrix_cycle_length(a).cycle_length,
              "witness_phi", "n=" + std::to_string(n));
    }
    {
        BitMatrix t4 = build_sigma_matrix(4);
        State w = witness_state(t4);
        auto step = [&t4](const State& s) { return t4.apply(s); };
        ck.eq(orbit_cycle(step, w).cycle_length, 2, "witness_sigma4", "n=4");
    }

    return ck.finish();
}

VerifyReport verify_highdim() {
    Checker ck("highdim");

    for (std::size_t d = 1; d <= 8; ++d) {
        std::uint64_t cl =
            matrix_cycle_length(build_multidim_matrix(2, d)).cycle_length;
        ck.eq(cl, d % 2 ? 2 : 1, "n2_alternation", "d=" + std::to_string(d));
    }
    for (std::size_t d = 1; d <= 4; ++d) {
        std::uint64_t cl =
            matrix_cycle_length(build_multidim_matrix(4, d)).cycle_length;
        ck.eq(cl, d % 2 ? 6 : 2, "n4_alternation", "d=" + std::to_string(d));
    }

    // Multidim reduces to phi and sigma at d = 1, 2.
    for (std::size_t n = 1; n <= 8; ++n) {
        ck.check(build_multidim_matrix(n, 1) == build_phi_matrix(n), "multidim_d1",
                 "n=" + std::to_string(n));
        ck.check(build_multidim_matrix(n, 2) == build_sigma_matrix(n), "multidim_d2",
                 "n=" + std::to_string(n));
    }

    // Odd-part saturation: reach 2^sord2(n+1) - 1 at some d <= n and stay.
    for (std::size_t n : {6, 8, 10, 12}) {
        std::uint64_t target = (std::uint64_t(1) << sord2(n + 1)) - 1;
        std::size_t d_sat = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (analytic_odd_part_multidim(n, d).t == target) {
                d_sat = d;
                break;
            }
        }
        ck.check(d_sat != 0, "saturation_reached", "n=" + std::to_string(n));
        bool stays = d_sat != 0;
        for (std::size_t d = d_sat; stays && d <= d_sat + 4; ++d) {
            MultidimOddPart part = analytic_odd_part_multidim(n, d);
            stays = part.t == target && part.saturated;
        }
        ck.check(stays, "saturation_stays", "n=" + std::to_string(n));
    }

    // Brute odd part agrees with the analytic odd part where both exist.
    for (std::size_t n : {2, 4, 6}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            if (std::size_t len = AutomatonSpec::make(Model::multidim, n, d).state_len();
                len > 512)
                continue;
            std::uint64_t cl = matrix_cycle_length(build_multidim_matrix(n, d)).cycle_length;
            auto [s, t] = split_pow2(cl);
            (void)s;
            ck.eq(t, analytic_odd_part_multidim(n, d).t, "odd_part_brute_vs_analytic",
                  "n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }

    return ck.finish();
}

std::vector<VerifyReport> run_suites(const std::string& name) {
    if (name == "all")
        return {verify_linalg(),   verify_field(),  verify_spectral(), verify_pascal(),
                verify_geometry(), verify_cycles(), verify_highdim()};
    if (name == "linalg") return {verify_linalg()};
    if (name == "field") return {verify_field()};
    if (name == "spectral") return {verify_spectral()};
    if (name == "pascal") return {verify_pascal()};
    if (name == "geometry") return {verify_geometry()};
    if (name == "cycles") return {verify_cycles()};
    if (name == "highdim") return {verify_highdim()};
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace lightsout
