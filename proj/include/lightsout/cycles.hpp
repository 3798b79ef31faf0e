#ifndef LIGHTSOUT_CYCLES_HPP
#define LIGHTSOUT_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "lightsout/automata.hpp"
#include "lightsout/bitmat.hpp"

namespace lightsout {

struct OrbitResult {
    std::size_t transient;       // steps before the orbit enters its cycle
    std::uint64_t cycle_length;  // minimal period
};

// Brent's cycle finding on the orbit of `seed`, then a second pass to
// recover the exact transient. The stepper must be deterministic and
// length-preserving.
template <typename Stepper>
OrbitResult orbit_cycle(Stepper&& step, const State& seed) {
    // Find the period with a power-of-two teleporting tortoise.
    std::uint64_t power = 1, lam = 1;
    State tortoise = seed;
    State hare = step(seed);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare);
        ++lam;
    }
    // Advance a probe lam steps, then walk both until they meet.
    hare = seed;
    for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
    std::size_t mu = 0;
    tortoise = seed;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
    }
    return {mu, lam};
}

// Cycle length of the matrix itself: lcm of the basis-seed orbit periods
// (the single-light states), transient = max of the per-seed transients.
// The transient is cross-checked against the rank-stabilization index;
// disagreement throws.
OrbitResult matrix_cycle_length(const BitMatrix& x);

// Least k with rank(x^k) = rank(x^(k+1)).
std::size_t rank_stabilization_index(const BitMatrix& x);

enum class Method { brute, analytic, both };
std::string method_name(Method m);

struct CycleReport {
    Model model = Model::phi;
    std::size_t n = 1;
    std::size_t dim = 1;
    Method method = Method::analytic;
    std::size_t transient = 0;
    std::uint64_t cycle_length = 1;
    unsigned pow2_exponent = 0;                  // s in CL = 2^s * t
    std::uint64_t odd_part = 1;                  // t
    std::optional<std::uint64_t> q;              // (2^sord2(b) - 1) / t
    std::optional<unsigned> field_degree;        // sord2(b): j in 2^s (2^j - 1)/q
};

// Cycle length of Phi_n from the eigenvalue orders: CL = 2^(a+1) * t with
// n+1 = 2^a * b; CL = 1 when b = 1.
CycleReport analytic_cl_phi(std::size_t n);
// Cycle length of sigma_n from the pairwise eigenvalue sums.
CycleReport analytic_cl_sigma(std::size_t n);

struct MultidimOddPart {
    std::uint64_t t;  // lcm of the orders of the achievable nonzero sums
    bool saturated;   // t == 2^sord2(b) - 1
};
// Odd part of the d-dimensional cycle length via the achievable-sum closure
// R_1 = eigenvalues, R_{j+1} = R_j + eigenvalues.
MultidimOddPart analytic_odd_part_multidim(std::size_t n, std::size_t d);

// A state whose orbit period equals CL(x); built from single-light seeds
// covering the maximal prime powers of CL(x) and verified by measurement,
// falling back to small exhaustive search. Throws if no witness is found
// within the search budget.
State witness_state(const BitMatrix& x);

// Brute-force report for any automaton spec (builds the transition matrix).
CycleReport brute_cycle_report(const AutomatonSpec& spec);

}  // namespace lightsout

#endif
