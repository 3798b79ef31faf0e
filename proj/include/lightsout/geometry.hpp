#ifndef LIGHTSOUT_GEOMETRY_HPP
#define LIGHTSOUT_GEOMETRY_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "lightsout/automata.hpp"

namespace lightsout {

// Finite set of lit cells on the unbounded 2-D lattice.
using SparsePattern2D = std::set<std::pair<long, long>>;
// Finite set of lit positions on the unbounded 1-D lattice (also used for
// the diagonal-line families; all members must share parity there).
using LineSet = std::set<long>;

// One sigma step: a cell is lit iff an odd number of its 4 neighbors were.
SparsePattern2D infinite_sigma_step(const SparsePattern2D& p);
// One 1-D step: position p is lit iff exactly one of p-1, p+1 was.
LineSet infinite_phi_step(const LineSet& l);

// All members share one parity class; empty sets have none (returns -1).
int lineset_parity(const LineSet& l);

// {(x, y) : x - y in u, x + y in d}. The parities of u and d must agree so
// the intersections land on integer points.
SparsePattern2D framework_to_pattern(const LineSet& u, const LineSet& d);

// For 1 <= j <= steps: stepping the framework pattern with the sigma rule
// matches rebuilding it from the phi-stepped line families.
bool check_diagonals(const LineSet& u, const LineSet& d, std::size_t steps);

// Kaleidoscope extension of a Phi_n state (period 2n+2, mirrors at
// multiples of n+1 pinned off); window is [lo, hi).
std::vector<std::uint8_t> reflect_extend_1d(const State& f, std::size_t n, long lo, long hi);

// Phi_n evolution of `seed` agrees with the infinitely reflected evolution
// (simulated as one 2n+2 period with wraparound) on cells 1..n every step.
bool check_reflection(std::size_t n, const State& seed, std::size_t steps);
// Mirror cells (multiples of n+1) stay off throughout the reflected evolution.
bool check_mirrors_stay_off(std::size_t n, const State& seed, std::size_t steps);

// Method of images: the bounded single-light evolution equals the truncated
// sum of shifted copies of the unbounded single-light evolution.
bool image_sum_check(std::size_t n, std::size_t i, std::size_t steps);

// Cycle length of a periodic automaton measured from one single-light seed
// (all single-light seeds are equivalent under translation).
std::uint64_t periodic_cycle_length(const AutomatonSpec& spec);

struct DivisibilityReport {
    std::size_t n;
    std::uint64_t cl_sigma, cl_phi;
    std::uint64_t cl_sigmabar_2n2, cl_phibar_4n4, cl_phibar_2n2;
    bool sigma_divides_sigmabar;   // CL(sigma_n) | CL(sigmabar_{2n+2})
    bool sigma_divides_phibar4;    // CL(sigma_n) | CL(phibar_{4n+4})
    bool phibar_equals_phi;        // CL(phibar_{2n+2}) = CL(phi_n)
    bool doubling_checked;         // k = n+1 not a power of 2
    bool doubling_holds;           // CL(phibar_{2k}) = 2 CL(phibar_k)
    bool sigma_divides_2phi;       // CL(sigma_n) | 2 CL(phi_n)
    bool all() const {
        return sigma_divides_sigmabar && sigma_divides_phibar4 && phibar_equals_phi &&
               (!doubling_checked || doubling_holds) && sigma_divides_2phi;
    }
};
// Brute-force check of the divisibility and equality lemmas at size n.
DivisibilityReport check_divisibility_theorems(std::size_t n);

// The 2k-th iterate of the doubled pattern equals the doubled k-th iterate.
bool doubling_selfsim_check(const LineSet& pattern, std::size_t k);

}  // namespace lightsout

#endif
