#ifndef LIGHTSOUT_AUTOMATA_HPP
#define LIGHTSOUT_AUTOMATA_HPP

#include <cstddef>
#include <string>

#include "lightsout/bitmat.hpp"

namespace lightsout {

// State vectors are bit vectors of length n^dim, row-major:
// index = sum over axes k of coord_k * n^k (coord_0 varies fastest).
using State = BitVector;

enum class Model { phi, sigma, phibar, sigmabar, multidim };

std::string model_name(Model model);
Model model_from_name(const std::string& name);  // throws on unknown name

struct AutomatonSpec {
    Model model = Model::phi;
    std::size_t n = 1;
    std::size_t dim = 1;  // derived for all models except multidim

    static AutomatonSpec make(Model model, std::size_t n, std::size_t dim = 0);
    std::size_t state_len() const;
    bool periodic() const { return model == Model::phibar || model == Model::sigmabar; }
};

inline constexpr std::size_t kMatrixDimCap = 4096;

// Tridiagonal with zero diagonal: A[i][j] = 1 iff |i-j| = 1.
BitMatrix build_phi_matrix(std::size_t n);
// Circulant: A[i][j] = 1 iff i-j = +-1 (mod m). Requires m >= 3.
BitMatrix build_periodic_phi(std::size_t m);
// kron_sum(A_n, A_n), dimension n^2.
BitMatrix build_sigma_matrix(std::size_t n);
BitMatrix build_periodic_sigma(std::size_t m);
// d-fold Kronecker sum of A_n; dimension n^d must stay within `cap`.
BitMatrix build_multidim_matrix(std::size_t n, std::size_t d, std::size_t cap = kMatrixDimCap);
// Transition matrix for any spec (subject to the same dimension cap).
BitMatrix build_matrix(const AutomatonSpec& spec, std::size_t cap = kMatrixDimCap);

// One step of the neighbor-XOR rule, computed without the matrix.
State step_direct(const State& s, const AutomatonSpec& spec);
// Basis state e_index.
State single_light(const AutomatonSpec& spec, std::size_t index);

}  // namespace lightsout

#endif
