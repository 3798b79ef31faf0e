#include "lightsout/automata.hpp"

#include <stdexcept>

#include "lightsout/errors.hpp"

namespace lightsout {

std::string model_name(Model model) {
    switch (model) {
        case Model::phi: return "phi";
        case Model::sigma: return "sigma";
        case Model::phibar: return "phibar";
        case Model::sigmabar: return "sigmabar";
        case Model::multidim: return "multidim";
    }
    return "?";
}

Model model_from_name(const std::string& name) {
    if (name == "phi") return Model::phi;
    if (name == "sigma") return Model::sigma;
    if (name == "phibar") return Model::phibar;
    if (name == "sigmabar") return Model::sigmabar;
    if (name == "multidim") return Model::multidim;
    throw std::invalid_argument("unknown model: " + name);
}

AutomatonSpec AutomatonSpec::make(Model model, std::size_t n, std::size_t dim) {
    AutomatonSpec s;
    s.model = model;
    s.n = n;
    switch (model) {
        case Model::phi:
        case Model::phibar: s.dim = 1; break;
        case Model::sigma:
        case Model::sigmabar: s.dim = 2; break;
        case Model::multidim: s.dim = dim ? dim : 1; break;
    }
    if (n < 1) throw std::invalid_argument("AutomatonSpec: n must be >= 1");
    if (s.model == Model::phibar && n < 3)
        throw std::invalid_argument("phibar requires n >= 3");
    if (s.model == Model::sigmabar && n < 3)
        throw std::invalid_argument("sigmabar requires n >= 3");
    if (s.dim < 1) throw std::invalid_argument("AutomatonSpec: dim must be >= 1");
    return s;
}

std::size_t AutomatonSpec::state_len() const {
    std::size_t len = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        if (len > std::size_t(1) << 40) throw CapExceeded("state length overflows");
        len *= n;
    }
    return len;
}

BitMatrix build_phi_matrix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("build_phi_matrix: n must be >= 1");
    BitMatrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a.set(i, i + 1, true);
        a.set(i + 1, i, true);
    }
    return a;
}

BitMatrix build_periodic_phi(std::size_t m) {
    if (m < 3) throw std::invalid_argument("build_periodic_phi: m must be >= 3");
    BitMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a.set(i, (i + 1) % m, true);
        a.set(i, (i + m - 1) % m, true);
    }
    return a;
}

BitMatrix build_sigma_matrix(std::size_t n) {
    BitMatrix a = build_phi_matrix(n);
    return kron_sum(a, a);
}

BitMatrix build_periodic_sigma(std::size_t m) {
    BitMatrix a = build_periodic_phi(m);
    return kron_sum(a, a);
}

BitMatrix build_multidim_matrix(std::size_t n, std::size_t d, std::size_t cap) {
    if (d < 1) throw std::invalid_argument("build_multidim_matrix: d must be >= 1");
    std::size_t dim = 1;
    for (std::size_t k = 0; k < d; ++k) {
        dim *= n;
        if (dim > cap)
            throw CapExceeded("build_multidim_matrix: dimension " + std::to_string(n) + "^" +
                              std::to_string(d) + " exceeds cap " + std::to_string(cap));
    }
    BitMatrix a = build_phi_matrix(n);
    BitMatrix acc = a;
    for (std::size_t k = 1; k < d; ++k) acc = kron_sum(acc, a);
    return acc;
}

BitMatrix build_matrix(const AutomatonSpec& spec, std::size_t cap) {
    std::size_t len = spec.state_len();
    if (len > cap)
        throw CapExceeded("build_matrix: state dimension " + std::to_string(len) +
                          " exceeds cap " + std::to_string(cap));
    switch (spec.model) {
        case Model::phi: return build_phi_matrix(spec.n);
        case Model::phibar: return build_periodic_phi(spec.n);
        case Model::sigma: return build_sigma_matrix(spec.n);
        case Model::sigmabar: return build_periodic_sigma(spec.n);
        case Model::multidim: return build_multidim_matrix(spec.n, spec.dim, cap);
    }
    throw std::logic_error("build_matrix: unreachable");
}

State step_direct(const State& s, const AutomatonSpec& spec) {
    std::size_t len = spec.state_len();
    if (s.size() != len) throw std::invalid_argument("step_direct: state length mismatch");
    State out(len);
    std::size_t n = spec.n;
    bool periodic = spec.periodic();
    std::vector<std::size_t> coord(spec.dim, 0);
    std::size_t stride;
    for (std::size_t idx = 0; idx < len; ++idx) {
        bool v = false;
        stride = 1;
        for (std::size_t k = 0; k < spec.dim; ++k) {
            std::size_t c = coord[k];
            if (c + 1 < n) v ^= s.get(idx + stride);
            else if (periodic) v ^= s.get(idx + stride - n * stride);
            if (c >= 1) v ^= s.get(idx - stride);
            else if (periodic) v ^= s.get(idx + (n - 1) * stride);
            stride *= n;
        }
        if (v) out.set(idx, true);
        // advance mixed-radix coordinates
        for (std::size_t k = 0; k < spec.dim; ++k) {
            if (++coord[k] < n) break;
            coord[k] = 0;
        }
    }
    return out;
}

State single_light(const AutomatonSpec& spec, std::size_t index) {
    std::size_t len = spec.state_len();
    if (index >= len) throw std::invalid_argument("single_light: index out of range");
    State s(len);
    s.set(index, true);
    return s;
}

}  // namespace lightsout
