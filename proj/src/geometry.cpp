#include "lightsout/geometry.hpp"

#include <map>
#include <stdexcept>

#include "lightsout/cycles.hpp"

namespace lightsout {

SparsePattern2D infinite_sigma_step(const SparsePattern2D& p) {
    std::map<std::pair<long, long>, int> counts;
    for (auto [x, y] : p) {
        ++counts[{x + 1, y}];
        ++counts[{x - 1, y}];
        ++counts[{x, y + 1}];
        ++counts[{x, y - 1}];
    }
    SparsePattern2D out;
    for (auto& [cell, c] : counts)
        if (c & 1) out.insert(cell);
    return out;
}

LineSet infinite_phi_step(const LineSet& l) {
    std::map<long, int> counts;
    for (long k : l) {
        ++counts[k + 1];
        ++counts[k - 1];
    }
    LineSet out;
    for (auto& [k, c] : counts)
        if (c & 1) out.insert(k);
    return out;
}

int lineset_parity(const LineSet& l) {
    if (l.empty()) return -1;
    long parity = ((*l.begin()) % 2 + 2) % 2;
    for (long k : l)
        if (((k % 2) + 2) % 2 != parity)
            throw std::invalid_argument("lineset_parity: mixed parities");
    return int(parity);
}

SparsePattern2D framework_to_pattern(const LineSet& u, const LineSet& d) {
    int pu = lineset_parity(u), pd = lineset_parity(d);
    if (pu >= 0 && pd >= 0 && pu != pd)
        throw std::invalid_argument("framework_to_pattern: incompatible parities");
    SparsePattern2D out;
    for (long k : u)
        for (long l : d)
            out.insert({(k + l) / 2, (l - k) / 2});
    return out;
}

bool check_diagonals(const LineSet& u, const LineSet& d, std::size_t steps) {
    SparsePattern2D pattern = framework_to_pattern(u, d);
    LineSet cu = u, cd = d;
    for (std::size_t j = 1; j <= steps; ++j) {
        pattern = infinite_sigma_step(pattern);
        cu = infinite_phi_step(cu);
        cd = infinite_phi_step(cd);
        if (pattern != framework_to_pattern(cu, cd)) return false;
    }
    return true;
}

std::vector<std::uint8_t> reflect_extend_1d(const State& f, std::size_t n, long lo, long hi) {
    if (f.size() != n) throw std::invalid_argument("reflect_extend_1d: state length mismatch");
    if (hi < lo) throw std::invalid_argument("reflect_extend_1d: empty window");
    long period = 2 * long(n) + 2;
    std::vector<std::uint8_t> out;
    out.reserve(std::size_t(hi - lo));
    for (long i = lo; i < hi; ++i) {
        long r = ((i % period) + period) % period;
        std::uint8_t v = 0;
        if (r == 0 || r == long(n) + 1) v = 0;
        else if (r <= long(n)) v = f.get(std::size_t(r - 1));
        else v = f.get(std::size_t(period - r - 1));
        out.push_back(v);
    }
    return out;
}

namespace {

// The reflected pattern is periodic with period 2n+2; evolve one period
// with wraparound (exact, since the evolution preserves the periodicity).
State reflected_periodic_state(const State& f, std::size_t n) {
    std::size_t period = 2 * n + 2;
    auto window = reflect_extend_1d(f, n, 0, long(period));
    State s(period);
    for (std::size_t i = 0; i < period; ++i)
        if (window[i]) s.set(i, true);
    return s;
}

}  // namespace

bool check_reflection(std::size_t n, const State& seed, std::size_t steps) {
    AutomatonSpec finite = AutomatonSpec::make(Model::phi, n);
    AutomatonSpec periodic = AutomatonSpec::make(Model::phibar, 2 * n + 2);
    State direct = seed;
    State ref = reflected_periodic_state(seed, n);
    for (std::size_t t = 0; t <= steps; ++t) {
        for (std::size_t i = 0; i < n; ++i)
            if (direct.get(i) != ref.get(i + 1)) return false;
        direct = step_direct(direct, finite);
        ref = step_direct(ref, periodic);
    }
    return true;
}

bool check_mirrors_stay_off(std::size_t n, const State& seed, std::size_t steps) {
    AutomatonSpec periodic = AutomatonSpec::make(Model::phibar, 2 * n + 2);
    State ref = reflected_periodic_state(seed, n);
    for (std::size_t t = 0; t <= steps; ++t) {
        if (ref.get(0) || ref.get(n + 1)) return false;
        ref = step_direct(ref, periodic);
    }
    return true;
}

bool image_sum_check(std::size_t n, std::size_t i, std::size_t steps) {
    if (i < 1 || i > n) throw std::invalid_argument("image_sum_check: need 1 <= i <= n");
    AutomatonSpec finite = AutomatonSpec::make(Model::phi, n);
    State direct = single_light(finite, i - 1);
    LineSet g = {0};  // unbounded single-light evolution
    long period = 2 * long(n) + 2;
    long rmax = 1 + long(steps) / period;  // influence travels one cell per step
    for (std::size_t t = 0; t <= steps; ++t) {
        for (std::size_t j = 1; j <= n; ++j) {
            int parity = 0;
            for (long r = -rmax; r <= rmax; ++r) {
                if (g.count(long(j) - long(i) - 2 * r * (long(n) + 1))) parity ^= 1;
                if (g.count(long(j) + long(i) - 2 * r * (long(n) + 1))) parity ^= 1;
            }
            if (parity != int(direct.get(j - 1))) return false;
        }
        direct = step_direct(direct, finite);
        g = infinite_phi_step(g);
    }
    return true;
}

std::uint64_t periodic_cycle_length(const AutomatonSpec& spec) {
    if (!spec.periodic())
        throw std::invalid_argument("periodic_cycle_length: periodic models only");
    State seed = single_light(spec, 0);
    auto step = [&spec](const State& s) { return step_direct(s, spec); };
    return orbit_cycle(step, seed).cycle_length;
}

DivisibilityReport check_divisibility_theorems(std::size_t n) {
    DivisibilityReport rep{};
    rep.n = n;
    rep.cl_sigma = matrix_cycle_length(build_sigma_matrix(n)).cycle_length;
    rep.cl_phi = matrix_cycle_length(build_phi_matrix(n)).cycle_length;
    rep.cl_sigmabar_2n2 = periodic_cycle_length(AutomatonSpec::make(Model::sigmabar, 2 * n + 2));
    rep.cl_phibar_4n4 = periodic_cycle_length(AutomatonSpec::make(Model::phibar, 4 * n + 4));
    rep.cl_phibar_2n2 = periodic_cycle_length(AutomatonSpec::make(Model::phibar, 2 * n + 2));
    rep.sigma_divides_sigmabar = rep.cl_sigmabar_2n2 % rep.cl_sigma == 0;
    rep.sigma_divides_phibar4 = rep.cl_phibar_4n4 % rep.cl_sigma == 0;
    rep.phibar_equals_phi = rep.cl_phibar_2n2 == rep.cl_phi;
    rep.sigma_divides_2phi = (2 * rep.cl_phi) % rep.cl_sigma == 0;
    std::size_t k = n + 1;
    rep.doubling_checked = (k & (k - 1)) != 0 && k >= 3;
    if (rep.doubling_checked) {
        std::uint64_t cl_k = periodic_cycle_length(AutomatonSpec::make(Model::phibar, k));
        std::uint64_t cl_2k = periodic_cycle_length(AutomatonSpec::make(Model::phibar, 2 * k));
        rep.doubling_holds = cl_2k == 2 * cl_k;
    }
    return rep;
}

bool doubling_selfsim_check(const LineSet& pattern, std::size_t k) {
    LineSet doubled;
    for (long j : pattern) doubled.insert(2 * j);
    for (std::size_t t = 0; t < 2 * k; ++t) doubled = infinite_phi_step(doubled);
    LineSet iterated = pattern;
    for (std::size_t t = 0; t < k; ++t) iterated = infinite_phi_step(iterated);
    LineSet expected;
    for (long j : iterated) expected.insert(2 * j);
    return doubled == expected;
}

}  // namespace lightsout
