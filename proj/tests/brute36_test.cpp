// Full brute-force confirmation of the largest table row: every basis orbit
// of the 36-cell automaton, no analytic shortcuts.
#include <cstdio>

#include "lightsout/automata.hpp"
#include "lightsout/cycles.hpp"

int main() {
    using namespace lightsout;
    OrbitResult r = matrix_cycle_length(build_phi_matrix(36));
    bool ok = r.cycle_length == 174762 && r.transient == 0;
    std::printf("%s: brute CL(A_36) = %llu, transient %zu\n", ok ? "PASS" : "FAIL",
                (unsigned long long)r.cycle_length, r.transient);
    return ok ? 0 : 1;
}
