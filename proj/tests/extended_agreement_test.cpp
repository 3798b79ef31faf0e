// Brute/analytic agreement beyond the acceptance ranges: deeper fields and
// larger transients, still cheap enough to run every time.
#include <cstdio>

#include "lightsout/automata.hpp"
#include "lightsout/cycles.hpp"

int main() {
    using namespace lightsout;
    int failures = 0;
    auto compare = [&](const char* tag, const OrbitResult& brute, const CycleReport& analytic,
                       std::size_t n) {
        if (brute.cycle_length != analytic.cycle_length ||
            brute.transient != analytic.transient) {
            ++failures;
            std::printf("FAIL %s n=%zu: brute (%llu, %zu) vs analytic (%llu, %zu)\n", tag, n,
                        (unsigned long long)brute.cycle_length, brute.transient,
                        (unsigned long long)analytic.cycle_length, analytic.transient);
        }
    };
    for (std::size_t n = 21; n <= 42; ++n) {
        if (n == 36) continue;  // the slow row has its own test
        compare("phi", matrix_cycle_length(build_phi_matrix(n)), analytic_cl_phi(n), n);
    }
    for (std::size_t n = 17; n <= 21; ++n)
        compare("sigma", matrix_cycle_length(build_sigma_matrix(n)), analytic_cl_sigma(n), n);
    if (failures) return 1;
    std::puts("PASS: extended brute/analytic agreement (phi n<=42, sigma n<=21)");
    return 0;
}
