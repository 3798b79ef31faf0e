#ifndef LIGHTSOUT_VERIFY_HPP
#define LIGHTSOUT_VERIFY_HPP

#include <string>
#include <vector>

namespace lightsout {

struct VerifyFailure {
    std::string check_id;
    std::string inputs;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::vector<VerifyFailure> failures;
    double wall_ms = 0;
    bool ok() const { return failures.empty(); }
};

VerifyReport verify_linalg();
VerifyReport verify_field();
VerifyReport verify_spectral();
VerifyReport verify_pascal();
VerifyReport verify_geometry();
VerifyReport verify_cycles();
VerifyReport verify_highdim();

// Suite by name ("all" runs everything). Throws on unknown names.
std::vector<VerifyReport> run_suites(const std::string& name);

}  // namespace lightsout

#endif
