#pragma once

#include <string>
#include <vector>

namespace mpsorf {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;  // measured residual or value
    double bound = 0.0;     // what it must stay within
    std::string detail;
};

/// The full invariant battery: geometry and quadrature identities, algorithm
/// invariants, cross-path equivalences, and the functional identities of the
/// diagnostics. Deterministic for a fixed seed.
std::vector<CheckResult> run_invariant_suite(unsigned seed = 12345u);

}  // namespace mpsorf
