#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmct::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs the full acceptance suite: period limits, rigidity, monotonicity,
/// existence/uniqueness of the classified tori, oracle equivalence of the two
/// period routes, surface fidelity, the ball-curvature property, and the
/// negative controls. Deterministic; every tolerance is fixed in code.
std::vector<CriterionResult> run_all();

/// Prints one PASS/FAIL line per criterion to `os`; returns 0 iff all passed.
int run_and_report(std::ostream& os);

}  // namespace cmct::selftest
