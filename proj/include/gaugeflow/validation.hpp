#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaugeflow::validation {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // measured numbers, for reports
    double seconds = 0.0;
};

// The full validation suite. Each check pins its tolerances in code.
CheckResult cap_formula_check(std::uint64_t seed);        // formula vs MC + closed forms
CheckResult projection_law_check(std::uint64_t seed);     // moments + KS of ||P n||^2
CheckResult slice_dominance_check(std::uint64_t seed);    // aligned slice vs random reduction
CheckResult el_constraint_check(std::uint64_t seed);      // minimizer identities + gradient checks
CheckResult constant_probe_check(std::uint64_t seed);     // no-constant-minimizer floor + degenerate flags
CheckResult warp_convergence_check(std::uint64_t seed);   // shifts, linearization, substep order
CheckResult invariance_check(std::uint64_t seed);         // task invariance audits + orbit sign test
CheckResult weak_descent_check(std::uint64_t seed);       // certification rate + lambda sweep + descent lemma
CheckResult determinism_check(std::uint64_t seed);        // byte-identical re-emission

std::vector<CheckResult> run_all(std::uint64_t seed);

}  // namespace gaugeflow::validation
