#pragma once

#include <string>
#include <vector>

#include "hpt/generators.hpp"

namespace hpt::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The acceptance criteria, one function each. Every check is exact (rational
// comparisons, exhaustive enumerations) or a pinned-seed statistical bound.
std::vector<CheckResult> criterion_gadget_forcing();          // 1
std::vector<CheckResult> criterion_reduction_equivalences();  // 2
std::vector<CheckResult> criterion_gap_inequalities();        // 3
std::vector<CheckResult> criterion_locality();                // 4
std::vector<CheckResult> criterion_simplicity();              // 5
std::vector<CheckResult> criterion_rho3col_soundness();       // 6
std::vector<CheckResult> criterion_appendix_b();              // 7
std::vector<CheckResult> criterion_csp_construction();        // 8
std::vector<CheckResult> criterion_tester();                  // 9
std::vector<CheckResult> criterion_determinism();             // 10

// Re-runs a pipeline manifest and returns the payload (hgr text).
std::string replay_pipeline(const generators::Manifest& manifest);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace hpt::verify
