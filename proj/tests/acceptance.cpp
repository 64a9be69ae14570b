// Acceptance suite: runs every criterion and prints one pass/fail line per
// criterion (sub-checks indented). Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <vector>

#include "hpt/verify.hpp"

namespace {

struct Criterion {
    const char* name;
    std::vector<hpt::verify::CheckResult> (*run)();
};

}  // namespace

int main() {
    using namespace hpt::verify;
    const std::vector<Criterion> criteria = {
        {"1 gadget forcing", criterion_gadget_forcing},
        {"2 reduction equivalences (exhaustive)", criterion_reduction_equivalences},
        {"3 gap inequalities", criterion_gap_inequalities},
        {"4 locality", criterion_locality},
        {"5 simplicity", criterion_simplicity},
        {"6 rho_3col soundness", criterion_rho3col_soundness},
        {"7 appendix-b statistics", criterion_appendix_b},
        {"8 csp construction", criterion_csp_construction},
        {"9 tester", criterion_tester},
        {"10 determinism", criterion_determinism},
    };
    bool all_ok = true;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        bool ok = false;
        std::string error;
        try {
            results = criterion.run();
            ok = all_pass(results);
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.name << " ("
                  << elapsed << " ms)\n";
        for (const auto& r : results) {
            std::cout << "       " << (r.pass ? "ok   " : "FAIL ") << r.name;
            if (!r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << '\n';
        }
        if (!error.empty()) std::cout << "       error: " << error << '\n';
        if (!ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
