// Acceptance suite: runs every criterion at its stated tolerance (exact
// value-group arithmetic throughout) and prints one PASS/FAIL line each.
#include <iostream>

#include "perfectoid/selftest.hpp"

int main() {
    perfectoid::GlobalConfig cfg;
    cfg.apply_env();
    perfectoid::SelftestOutcome out = perfectoid::run_selftest(cfg);
    std::cout << out.report_text;
    if (!out.all_passed) {
        std::cout << "acceptance: FAILED\n";
        return 1;
    }
    std::cout << "acceptance: all criteria passed\n";
    return 0;
}
