#pragma once

#include "perfectoid/config.hpp"

#include <vector>

namespace perfectoid {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

struct SelftestOutcome {
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
    std::string report_text; // one PASS/FAIL line per criterion
};

/// Run the full acceptance suite under the given configuration. Criterion 10
/// re-runs criteria 1..9 and byte-compares the two reports, so a full call
/// executes the suite twice.
SelftestOutcome run_selftest(const GlobalConfig& cfg);

} // namespace perfectoid
