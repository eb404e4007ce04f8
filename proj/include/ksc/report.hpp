#pragma once

#include <string>
#include <vector>

namespace ksc {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

// Runs checks 1 through 9 of the acceptance sweep in-process.
std::vector<CriterionResult> run_criteria();

// Check 10 for the CLI: regenerates a fixed set of output artifacts twice and
// byte-compares them.  The test binary instead spawns the CLI itself twice.
CriterionResult run_determinism_probe();

std::string render_report(const std::vector<CriterionResult>& results);

} // namespace ksc
