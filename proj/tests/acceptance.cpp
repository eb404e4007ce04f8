// Acceptance sweep: one line per criterion, nonzero exit if any fails.
// Criteria 1-9 run in-process; criterion 10 spawns the installed CLI twice
// and byte-compares the full report output.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ksc/report.hpp"

namespace {

std::string capture(const std::string& command, bool& ok) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        ok = false;
        return {};
    }
    std::string out;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    pclose(pipe); // exit status ignored: only output stability is under test here
    ok = true;
    return out;
}

ksc::CriterionResult cli_determinism() {
    ksc::CriterionResult r;
    r.index = 10;
    r.name = "identical CLI report output across repeated runs";
    const char* cli = std::getenv("KSC_CLI");
    if (!cli || !*cli) {
        r.pass = false;
        r.details.push_back("KSC_CLI is not set; cannot locate the CLI binary");
        return r;
    }
    std::string command = std::string(cli) + " report 2>&1";
    bool ok_first = false;
    bool ok_second = false;
    std::string first = capture(command, ok_first);
    std::string second = capture(command, ok_second);
    if (!ok_first || !ok_second) {
        r.pass = false;
        r.details.push_back("failed to spawn " + command);
        return r;
    }
    r.pass = !first.empty() && first == second;
    r.details.push_back("run 1: " + std::to_string(first.size()) + " bytes, run 2: " +
                        std::to_string(second.size()) + " bytes");
    if (first.empty()) r.details.push_back("CLI produced no output");
    if (first != second) r.details.push_back("outputs differ between runs");
    return r;
}

} // namespace

int main() {
    auto results = ksc::run_criteria();
    results.push_back(cli_determinism());
    std::cout << ksc::render_report(results);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}
