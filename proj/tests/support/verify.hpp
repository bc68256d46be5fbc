#pragma once

// The acceptance suite: one callable check per release criterion, each
// returning a pass/fail verdict with details. Shared by the acceptance
// test binary and the command line `verify` subcommand.

#include <functional>
#include <string>
#include <vector>

namespace polyclus::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
    long long millis = 0;
    long long budget_millis = 0;
};

struct Options {
    std::string only;  // substring filter on criterion names; empty = all
    int threads = 1;
};

std::vector<CriterionResult> run_acceptance(const Options& options);

// One line per criterion: "PASS [3] mesh-oracle ... (512 ms)".
std::string format_report(const std::vector<CriterionResult>& results);
std::string format_report_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace polyclus::verify
