#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rescool {

struct CheckResult {
    int id = 0;
    std::string group;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct CheckInfo {
    int id;
    const char* group;
    const char* title;
};

/// The acceptance criteria in order.
const std::vector<CheckInfo>& acceptance_checks();

/// Runs the checks whose id or group appears in the comma-separated `only`
/// list (all when empty). Every threshold is multiplied by tolerance_scale.
std::vector<CheckResult> run_acceptance(const std::string& only = "", double tolerance_scale = 1.0);

/// One "[PASS]/[FAIL]" line per check plus a summary line.
void print_check_table(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rescool
