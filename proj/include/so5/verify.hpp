#pragma once

#include <string>
#include <vector>

namespace so5::verify {

// quick ~ seconds (desk-scale oracles), full ~ minutes (1e12 scans,
// quadrature at 1e-10, fit windows).
enum class Level { Quick, Full };

struct CheckResult {
    std::string name;
    int criterion = 0;        // acceptance criterion index, 0 = supplementary
    bool passed = true;
    bool informative = false;  // reported, never failing
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run(Level level);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace so5::verify
