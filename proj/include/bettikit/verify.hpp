#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bettikit {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The bundled verification suite: one result per acceptance criterion.
// Fast trims parameter ranges and case counts; Full runs everything.
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress = nullptr);

} // namespace bettikit
