// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line per criterion.

#include "bettikit/verify.hpp"

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    bettikit::VerifyLevel level = bettikit::VerifyLevel::Full;
    if (argc > 1 && std::string(argv[1]) == "--fast") level = bettikit::VerifyLevel::Fast;
    auto results = bettikit::run_verification(level, nullptr);
    bool all = true;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::printf("[%s] criterion %d %-20s (%6.2fs) %s\n", r.passed ? "PASS" : "FAIL", index,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria satisfied"
                            : "acceptance: at least one criterion FAILED");
    return all ? 0 : 1;
}
