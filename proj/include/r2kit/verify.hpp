#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace r2kit {

struct CheckResult {
    std::string module;
    std::string name;
    bool pass = true;
    double value = 0.0;   // measured quantity (residual, deviation, margin ...)
    double tol = 0.0;     // bound the value is compared against; 0 for boolean checks
    std::string detail;
    bool informational = false;  // reported only, never fails the suite
};

struct VerifyOptions {
    std::uint32_t seed = 42;
    std::vector<std::string> modules;  // empty: all
};

std::vector<std::string> verify_modules();

// Every module's invariant suite; results are in module order regardless of thread scheduling.
std::vector<CheckResult> run_verify_suite(const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace r2kit
