#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gencyc {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    int samples = 500;
    std::uint64_t seed = 0x5eed2024;
};

/// Runs the built-in scenarios and the randomized identity checks, one result per criterion.
std::vector<CheckResult> verify_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);
nlohmann::json suite_json(const std::vector<CheckResult>& results);
std::string suite_text(const std::vector<CheckResult>& results);

} // namespace gencyc
