#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sf {

struct CaseResult {
    std::string key;
    bool pass = false;
    std::string detail;  // empty on success
    double seconds = 0;
};

// Unset values (-1) take the suite's own defaults.
struct SuiteOptions {
    int cap = -1;
    int max_weight = -1;
    int max_n = -1;
    std::uint64_t seed = 1;
    // Called once per finished case (possibly from worker threads, serialized by the runner).
    std::function<void(const CaseResult&)> progress;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_catalog();
bool has_suite(const std::string& name);
// Results come back in case order regardless of the thread count.
std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace sf
