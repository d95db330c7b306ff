#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nonarch {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure witness; empty when passing
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    /// one "ok"/"FAIL" line per check plus a summary line; no timings, no
    /// thread counts — byte-identical across runs and worker settings
    std::string str() const;
};

/// property-suite names, in canonical run order
std::vector<std::string> suite_names();

/// DomainError for an unknown name
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int threads);

SuiteReport run_all_suites(std::uint64_t seed, int threads);

}  // namespace nonarch
