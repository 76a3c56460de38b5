#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidvar {

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
};

struct VerifyReport {
    int max_k = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
    std::string to_text() const;
    std::string to_json_string() const;
};

// Runs every identity check in a fixed registry order; individual check
// errors are recorded as failures, never aborting the suite. Byte-stable for
// fixed arguments.
VerifyReport run_verify_all(int max_k, int trials, std::uint64_t seed);

}  // namespace braidvar
