#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reasonkit {

// Randomized self-check: generates read-once trees and positive instances,
// then asserts every cross-module invariant (oracle agreement, duality,
// greedy bound, probable-reason semantics, explanatory features). Used by
// the `verify` CLI command and by the acceptance suite.

struct VerifyOptions {
    std::size_t trials = 1000;
    std::int32_t max_vars = 12;
    std::uint64_t seed = 1;
    bool inject_fault = false; // flip one leaf behind the library's back; checks must catch it
};

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace reasonkit
