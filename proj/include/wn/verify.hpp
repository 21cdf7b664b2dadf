#pragma once

// Deterministic self-check harness: reruns the bracket identities, the
// differentiation extractions, the fixed bracket computations, the
// solvability and nilpotency fixtures and the reduction pipelines, and
// records each check's outcome with exact values.

#include "wn/json_report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wn {

struct VerifyOptions {
    std::size_t n_max = 2;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::size_t samples = 0;
    report::Json details = report::Json::object();
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    report::Json to_json() const;
};

VerifyReport verify_paper(const VerifyOptions& options);

// Sequential single partials, kept apart from apply_diff_multi's termwise
// formula so each can check the other.
Polynomial differentiate_sequentially(const Polynomial& f, std::span<const std::uint32_t> alpha);

}  // namespace wn
