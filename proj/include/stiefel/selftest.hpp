#pragma once

// Built-in self-test suites runnable from the CLI. Each suite re-checks one
// pillar of the tool against an independent computation and reports a
// deterministic transcript; on failure the transcript ends with the minimal
// failing case so it can be replayed by hand.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stiefel::selftest {

struct Options {
    std::uint64_t seed = 0;
    std::optional<std::size_t> samples; // per-suite default when absent
    double tol = 1e-12;
};

struct SuiteResult {
    bool passed = false;
    std::string text;
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const Options& options);

} // namespace stiefel::selftest
