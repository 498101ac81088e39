#pragma once

// Command cores behind the CLI executable. Each takes raw input bytes (or
// plain arguments), runs the pipeline, and returns the exit code plus the
// exact bytes for stdout and stderr. Keeping them in the library makes the
// full command behavior testable in process.
//
// Exit codes: 0 success/certified, 1 input error, 2 obstruction, 3 oracle
// disagreement (internal inconsistency), 4 self-check failure.

#include <cstddef>
#include <optional>
#include <string>

namespace stiefel::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct CertifyOptions {
    bool oracle = false;                    // force the exhaustive cross-check
    std::optional<std::string> a_star_bits; // descriptor for bare manifold inputs
};

CommandResult run_homology(const std::string& input_bytes);
CommandResult run_certify(const std::string& input_bytes, const CertifyOptions& options);
CommandResult run_catalog_list();
CommandResult run_catalog_get(const std::string& name);
CommandResult run_represent(std::size_t genus, const std::string& class_bits);
CommandResult run_bundle_classify(const std::string& input_bytes);

} // namespace stiefel::cli
