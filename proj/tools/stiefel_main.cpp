#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "stiefel/commands.hpp"
#include "stiefel/selftest.hpp"
#include "stiefel/version.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) return std::nullopt;
    return data;
}

// Prints the result streams and mirrors the report into --output when asked.
int emit(const stiefel::cli::CommandResult& result, const std::optional<std::string>& output_path) {
    std::cout.write(result.out.data(), static_cast<std::streamsize>(result.out.size()));
    std::cout.flush();
    if (!result.err.empty()) {
        std::cerr.write(result.err.data(), static_cast<std::streamsize>(result.err.size()));
        std::cerr.flush();
    }
    if (output_path.has_value()) {
        std::ofstream out(*output_path, std::ios::binary);
        out.write(result.out.data(), static_cast<std::streamsize>(result.out.size()));
        out.flush();
        if (!out) {
            std::cerr << "cannot write output file: " << *output_path << "\n";
            return 1;
        }
    }
    return result.exit_code;
}

// Seed precedence: --seed flag, then STIEFEL_SEED, then 0.
std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag,
                                          std::string& error) {
    if (flag.has_value()) return flag;
    const char* env = std::getenv("STIEFEL_SEED");
    if (env == nullptr || *env == '\0') return 0;
    const std::string text(env);
    std::uint64_t value = 0;
    for (const char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            error = "STIEFEL_SEED: expected an unsigned integer, got \"" + text + "\"";
            return std::nullopt;
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Framing certificates for rank-3 bundles over Heegaard splittings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("stiefel ") + stiefel::tool_version);

    std::string homology_input;
    auto* homology = app.add_subcommand(
        "homology", "Compute GF(2) homology dimensions of a manifold document");
    homology->add_option("input", homology_input, "manifold document (JSON file)")->required();

    std::string certify_input;
    bool certify_oracle = false;
    std::string certify_a_star;
    std::string certify_output;
    auto* certify = app.add_subcommand(
        "certify", "Decide bundle triviality and emit a certificate or witness");
    certify->add_option("input", certify_input, "request or manifold document (JSON file)")
        ->required();
    certify->add_flag("--oracle", certify_oracle, "cross-check against exhaustive search");
    auto* a_star_opt = certify->add_option("--a-star", certify_a_star,
                                           "descriptor bits, e.g. 0110 (for manifold documents)");
    auto* certify_output_opt =
        certify->add_option("--output", certify_output, "also write the report to this file");

    auto* catalog = app.add_subcommand("catalog", "Built-in example manifolds");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "List catalog names");
    std::string catalog_name;
    std::string catalog_output;
    auto* catalog_get = catalog->add_subcommand("get", "Write a catalog manifold document");
    catalog_get->add_option("name", catalog_name, "catalog entry, e.g. rp3 or lens(3,1)")
        ->required();
    auto* catalog_output_opt =
        catalog_get->add_option("--output", catalog_output, "also write the document to this file");

    std::size_t represent_genus = 0;
    std::string represent_class;
    auto* represent = app.add_subcommand(
        "represent", "Represent a GF(2) homology class by an embedded multicurve");
    represent->add_option("--genus", represent_genus, "surface genus")->required();
    represent->add_option("--class", represent_class, "class bits, e.g. 1110")->required();

    auto* bundle = app.add_subcommand("bundle", "Line bundle cocycles over cross-cap surfaces");
    bundle->require_subcommand(1);
    std::string bundle_input;
    auto* bundle_classify =
        bundle->add_subcommand("classify", "Classify a line bundle cocycle document");
    bundle_classify->add_option("input", bundle_input, "bundle document (JSON file)")->required();

    std::string selftest_suite;
    std::optional<std::uint64_t> selftest_seed;
    std::optional<std::size_t> selftest_samples;
    double selftest_tol = 1e-12;
    auto* selftest = app.add_subcommand("selftest", "Run a built-in self-test suite");
    selftest->add_option("suite", selftest_suite, "one of: s3-frames, oracle-equivalence, curves, bundles")
        ->required();
    selftest->add_option("--seed", selftest_seed, "RNG seed (default: STIEFEL_SEED or 0)");
    selftest->add_option("--samples", selftest_samples, "sample count (suite-specific default)");
    selftest->add_option("--tol", selftest_tol, "numeric tolerance (default 1e-12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (homology->parsed()) {
            const auto bytes = read_file(homology_input);
            if (!bytes) {
                std::cerr << "cannot read input file: " << homology_input << "\n";
                return 1;
            }
            return emit(stiefel::cli::run_homology(*bytes), std::nullopt);
        }

        if (certify->parsed()) {
            const auto bytes = read_file(certify_input);
            if (!bytes) {
                std::cerr << "cannot read input file: " << certify_input << "\n";
                return 1;
            }
            stiefel::cli::CertifyOptions options;
            options.oracle = certify_oracle;
            if (a_star_opt->count() > 0) options.a_star_bits = certify_a_star;
            std::optional<std::string> output;
            if (certify_output_opt->count() > 0) output = certify_output;
            return emit(stiefel::cli::run_certify(*bytes, options), output);
        }

        if (catalog_list->parsed()) {
            return emit(stiefel::cli::run_catalog_list(), std::nullopt);
        }

        if (catalog_get->parsed()) {
            std::optional<std::string> output;
            if (catalog_output_opt->count() > 0) output = catalog_output;
            return emit(stiefel::cli::run_catalog_get(catalog_name), output);
        }

        if (represent->parsed()) {
            return emit(stiefel::cli::run_represent(represent_genus, represent_class),
                        std::nullopt);
        }

        if (bundle_classify->parsed()) {
            const auto bytes = read_file(bundle_input);
            if (!bytes) {
                std::cerr << "cannot read input file: " << bundle_input << "\n";
                return 1;
            }
            return emit(stiefel::cli::run_bundle_classify(*bytes), std::nullopt);
        }

        if (selftest->parsed()) {
            std::string seed_error;
            const auto seed = resolve_seed(selftest_seed, seed_error);
            if (!seed) {
                std::cerr << seed_error << "\n";
                return 1;
            }
            stiefel::selftest::Options options;
            options.seed = *seed;
            options.samples = selftest_samples;
            options.tol = selftest_tol;
            try {
                const auto result = stiefel::selftest::run_suite(selftest_suite, options);
                std::cout << result.text;
                std::cout.flush();
                return result.passed ? 0 : 4;
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
        }
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    return 0;
}
