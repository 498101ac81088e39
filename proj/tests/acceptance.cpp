// Acceptance gate: one line per criterion, exit 0 only if every line passes.
// Tolerances and budgets are pinned here on purpose; loosening them is a
// contract change, not a tuning knob.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "stiefel/commands.hpp"
#include "stiefel/gf2.hpp"
#include "stiefel/heegaard.hpp"
#include "stiefel/selftest.hpp"
#include "stiefel/serialize.hpp"

namespace heegaard = stiefel::heegaard;
namespace selftest = stiefel::selftest;
namespace cli = stiefel::cli;
namespace gf2 = stiefel::gf2;
using nlohmann::json;

namespace {

constexpr double iff_budget_seconds = 30.0;
constexpr double curves_budget_seconds = 1.0;
constexpr double frames_budget_seconds = 1.0;
constexpr double frames_tolerance = 1e-12;

struct Outcome {
    bool passed = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string catalog_document(const std::string& name) {
    return cli::manifold_to_json(cli::document_from_splitting(heegaard::catalog(name))).dump();
}

// 1. Certification, exhaustive search, and the restricted-class test agree on
//    the full seeded sweep: genus 0..4, 200 splittings each, all descriptors
//    through genus 2 and 100 random descriptors for genus 3 and 4.
Outcome criterion_iff_theorem() {
    const auto start = std::chrono::steady_clock::now();
    const auto result = selftest::run_suite("oracle-equivalence", selftest::Options{});
    const double elapsed = seconds_since(start);
    if (!result.passed) return {false, "suite failed:\n" + result.text};
    if (elapsed >= iff_budget_seconds) {
        return {false, "took " + std::to_string(elapsed) + " s, budget " +
                           std::to_string(iff_budget_seconds) + " s"};
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", elapsed);
    return {true, std::string("agreement on the full sweep in ") + buf};
}

// 2. The hand-derived genus-1 correction traces come back bit-exactly from
//    the certify command run on catalog documents.
Outcome criterion_worked_traces() {
    {
        json request;
        request["schema_version"] = "1";
        request["manifold"] = json::parse(catalog_document("s3_g1"));
        request["a_star"] = json::array({1, 0});
        const auto result = cli::run_certify(request.dump(), {});
        if (result.exit_code != 0) return {false, "s3_g1 certify exited " + std::to_string(result.exit_code)};
        const json report = json::parse(result.out);
        const json& certificate = report.at("certificate");
        if (certificate.at("corrections") !=
            json{{"c_prime", json::array({0})}, {"c_second", json::array({1})}}) {
            return {false, "s3_g1 corrections differ: " + certificate.at("corrections").dump()};
        }
        const json expected_transcript = json::array(
            {json{{"role", "beta"}, {"value", 0}, {"vector", json::array({1, 0})}},
             json{{"role", "gamma"}, {"value", 0}, {"vector", json::array({0, 1})}}});
        if (certificate.at("transcript") != expected_transcript) {
            return {false, "s3_g1 transcript differs: " + certificate.at("transcript").dump()};
        }
    }
    {
        json request;
        request["schema_version"] = "1";
        request["manifold"] = json::parse(catalog_document("rp3"));
        request["a_star"] = json::array({0, 1});
        const auto result = cli::run_certify(request.dump(), {});
        if (result.exit_code != 0) return {false, "rp3 certify exited " + std::to_string(result.exit_code)};
        const json report = json::parse(result.out);
        const json& certificate = report.at("certificate");
        if (certificate.at("corrections") !=
            json{{"c_prime", json::array({1})}, {"c_second", json::array({0})}}) {
            return {false, "rp3 corrections differ: " + certificate.at("corrections").dump()};
        }
        const json expected_transcript = json::array(
            {json{{"role", "alpha"}, {"value", 0}, {"vector", json::array({1, 0})}},
             json{{"role", "delta"}, {"value", 0}, {"vector", json::array({0, 1})}}});
        if (certificate.at("transcript") != expected_transcript) {
            return {false, "rp3 transcript differs: " + certificate.at("transcript").dump()};
        }
    }
    {
        json request;
        request["schema_version"] = "1";
        request["manifold"] = json::parse(catalog_document("rp3"));
        request["a_star"] = json::array({1, 0});
        const auto result = cli::run_certify(request.dump(), {});
        if (result.exit_code != 2) {
            return {false, "rp3 obstruction exited " + std::to_string(result.exit_code)};
        }
        const json report = json::parse(result.out);
        if (report.at("witness").at("alpha") != json::array({1, 0})) {
            return {false, "rp3 witness differs: " + report.at("witness").dump()};
        }
    }
    return {true, "genus-1 sphere and projective-space traces reproduced bit-exactly"};
}

// 3. Homology dimensions across the catalog corpus.
Outcome criterion_homology_corpus() {
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> corpus = {
        {"s3_g0", {0, 0}},     {"s3_g1", {0, 0}},     {"lens(3,1)", {0, 0}},
        {"rp3", {1, 1}},       {"s1xs2", {1, 1}},     {"lens(4,1)", {1, 1}},
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        corpus.push_back({"sum_s1xs2(" + std::to_string(n) + ")", {n, n}});
    }
    for (const auto& [name, dims] : corpus) {
        const auto s = heegaard::catalog(name);
        const auto h1 = heegaard::h1_manifold(s).dimension;
        const auto h2 = heegaard::h2_manifold(s).dimension;
        if (h1 != dims.first || h2 != dims.second) {
            return {false, name + ": got (" + std::to_string(h1) + "," + std::to_string(h2) +
                               "), expected (" + std::to_string(dims.first) + "," +
                               std::to_string(dims.second) + ")"};
        }
    }
    return {true, "all " + std::to_string(corpus.size()) + " corpus entries have the expected dims"};
}

// 4. dim(K' meet K'') + dim(K' + K'') = 2g on every splitting we generate.
Outcome criterion_dimension_identity() {
    std::size_t checked = 0;
    for (std::size_t g = 0; g <= 6; ++g) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto s = heegaard::random_splitting(g, seed);
            const auto meet = gf2::subspace_intersection(s.k_prime, s.k_second);
            const auto sum = gf2::subspace_sum(s.k_prime, s.k_second);
            if (meet.dim() != 2 * g - sum.dim()) {
                return {false, "genus " + std::to_string(g) + " seed " + std::to_string(seed) +
                                   ": meet " + std::to_string(meet.dim()) + ", sum " +
                                   std::to_string(sum.dim())};
            }
            ++checked;
        }
    }
    for (const auto& name : heegaard::catalog_names()) {
        if (name.find('(') != std::string::npos) continue; // parametric template names
        const auto s = heegaard::catalog(name);
        const auto meet = gf2::subspace_intersection(s.k_prime, s.k_second);
        const auto sum = gf2::subspace_sum(s.k_prime, s.k_second);
        if (meet.dim() != 2 * s.genus - sum.dim()) return {false, name + " breaks the identity"};
        ++checked;
    }
    return {true, std::to_string(checked) + " splittings satisfy the identity"};
}

// 5. Every class through genus 3 is represented by a verified multicurve.
Outcome criterion_curves() {
    const auto start = std::chrono::steady_clock::now();
    const auto result = selftest::run_suite("curves", selftest::Options{});
    const double elapsed = seconds_since(start);
    if (!result.passed) return {false, "suite failed:\n" + result.text};
    if (elapsed >= curves_budget_seconds) {
        return {false, "took " + std::to_string(elapsed) + " s, budget 1 s"};
    }
    return {true, "85 classes verified and reproduced"};
}

// 6. Normal cocycles are orientable, w1 ignores the 2-handle sign, and
//    isomorphism behaves as an equivalence relation on random cocycles.
Outcome criterion_bundles() {
    const auto result = selftest::run_suite("bundles", selftest::Options{});
    if (!result.passed) return {false, "suite failed:\n" + result.text};
    return {true, "sweep through n = 8 plus 1000 random triples"};
}

// 7. Frame numerics at the pinned tolerance.
Outcome criterion_frames() {
    const auto start = std::chrono::steady_clock::now();
    selftest::Options options;
    options.tol = frames_tolerance;
    const auto result = selftest::run_suite("s3-frames", options);
    const double elapsed = seconds_since(start);
    if (!result.passed) return {false, "suite failed:\n" + result.text};
    if (elapsed >= frames_budget_seconds) {
        return {false, "took " + std::to_string(elapsed) + " s, budget 1 s"};
    }
    return {true, "1000 points pass at 1e-12 with determinant +1 and idempotent orthonormalization"};
}

// 8. Two runs of the installed binary with equal inputs produce identical
//    bytes. Exercises the real executable, not just the library cores.
Outcome criterion_determinism() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "stiefel-acceptance";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return {false, "cannot create temp dir " + dir.string()};

    const std::filesystem::path input_path = dir / "request.json";
    {
        json request;
        request["schema_version"] = "1";
        request["manifold"] = json::parse(catalog_document("lens(4,1)"));
        request["a_star"] = json::array({0, 1});
        request["run_oracle"] = true;
        std::ofstream out(input_path, std::ios::binary);
        out << request.dump(2) << "\n";
        if (!out) return {false, "cannot write " + input_path.string()};
    }

    const std::string binary = STIEFEL_CLI_PATH;
    const std::vector<std::string> invocations = {
        "\"" + binary + "\" certify \"" + input_path.string() + "\"",
        "\"" + binary + "\" selftest curves",
        "\"" + binary + "\" homology \"" + input_path.string() + "\"",
    };

    for (std::size_t i = 0; i < invocations.size(); ++i) {
        std::string outputs[2];
        int codes[2] = {0, 0};
        for (int round = 0; round < 2; ++round) {
            const std::filesystem::path capture =
                dir / ("capture_" + std::to_string(i) + "_" + std::to_string(round) + ".txt");
            const std::string command =
                invocations[i] + " > \"" + capture.string() + "\" 2> /dev/null";
            const int status = std::system(command.c_str());
            codes[round] = status;
            std::ifstream in(capture, std::ios::binary);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            outputs[round] = buffer.str();
        }
        if (codes[0] != codes[1]) {
            return {false, "exit codes differ for: " + invocations[i]};
        }
        if (outputs[0] != outputs[1]) {
            return {false, "output bytes differ for: " + invocations[i]};
        }
        if (outputs[0].empty()) {
            return {false, "no output captured for: " + invocations[i]};
        }
    }
    return {true, "three commands rerun byte-identically (certify, selftest, homology)"};
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {1, "certify == exhaustive search == restricted-class test", criterion_iff_theorem},
        {2, "worked correction traces reproduced bit-exactly", criterion_worked_traces},
        {3, "homology corpus dimensions", criterion_homology_corpus},
        {4, "meet/sum dimension identity", criterion_dimension_identity},
        {5, "multicurve representation through genus 3", criterion_curves},
        {6, "line bundle cocycle sweep", criterion_bundles},
        {7, "frame numerics at 1e-12", criterion_frames},
        {8, "byte-identical reruns of the CLI", criterion_determinism},
    };

    bool all_passed = true;
    for (const auto& criterion : criteria) {
        const auto outcome = criterion.run();
        all_passed = all_passed && outcome.passed;
        std::cout << (outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
                  << ": " << criterion.label << " (" << outcome.detail << ")\n";
        std::cout.flush();
    }
    return all_passed ? 0 : 1;
}
