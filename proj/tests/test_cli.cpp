#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "stiefel/commands.hpp"
#include "stiefel/heegaard.hpp"
#include "stiefel/selftest.hpp"
#include "stiefel/serialize.hpp"

using namespace stiefel::cli;
namespace heegaard = stiefel::heegaard;
namespace selftest = stiefel::selftest;
using nlohmann::json;

namespace {

// Field name carried by a ParseError, for error-location tests.
std::string failing_field(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.field();
    }
    return "(no error)";
}

json manifold_doc(std::size_t genus, const json& rows, const std::string& label = "") {
    json doc;
    doc["schema_version"] = "1";
    doc["genus"] = genus;
    doc["k_second_rows"] = rows;
    if (!label.empty()) doc["label"] = label;
    return doc;
}

json catalog_doc(const std::string& name) {
    return manifold_to_json(document_from_splitting(heegaard::catalog(name)));
}

} // namespace

TEST_CASE("digest matches the published 64-bit FNV-1a vectors") {
    CHECK(fnv1a64_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(fnv1a64_digest("a") == "fnv1a64:af63dc4c8601ec8c");
    CHECK(fnv1a64_digest("foobar") == "fnv1a64:85944171f73967e8");
    CHECK(fnv1a64_digest("rp3") == "fnv1a64:89c4051960d46b84");
    CHECK(fnv1a64_digest("genus=2;class=1110") == "fnv1a64:956df2fdbbea7967");
}

TEST_CASE("manifold documents parse and report precise field errors") {
    const auto doc = parse_manifold_text(
        R"({"schema_version":"1","genus":1,"k_second_rows":[[1,0]],"label":"rp3"})");
    CHECK(doc.genus == 1);
    CHECK(doc.k_second_rows == std::vector<std::vector<int>>{{1, 0}});
    CHECK(doc.label == "rp3");

    CHECK(failing_field([] { parse_manifold_text("not json at all"); }) == "document");
    CHECK(failing_field([] { parse_manifold_text(R"([1,2,3])") ; }) == "document");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"genus":1,"k_second_rows":[[1,0]]})");
    }) == "schema_version");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"2","genus":1,"k_second_rows":[[1,0]]})");
    }) == "schema_version");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"1","k_second_rows":[[1,0]]})");
    }) == "genus");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"1","genus":-1,"k_second_rows":[]})");
    }) == "genus");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"1","genus":2,"k_second_rows":[[1,0,0,0]]})");
    }) == "k_second_rows");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"1","genus":1,"k_second_rows":[[1,0,1]]})");
    }) == "k_second_rows[0]");
    CHECK(failing_field([] {
        parse_manifold_text(R"({"schema_version":"1","genus":1,"k_second_rows":[[1,2]]})");
    }) == "k_second_rows[0][1]");
    CHECK(failing_field([] {
        parse_manifold_text(
            R"({"schema_version":"1","genus":1,"k_second_rows":[[1,0]],"label":3})");
    }) == "label");
}

TEST_CASE("certify requests parse with prefixed nested errors") {
    json request;
    request["schema_version"] = "1";
    request["manifold"] = manifold_doc(1, json::array({json::array({0, 1})}), "s3_g1");
    request["a_star"] = json::array({1, 0});
    request["run_oracle"] = true;

    const auto parsed = parse_certify_request(request);
    CHECK(parsed.manifold.genus == 1);
    CHECK(parsed.a_star == std::vector<int>{1, 0});
    CHECK(parsed.run_oracle);

    json broken = request;
    broken["manifold"].erase("genus");
    CHECK(failing_field([&] { parse_certify_request(broken); }) == "manifold.genus");

    broken = request;
    broken["a_star"] = json::array({1, 0, 1});
    CHECK(failing_field([&] { parse_certify_request(broken); }) == "a_star");

    broken = request;
    broken.erase("manifold");
    CHECK(failing_field([&] { parse_certify_request(broken); }) == "manifold");

    broken = request;
    broken["run_oracle"] = 1;
    CHECK(failing_field([&] { parse_certify_request(broken); }) == "run_oracle");
}

TEST_CASE("bundle documents parse strictly") {
    const auto doc = parse_bundle_text(R"({"n":2,"weights":[1,0],"sign":1})");
    CHECK(doc.n == 2);
    CHECK(doc.weights == std::vector<int>{1, 0});
    CHECK(doc.sign == 1);

    CHECK(failing_field([] { parse_bundle_text(R"({"weights":[1],"sign":0})"); }) == "n");
    CHECK(failing_field([] { parse_bundle_text(R"({"n":2,"weights":[1],"sign":0})"); }) ==
          "weights");
    CHECK(failing_field([] { parse_bundle_text(R"({"n":1,"weights":[1],"sign":2})"); }) == "sign");
}

TEST_CASE("manifold documents round-trip through JSON and back to splittings") {
    for (const auto& name : {"s3_g0", "s3_g1", "rp3", "s1xs2", "lens(3,1)", "sum_s1xs2(3)"}) {
        const auto original = heegaard::catalog(name);
        const json wire = manifold_to_json(document_from_splitting(original));
        const auto restored = splitting_from_document(parse_manifold_text(wire.dump()));
        CHECK(restored.genus == original.genus);
        CHECK(restored.k_prime == original.k_prime);
        CHECK(restored.k_second == original.k_second);
        CHECK(restored.label == original.label);
    }
}

TEST_CASE("homology command reports dimensions and a stable digest") {
    const std::string input = catalog_doc("rp3").dump(2) + "\n";
    const auto result = run_homology(input);
    CHECK(result.exit_code == 0);
    CHECK(result.err.empty());

    const json report = json::parse(result.out);
    CHECK(report.at("schema_version") == "1");
    CHECK(report.at("tool_version") == "1.0.0");
    CHECK(report.at("input_digest") == fnv1a64_digest(input));
    CHECK(report.at("genus") == 1);
    CHECK(report.at("label") == "rp3");
    CHECK(report.at("h1_dim") == 1);
    CHECK(report.at("h2_dim") == 1);
    CHECK(report.at("warnings").empty());
    CHECK(!report.contains("verdict"));
}

TEST_CASE("homology command rejects malformed and invalid inputs with exit 1") {
    const auto broken = run_homology(
        R"({"schema_version":"1","genus":1,"k_second_rows":[[1,0,1]]})");
    CHECK(broken.exit_code == 1);
    CHECK(!broken.err.empty());
    const json broken_report = json::parse(broken.out);
    CHECK(broken_report.at("verdict") == "invalid");
    const std::string message = broken_report.at("error");
    CHECK(message.find("k_second_rows[0]") != std::string::npos);

    // Well-formed JSON whose attaching rows are dependent: not a splitting.
    const auto degenerate =
        run_homology(manifold_doc(1, json::array({json::array({0, 0})})).dump());
    CHECK(degenerate.exit_code == 1);
    const json degenerate_report = json::parse(degenerate.out);
    CHECK(degenerate_report.at("verdict") == "invalid");
}

TEST_CASE("homology command carries non-isotropy warnings without failing") {
    const json rows = json::array({json::array({1, 0, 0, 0}), json::array({0, 1, 0, 0})});
    const auto result = run_homology(manifold_doc(2, rows).dump());
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report.at("warnings").size() == 1);
    const std::string warning = report.at("warnings")[0];
    CHECK(warning.find("k_second") != std::string::npos);
}

TEST_CASE("certify command emits the frozen trace for the genus-1 sphere") {
    json request;
    request["schema_version"] = "1";
    request["manifold"] = manifold_doc(1, json::array({json::array({0, 1})}), "s3_g1");
    request["a_star"] = json::array({1, 0});
    request["run_oracle"] = true;
    const std::string input = request.dump(2) + "\n";

    const auto result = run_certify(input, {});
    CHECK(result.exit_code == 0);
    CHECK(result.err.empty());

    const json report = json::parse(result.out);
    CHECK(report.at("verdict") == "certified");
    CHECK(report.at("oracle_agreement") == true);
    CHECK(report.at("h1_dim") == 0);
    CHECK(report.at("h2_dim") == 0);
    CHECK(report.at("input_digest") == fnv1a64_digest(input));

    const json& certificate = report.at("certificate");
    CHECK(certificate.at("genus") == 1);
    CHECK(certificate.at("label") == "s3_g1");
    CHECK(certificate.at("a_star") == json::array({1, 0}));
    CHECK(certificate.at("chain").at("k") == 0);
    CHECK(certificate.at("chain").at("h") == 1);
    CHECK(certificate.at("corrections").at("c_prime") == json::array({0}));
    CHECK(certificate.at("corrections").at("c_second") == json::array({1}));

    const json& transcript = certificate.at("transcript");
    REQUIRE(transcript.size() == 2);
    CHECK(transcript[0].at("role") == "beta");
    CHECK(transcript[0].at("vector") == json::array({1, 0}));
    CHECK(transcript[0].at("value") == 0);
    CHECK(transcript[1].at("role") == "gamma");
    CHECK(transcript[1].at("vector") == json::array({0, 1}));
    CHECK(transcript[1].at("value") == 0);
}

TEST_CASE("certify command reports the obstruction witness with exit 2") {
    json request;
    request["schema_version"] = "1";
    request["manifold"] = manifold_doc(1, json::array({json::array({1, 0})}), "rp3");
    request["a_star"] = json::array({1, 0});

    const auto result = run_certify(request.dump(), {});
    CHECK(result.exit_code == 2);
    const json report = json::parse(result.out);
    CHECK(report.at("verdict") == "obstructed");
    CHECK(report.at("witness").at("alpha") == json::array({1, 0}));
    CHECK(report.at("witness").at("a_star_value") == 1);
    CHECK(!report.contains("certificate"));
}

TEST_CASE("certify command accepts a bare manifold document plus --a-star") {
    const std::string input = catalog_doc("rp3").dump();

    CertifyOptions options;
    options.a_star_bits = "01";
    const auto certified = run_certify(input, options);
    CHECK(certified.exit_code == 0);
    const json report = json::parse(certified.out);
    CHECK(report.at("verdict") == "certified");
    CHECK(report.at("certificate").at("a_star") == json::array({0, 1}));
    CHECK(report.at("certificate").at("corrections").at("c_prime") == json::array({1}));
    CHECK(report.at("certificate").at("corrections").at("c_second") == json::array({0}));

    const auto missing = run_certify(input, {});
    CHECK(missing.exit_code == 1);
    const std::string missing_message = json::parse(missing.out).at("error");
    CHECK(missing_message.find("--a-star") != std::string::npos);

    CertifyOptions wrong_length;
    wrong_length.a_star_bits = "011";
    CHECK(run_certify(input, wrong_length).exit_code == 1);

    CertifyOptions bad_chars;
    bad_chars.a_star_bits = "0a";
    CHECK(run_certify(input, bad_chars).exit_code == 1);

    // A request document already carries its descriptor.
    json request;
    request["schema_version"] = "1";
    request["manifold"] = json::parse(input);
    request["a_star"] = json::array({0, 1});
    CertifyOptions duplicated;
    duplicated.a_star_bits = "01";
    const auto conflict = run_certify(request.dump(), duplicated);
    CHECK(conflict.exit_code == 1);
    const std::string conflict_message = json::parse(conflict.out).at("error");
    CHECK(conflict_message.find("both") != std::string::npos);
}

TEST_CASE("certify command is byte-deterministic") {
    json request;
    request["schema_version"] = "1";
    request["manifold"] = catalog_doc("sum_s1xs2(2)");
    request["a_star"] = json::array({0, 0, 0, 0});
    request["run_oracle"] = true;
    const std::string input = request.dump();

    const auto first = run_certify(input, {});
    const auto second = run_certify(input, {});
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}

TEST_CASE("catalog commands list entries and emit loadable documents") {
    const auto listing = run_catalog_list();
    CHECK(listing.exit_code == 0);
    const json report = json::parse(listing.out);
    const auto& names = report.at("catalog");
    CHECK(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), json("rp3")) != names.end());
    CHECK(std::find(names.begin(), names.end(), json("lens(p,q)")) != names.end());

    const auto fetched = run_catalog_get("lens(4,1)");
    CHECK(fetched.exit_code == 0);
    const json doc = json::parse(fetched.out);
    CHECK(doc.at("schema_version") == "1");
    CHECK(doc.at("genus") == 1);
    CHECK(doc.at("k_second_rows") == json::array({json::array({1, 0})}));

    // The emitted document is directly consumable by the other commands.
    const auto homology = run_homology(fetched.out);
    CHECK(homology.exit_code == 0);
    CHECK(json::parse(homology.out).at("h1_dim") == 1);

    const auto unknown = run_catalog_get("poincare");
    CHECK(unknown.exit_code == 1);
    CHECK(json::parse(unknown.out).at("verdict") == "invalid");

    // lens(6,2) has both parameters even, which this presentation cannot hit.
    CHECK(run_catalog_get("lens(6,2)").exit_code == 1);
    CHECK(run_catalog_get("sum_s1xs2(0)").exit_code == 1);
}

TEST_CASE("represent command emits verified multicurve data") {
    const auto result = run_represent(2, "1110");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report.at("input_digest") == "fnv1a64:956df2fdbbea7967");
    CHECK(report.at("genus") == 2);
    CHECK(report.at("class") == json::array({1, 1, 1, 0}));
    CHECK(report.at("verified") == true);
    REQUIRE(report.at("components").size() == 2);
    CHECK(report.at("components")[0].at("kind") == "desing");
    CHECK(report.at("components")[0].at("index") == 1);
    CHECK(report.at("components")[1].at("kind") == "mu");
    CHECK(report.at("components")[1].at("index") == 2);
    CHECK(report.at("bands") == json::array({json::array({0, 1})}));
    CHECK(!report.contains("note"));

    const auto empty = run_represent(1, "00");
    CHECK(empty.exit_code == 0);
    const json empty_report = json::parse(empty.out);
    CHECK(empty_report.at("components").empty());
    CHECK(empty_report.at("bands").empty());
    CHECK(empty_report.contains("note"));

    CHECK(run_represent(2, "011").exit_code == 1);
    CHECK(run_represent(1, "0a").exit_code == 1);
}

TEST_CASE("bundle classify command reads off w1 and orientability") {
    const auto trivial = run_bundle_classify(R"({"n":2,"weights":[1,1],"sign":0})");
    CHECK(trivial.exit_code == 0);
    const json report = json::parse(trivial.out);
    CHECK(report.at("n") == 2);
    CHECK(report.at("weights") == json::array({1, 1}));
    CHECK(report.at("sign") == 0);
    CHECK(report.at("w1_class") == json::array({1, 1}));
    CHECK(report.at("total_space_orientable") == true);
    CHECK(report.at("isomorphic_to_normal_bundle") == true);

    const auto twisted = run_bundle_classify(R"({"n":2,"weights":[1,0],"sign":1})");
    CHECK(twisted.exit_code == 0);
    const json twisted_report = json::parse(twisted.out);
    CHECK(twisted_report.at("total_space_orientable") == false);
    CHECK(twisted_report.at("isomorphic_to_normal_bundle") == false);

    CHECK(run_bundle_classify(R"({"n":2,"weights":[1],"sign":0})").exit_code == 1);
    CHECK(run_bundle_classify(R"({"n":0,"weights":[],"sign":0})").exit_code == 1);
    CHECK(run_bundle_classify("{}").exit_code == 1);
}

TEST_CASE("selftest suites pass at reduced sizes and print deterministic text") {
    CHECK(selftest::suite_names().size() == 4);
    CHECK_THROWS_AS(selftest::run_suite("bogus", {}), std::invalid_argument);

    selftest::Options small;
    small.seed = 5;
    small.samples = 25;
    const auto frames = selftest::run_suite("s3-frames", small);
    CHECK(frames.passed);
    CHECK(frames.text.find("result: PASS") != std::string::npos);
    CHECK(frames.text.find("checked 25 random unit points") != std::string::npos);
    CHECK(selftest::run_suite("s3-frames", small).text == frames.text);

    const auto curves = selftest::run_suite("curves", {});
    CHECK(curves.passed);
    CHECK(curves.text.find("checked 85 classes") != std::string::npos);

    selftest::Options bundles_options;
    bundles_options.seed = 9;
    bundles_options.samples = 50;
    const auto bundles = selftest::run_suite("bundles", bundles_options);
    CHECK(bundles.passed);
    CHECK(bundles.text.find("510 sign-flip cases") != std::string::npos);

    selftest::Options oracle_options;
    oracle_options.seed = 3;
    oracle_options.samples = 2;
    const auto oracle = selftest::run_suite("oracle-equivalence", oracle_options);
    CHECK(oracle.passed);
    CHECK(oracle.text.find("checked 442 (splitting, descriptor) pairs") != std::string::npos);
}
