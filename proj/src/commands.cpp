#include "stiefel/commands.hpp"

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "stiefel/bundles.hpp"
#include "stiefel/framing.hpp"
#include "stiefel/heegaard.hpp"
#include "stiefel/serialize.hpp"
#include "stiefel/surface.hpp"
#include "stiefel/version.hpp"

namespace stiefel::cli {

using nlohmann::json;

namespace {

// Reports are dumped from nlohmann objects, which keep their keys sorted,
// so equal inputs always produce identical bytes.
std::string render(const json& report) { return report.dump(2) + "\n"; }

json report_skeleton(const std::string& digest) {
    json report;
    report["schema_version"] = wire_schema_version;
    report["tool_version"] = tool_version;
    report["input_digest"] = digest;
    return report;
}

CommandResult invalid_result(const std::string& digest, const std::string& message) {
    json report = report_skeleton(digest);
    report["verdict"] = "invalid";
    report["error"] = message;
    return {1, render(report), message + "\n"};
}

json basis_json(const std::vector<gf2::Gf2Vector>& vectors) {
    json rows = json::array();
    for (const auto& v : vectors) rows.push_back(bits_to_json(v));
    return rows;
}

// Validation diagnostics split into hard errors (reject the input) and
// warnings (carried through into the report).
struct ValidationSplit {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

ValidationSplit split_diagnostics(const heegaard::HeegaardSplitting& s) {
    ValidationSplit out;
    for (const auto& d : heegaard::validate(s)) {
        if (d.severity == heegaard::Severity::Error) out.errors.push_back(d.message);
        else out.warnings.push_back(d.message);
    }
    return out;
}

json manifold_summary(const heegaard::HeegaardSplitting& s) {
    json doc = manifold_to_json(document_from_splitting(s));
    doc.erase("schema_version");
    return doc;
}

json certificate_json(const framing::FramingCertificate& cert) {
    json c = manifold_summary(cert.splitting);
    c["a_star"] = bits_to_json(cert.descriptor.a_star);

    json chain;
    chain["k"] = cert.chain.k;
    chain["h"] = cert.chain.h;
    chain["alphas"] = basis_json(cert.chain.alphas);
    chain["betas"] = basis_json(cert.chain.betas);
    chain["gammas"] = basis_json(cert.chain.gammas);
    chain["deltas"] = basis_json(cert.chain.deltas);
    c["chain"] = chain;

    c["corrections"] = {{"c_prime", bits_to_json(cert.corrections.c_prime)},
                        {"c_second", bits_to_json(cert.corrections.c_second)}};

    json transcript = json::array();
    for (const auto& entry : cert.transcript) {
        transcript.push_back({{"role", entry.role},
                              {"vector", bits_to_json(entry.vector)},
                              {"value", entry.value ? 1 : 0}});
    }
    c["transcript"] = transcript;
    return c;
}

} // namespace

CommandResult run_homology(const std::string& input_bytes) {
    const std::string digest = fnv1a64_digest(input_bytes);
    try {
        const auto doc = parse_manifold_text(input_bytes);
        const auto splitting = splitting_from_document(doc);
        const auto diagnostics = split_diagnostics(splitting);
        if (!diagnostics.errors.empty()) {
            return invalid_result(digest, diagnostics.errors.front());
        }

        const auto h1 = heegaard::h1_manifold(splitting);
        const auto h2 = heegaard::h2_manifold(splitting);

        json report = report_skeleton(digest);
        report["genus"] = splitting.genus;
        if (!splitting.label.empty()) report["label"] = splitting.label;
        report["h1_dim"] = h1.dimension;
        report["h2_dim"] = h2.dimension;
        report["warnings"] = diagnostics.warnings;
        return {0, render(report), ""};
    } catch (const ParseError& e) {
        return invalid_result(digest, e.what());
    }
}

CommandResult run_certify(const std::string& input_bytes, const CertifyOptions& options) {
    const std::string digest = fnv1a64_digest(input_bytes);
    try {
        json parsed = json::parse(input_bytes, nullptr, false);
        if (parsed.is_discarded()) {
            throw ParseError("input", "not valid JSON");
        }

        CertifyRequest request;
        if (looks_like_request(parsed)) {
            if (options.a_star_bits.has_value()) {
                throw ParseError("a_star",
                                 "given both in the request document and on the command line");
            }
            request = parse_certify_request(parsed);
        } else {
            request.manifold = parse_manifold(parsed);
            if (!options.a_star_bits.has_value()) {
                throw ParseError("a_star",
                                 "manifold document needs a descriptor supplied via --a-star");
            }
            const auto v = vector_from_bit_string(*options.a_star_bits, "a_star");
            if (v.dim() != 2 * request.manifold.genus) {
                throw ParseError("a_star",
                                 "expected " + std::to_string(2 * request.manifold.genus) +
                                     " bits, got " + std::to_string(v.dim()));
            }
            request.a_star = v.to_bits();
        }

        const auto splitting = splitting_from_document(request.manifold);
        const auto diagnostics = split_diagnostics(splitting);
        if (!diagnostics.errors.empty()) {
            return invalid_result(digest, diagnostics.errors.front());
        }

        const framing::BundleDescriptor descriptor{vector_from_bits(request.a_star, "a_star")};
        if (descriptor.a_star.dim() != 2 * splitting.genus) {
            throw ParseError("a_star", "expected " + std::to_string(2 * splitting.genus) +
                                           " bits, got " +
                                           std::to_string(descriptor.a_star.dim()));
        }

        const auto h1 = heegaard::h1_manifold(splitting);
        const auto h2 = heegaard::h2_manifold(splitting);
        const auto outcome = framing::certify(splitting, descriptor);
        const bool certified = std::holds_alternative<framing::FramingCertificate>(outcome);

        json report = report_skeleton(digest);
        report["h1_dim"] = h1.dimension;
        report["h2_dim"] = h2.dimension;
        report["warnings"] = diagnostics.warnings;
        int exit_code = 0;
        std::string err;
        if (certified) {
            report["verdict"] = "certified";
            report["certificate"] =
                certificate_json(std::get<framing::FramingCertificate>(outcome));
        } else {
            const auto& witness = std::get<framing::ObstructionWitness>(outcome);
            report["verdict"] = "obstructed";
            report["witness"] = {{"alpha", bits_to_json(witness.alpha)}, {"a_star_value", 1}};
            exit_code = 2;
        }

        if (options.oracle || request.run_oracle) {
            const auto oracle = framing::solvable_bruteforce(splitting, descriptor);
            const bool agreement = oracle.solvable == certified;
            report["oracle_agreement"] = agreement;
            if (!agreement) {
                exit_code = 3;
                err = "oracle disagreement: exhaustive search and certification differ\n";
            }
        }
        return {exit_code, render(report), err};
    } catch (const ParseError& e) {
        return invalid_result(digest, e.what());
    } catch (const std::invalid_argument& e) {
        return invalid_result(digest, e.what());
    }
}

CommandResult run_catalog_list() {
    json report;
    report["schema_version"] = wire_schema_version;
    report["tool_version"] = tool_version;
    report["catalog"] = heegaard::catalog_names();
    return {0, render(report), ""};
}

CommandResult run_catalog_get(const std::string& name) {
    const std::string digest = fnv1a64_digest(name);
    try {
        const auto splitting = heegaard::catalog(name);
        const json doc = manifold_to_json(document_from_splitting(splitting));
        return {0, render(doc), ""};
    } catch (const std::invalid_argument& e) {
        return invalid_result(digest, e.what());
    }
}

CommandResult run_represent(std::size_t genus, const std::string& class_bits) {
    const std::string canonical = "genus=" + std::to_string(genus) + ";class=" + class_bits;
    const std::string digest = fnv1a64_digest(canonical);
    try {
        const auto cls = vector_from_bit_string(class_bits, "class");
        if (cls.dim() != 2 * genus) {
            throw ParseError("class", "expected " + std::to_string(2 * genus) + " bits, got " +
                                          std::to_string(cls.dim()));
        }

        const auto multicurve = surface::represent_simple(genus, cls);
        if (!surface::verify_multicurve(multicurve) || multicurve.homology_class != cls) {
            const std::string message = "self-check failure: representative does not verify\n";
            return {4, "", message};
        }

        json report = report_skeleton(digest);
        report["genus"] = genus;
        report["class"] = bits_to_json(cls);
        json components = json::array();
        for (const auto& component : multicurve.components) {
            const char* kind = component.kind == surface::CurveKind::Mu       ? "mu"
                               : component.kind == surface::CurveKind::Lambda ? "lambda"
                                                                              : "desing";
            components.push_back({{"kind", kind}, {"index", component.index}});
        }
        report["components"] = components;
        json bands = json::array();
        for (const auto& [a, b] : multicurve.bands) bands.push_back({a, b});
        report["bands"] = bands;
        report["verified"] = true;
        if (multicurve.components.empty()) {
            report["note"] = "empty multicurve: the zero class is represented by nothing";
        }
        return {0, render(report), ""};
    } catch (const ParseError& e) {
        return invalid_result(digest, e.what());
    } catch (const std::invalid_argument& e) {
        return invalid_result(digest, e.what());
    }
}

CommandResult run_bundle_classify(const std::string& input_bytes) {
    const std::string digest = fnv1a64_digest(input_bytes);
    try {
        const auto doc = parse_bundle_text(input_bytes);
        const auto cocycle = bundles::make_cocycle(
            doc.n, vector_from_bits(doc.weights, "weights"), doc.sign != 0);
        const auto normal = bundles::normal_bundle_cocycle(doc.n, doc.sign != 0);

        json report = report_skeleton(digest);
        report["n"] = doc.n;
        report["weights"] = bits_to_json(cocycle.fiber_weights);
        report["sign"] = doc.sign;
        report["w1_class"] = bits_to_json(bundles::w1_class(cocycle));
        report["total_space_orientable"] = bundles::total_space_orientable(cocycle);
        report["isomorphic_to_normal_bundle"] = bundles::is_isomorphic(cocycle, normal);
        return {0, render(report), ""};
    } catch (const ParseError& e) {
        return invalid_result(digest, e.what());
    } catch (const std::invalid_argument& e) {
        return invalid_result(digest, e.what());
    }
}

} // namespace stiefel::cli
