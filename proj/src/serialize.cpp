#include "stiefel/serialize.hpp"

#include <cstdio>

#include "stiefel/version.hpp"

namespace stiefel::cli {

using nlohmann::json;

std::string fnv1a64_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError(what, "not valid JSON");
    }
    return j;
}

const json& require_field(const json& j, const std::string& prefix, const std::string& name) {
    if (!j.is_object()) {
        throw ParseError(prefix.empty() ? "document" : prefix, "expected a JSON object");
    }
    const auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(prefix + name, "missing field");
    }
    return *it;
}

std::size_t parse_natural(const json& j, const std::string& field) {
    if (!j.is_number_unsigned()) {
        throw ParseError(field, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

void check_schema_version(const json& j, const std::string& prefix) {
    const auto& v = require_field(j, prefix, "schema_version");
    if (!v.is_string() || v.get<std::string>() != wire_schema_version) {
        throw ParseError(prefix + "schema_version",
                         std::string("expected \"") + wire_schema_version + "\"");
    }
}

} // namespace

std::vector<int> parse_bit_array(const json& j, const std::string& field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of 0/1 entries");
    }
    std::vector<int> bits;
    bits.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& entry = j[i];
        if (!entry.is_number_integer() ||
            (entry.get<int>() != 0 && entry.get<int>() != 1)) {
            throw ParseError(field + "[" + std::to_string(i) + "]", "entries must be 0 or 1");
        }
        bits.push_back(entry.get<int>());
    }
    return bits;
}

gf2::Gf2Vector vector_from_bits(const std::vector<int>& bits, const std::string& field) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw ParseError(field + "[" + std::to_string(i) + "]", "entries must be 0 or 1");
        }
    }
    return gf2::Gf2Vector::from_bits(bits);
}

gf2::Gf2Vector vector_from_bit_string(const std::string& bits, const std::string& field) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw ParseError(field, "expected a string of 0/1 characters");
        }
    }
    return gf2::Gf2Vector::from_string(bits);
}

ManifoldDocument parse_manifold(const json& j, const std::string& prefix) {
    check_schema_version(j, prefix);
    ManifoldDocument doc;
    doc.genus = parse_natural(require_field(j, prefix, "genus"), prefix + "genus");

    const auto& rows = require_field(j, prefix, "k_second_rows");
    const std::string rows_field = prefix + "k_second_rows";
    if (!rows.is_array()) {
        throw ParseError(rows_field, "expected an array of bit rows");
    }
    if (rows.size() != doc.genus) {
        throw ParseError(rows_field, "expected genus = " + std::to_string(doc.genus) +
                                         " rows, got " + std::to_string(rows.size()));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string row_field = rows_field + "[" + std::to_string(r) + "]";
        auto bits = parse_bit_array(rows[r], row_field);
        if (bits.size() != 2 * doc.genus) {
            throw ParseError(row_field, "expected " + std::to_string(2 * doc.genus) +
                                            " entries, got " + std::to_string(bits.size()));
        }
        doc.k_second_rows.push_back(std::move(bits));
    }

    if (const auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) {
            throw ParseError(prefix + "label", "expected a string");
        }
        doc.label = it->get<std::string>();
    }
    return doc;
}

ManifoldDocument parse_manifold_text(const std::string& text) {
    return parse_manifold(parse_text(text, "document"));
}

bool looks_like_request(const json& j) { return j.is_object() && j.contains("manifold"); }

CertifyRequest parse_certify_request(const json& j) {
    check_schema_version(j, "");
    CertifyRequest req;
    req.manifold = parse_manifold(require_field(j, "", "manifold"), "manifold.");

    const auto& a = require_field(j, "", "a_star");
    req.a_star = parse_bit_array(a, "a_star");
    if (req.a_star.size() != 2 * req.manifold.genus) {
        throw ParseError("a_star", "expected " + std::to_string(2 * req.manifold.genus) +
                                       " entries, got " + std::to_string(req.a_star.size()));
    }

    if (const auto it = j.find("run_oracle"); it != j.end()) {
        if (!it->is_boolean()) {
            throw ParseError("run_oracle", "expected a boolean");
        }
        req.run_oracle = it->get<bool>();
    }
    return req;
}

BundleDocument parse_bundle_text(const std::string& text) {
    const json j = parse_text(text, "document");
    BundleDocument doc;
    doc.n = parse_natural(require_field(j, "", "n"), "n");
    doc.weights = parse_bit_array(require_field(j, "", "weights"), "weights");
    if (doc.weights.size() != doc.n) {
        throw ParseError("weights", "expected n = " + std::to_string(doc.n) +
                                        " entries, got " + std::to_string(doc.weights.size()));
    }
    const auto& sign = require_field(j, "", "sign");
    if (!sign.is_number_integer() || (sign.get<int>() != 0 && sign.get<int>() != 1)) {
        throw ParseError("sign", "expected 0 or 1");
    }
    doc.sign = sign.get<int>();
    return doc;
}

json manifold_to_json(const ManifoldDocument& doc) {
    json j;
    j["schema_version"] = wire_schema_version;
    j["genus"] = doc.genus;
    j["k_second_rows"] = json::array();
    for (const auto& row : doc.k_second_rows) {
        j["k_second_rows"].push_back(row);
    }
    if (!doc.label.empty()) {
        j["label"] = doc.label;
    }
    return j;
}

ManifoldDocument document_from_splitting(const heegaard::HeegaardSplitting& s) {
    ManifoldDocument doc;
    doc.genus = s.genus;
    for (const auto& row : s.k_second.basis()) {
        doc.k_second_rows.push_back(row.to_bits());
    }
    doc.label = s.label;
    return doc;
}

heegaard::HeegaardSplitting splitting_from_document(const ManifoldDocument& doc) {
    std::vector<gf2::Gf2Vector> rows;
    rows.reserve(doc.k_second_rows.size());
    for (std::size_t r = 0; r < doc.k_second_rows.size(); ++r) {
        rows.push_back(vector_from_bits(doc.k_second_rows[r],
                                        "k_second_rows[" + std::to_string(r) + "]"));
    }
    return heegaard::make_splitting(doc.genus, std::move(rows), doc.label);
}

nlohmann::json bits_to_json(const gf2::Gf2Vector& v) { return json(v.to_bits()); }

} // namespace stiefel::cli
