#pragma once

// Wire format of the tool: UTF-8 JSON, schema_version "1". Bit vectors
// serialize as arrays of 0/1 integers in the fixed coordinate order
// (mu_1, lambda_1, ..., mu_g, lambda_g). Parse failures carry the name of
// the offending field, down to the index ("k_second_rows[0][3]").

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stiefel/bundles.hpp"
#include "stiefel/gf2.hpp"
#include "stiefel/heegaard.hpp"

namespace stiefel::cli {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string field, const std::string& detail)
        : std::runtime_error(field + ": " + detail), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

struct ManifoldDocument {
    std::size_t genus = 0;
    std::vector<std::vector<int>> k_second_rows;
    std::string label;
};

struct CertifyRequest {
    ManifoldDocument manifold;
    std::vector<int> a_star;
    bool run_oracle = false;
};

struct BundleDocument {
    std::size_t n = 0;
    std::vector<int> weights;
    int sign = 0;
};

// "fnv1a64:" followed by the 16-digit hex FNV-1a hash of the bytes.
std::string fnv1a64_digest(std::string_view bytes);

ManifoldDocument parse_manifold(const nlohmann::json& j, const std::string& prefix = "");
ManifoldDocument parse_manifold_text(const std::string& text);

// A certify input is either a request object (with a "manifold" key) or a
// bare manifold document plus an a_star supplied out of band.
bool looks_like_request(const nlohmann::json& j);
CertifyRequest parse_certify_request(const nlohmann::json& j);

BundleDocument parse_bundle_text(const std::string& text);

nlohmann::json manifold_to_json(const ManifoldDocument& doc);
ManifoldDocument document_from_splitting(const heegaard::HeegaardSplitting& s);
heegaard::HeegaardSplitting splitting_from_document(const ManifoldDocument& doc);

// Bit-array helpers shared by every command.
gf2::Gf2Vector vector_from_bits(const std::vector<int>& bits, const std::string& field);
std::vector<int> parse_bit_array(const nlohmann::json& j, const std::string& field);
nlohmann::json bits_to_json(const gf2::Gf2Vector& v);

// Parses a command-line bit string such as "0110".
gf2::Gf2Vector vector_from_bit_string(const std::string& bits, const std::string& field);

} // namespace stiefel::cli
