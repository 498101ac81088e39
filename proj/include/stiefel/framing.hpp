#pragma once

// Triviality certification for oriented rank-3 bundles over a Heegaard
// splitting. The bundle enters as the functional a_star on H1 of the
// splitting surface; the obstruction to triviality is the restriction of
// that functional to K' ∩ K''. When the restriction vanishes, correction
// functionals on H1 of the two handlebodies are constructed so that the
// total comparison functional b_star is identically zero, and the
// certificate records that evaluation on a full basis.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stiefel/gf2.hpp"
#include "stiefel/heegaard.hpp"

namespace stiefel::framing {

struct BundleDescriptor {
    gf2::Gf2Vector a_star; // dimension 2g; the functional is v -> a_star . v

    bool operator==(const BundleDescriptor&) const = default;
};

// Correction functionals on H1(M') and H1(M''), written in the coordinates
// induced by the canonical quotient maps of induced_maps().
struct CorrectionPair {
    gf2::Gf2Vector c_prime;  // dimension g
    gf2::Gf2Vector c_second; // dimension g

    bool operator==(const CorrectionPair&) const = default;
};

struct ObstructionWitness {
    gf2::Gf2Vector alpha; // lies in K' ∩ K'' and pairs to 1 with a_star

    bool operator==(const ObstructionWitness&) const = default;
};

class ObstructionNonzero : public std::runtime_error {
  public:
    explicit ObstructionNonzero(ObstructionWitness witness)
        : std::runtime_error("bundle descriptor does not vanish on the kernel "
                             "intersection: obstruction class is nonzero"),
          witness_(std::move(witness)) {}

    const ObstructionWitness& witness() const { return witness_; }

  private:
    ObstructionWitness witness_;
};

// Signals that the chain vectors failed to project to bases of the
// handlebody homologies. Unreachable for valid splittings; kept as a runtime
// check rather than an assumption.
class BasisDegenerate : public std::runtime_error {
  public:
    explicit BasisDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct TranscriptEntry {
    std::string role; // alpha, beta, gamma or delta
    gf2::Gf2Vector vector;
    bool value; // b_star evaluated on the vector

    bool operator==(const TranscriptEntry&) const = default;
};

struct FramingCertificate {
    heegaard::HeegaardSplitting splitting;
    BundleDescriptor descriptor;
    heegaard::BasisChain chain;
    CorrectionPair corrections;
    std::vector<TranscriptEntry> transcript; // all 2g chain vectors, all values 0
};

// Restriction of the descriptor to K' ∩ K'': entry j is a_star . alpha_j.
// The bundle is trivial iff this vanishes.
gf2::Gf2Vector w2_restriction(const heegaard::HeegaardSplitting& s, const BundleDescriptor& d);

// Solves the defining equations for the corrections:
//   c_prime  . i'(gamma_j) = a(gamma_j)    c_prime  . i'(delta_j) = a(delta_j)
//   c_second . i''(beta_j) = a(beta_j)     c_second . i''(delta_j) = 0
// Throws ObstructionNonzero when the restriction is nonzero and
// BasisDegenerate when either system is singular.
CorrectionPair construct_corrections(const heegaard::HeegaardSplitting& s,
                                     const BundleDescriptor& d);

// The comparison functional on the standard basis: entry t is
// c_second . i''(e_t) + a_star_t + c_prime . i'(e_t).
gf2::Gf2Vector b_star(const heegaard::HeegaardSplitting& s, const BundleDescriptor& d,
                      const CorrectionPair& c);

using CertifyResult = std::variant<FramingCertificate, ObstructionWitness>;

// Decides triviality: either a certificate whose transcript shows b_star
// vanishing on the whole basis chain, or a witness class with a_star value 1.
CertifyResult certify(const heegaard::HeegaardSplitting& s, const BundleDescriptor& d);

struct OracleResult {
    bool solvable = false;
    std::optional<CorrectionPair> witness_pair;

    bool operator==(const OracleResult&) const = default;
};

// Exhaustive cross-check: tries every correction pair in lexicographic order
// (c_prime outer, c_second inner, coordinate 0 least significant) and
// reports the first one that makes b_star vanish.
OracleResult solvable_bruteforce(const heegaard::HeegaardSplitting& s, const BundleDescriptor& d,
                                 std::size_t genus_bound = 8);

} // namespace stiefel::framing
