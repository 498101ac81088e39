#pragma once

// Heegaard splittings at the mod-2 homology level. A splitting of genus g is
// stored as the pair of handlebody kernels inside H1 of the splitting
// surface, with K' normalized to span{mu_1,...,mu_g}; any splitting can be
// brought to this form by a basis change of the surface. K'' is the span of
// the g attaching-curve classes of the far handlebody.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stiefel/gf2.hpp"

namespace stiefel::heegaard {

struct HeegaardSplitting {
    std::size_t genus = 0;
    gf2::Gf2Subspace k_prime;
    gf2::Gf2Subspace k_second;
    std::string label;
};

gf2::Gf2Subspace standard_k_prime(std::size_t genus);

// Builds a splitting from the attaching-curve classes of the far handlebody.
// No validation happens here; run validate() to get diagnostics.
HeegaardSplitting make_splitting(std::size_t genus,
                                 std::vector<gf2::Gf2Vector> attaching_classes,
                                 std::string label = {});

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity;
    std::string message;
};

// Dimension failures are errors; a non-isotropic kernel only earns a
// warning, since the downstream computations never use the pairing.
std::vector<Diagnostic> validate(const HeegaardSplitting& s);
bool is_valid(const HeegaardSplitting& s);

struct H1Result {
    std::size_t dimension = 0;
    gf2::Gf2Matrix quotient; // quotient map by K' + K''
};

struct H2Result {
    std::size_t dimension = 0;
    gf2::Gf2Subspace basis; // K' ∩ K'', canonical echelon basis
};

H1Result h1_manifold(const HeegaardSplitting& s);
H2Result h2_manifold(const HeegaardSplitting& s);

// The basis chain underpinning the framing computation:
//   alphas: basis of K' ∩ K'' (k vectors)
//   betas:  complete alphas to a basis of K' (h = g - k vectors)
//   gammas: complete alphas to a basis of K'' (h vectors)
//   deltas: complete the union to a basis of the whole 2g-space (k vectors)
struct BasisChain {
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<gf2::Gf2Vector> alphas;
    std::vector<gf2::Gf2Vector> betas;
    std::vector<gf2::Gf2Vector> gammas;
    std::vector<gf2::Gf2Vector> deltas;
};

BasisChain basis_chain(const HeegaardSplitting& s);

struct InducedMaps {
    gf2::Gf2Matrix i_prime;  // g x 2g, kernel exactly K'
    gf2::Gf2Matrix i_second; // g x 2g, kernel exactly K''
};

InducedMaps induced_maps(const HeegaardSplitting& s);

// Block direct sum of kernels under basis concatenation.
HeegaardSplitting connected_sum(const HeegaardSplitting& a, const HeegaardSplitting& b);

// Named corpus: s3_g0, s3_g1, rp3, s1xs2, lens(p,q), sum_s1xs2(n),
// sum_rp3(n). Lens spaces use the mod-2 attaching class (q mod 2)*mu_1 +
// (p mod 2)*lambda_1 and reject p, q both even; sums need n >= 1.
HeegaardSplitting catalog(const std::string& name);

std::vector<std::string> catalog_names();

// Test-input generator: twists span{mu_i} by a random symplectic map, which
// always yields a valid g-dimensional isotropic kernel.
HeegaardSplitting random_splitting(std::size_t genus, std::uint64_t seed);

} // namespace stiefel::heegaard
