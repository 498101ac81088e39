#include "stiefel/framing.hpp"

#include <bit>
#include <cstdint>

namespace stiefel::framing {

using gf2::Gf2Matrix;
using gf2::Gf2Vector;
using heegaard::BasisChain;
using heegaard::HeegaardSplitting;
using heegaard::InducedMaps;

namespace {

void check_descriptor(const HeegaardSplitting& s, const BundleDescriptor& d) {
    if (d.a_star.dim() != 2 * s.genus) {
        throw std::invalid_argument("descriptor dimension " + std::to_string(d.a_star.dim()) +
                                    " does not match 2*genus = " +
                                    std::to_string(2 * s.genus));
    }
}

// Finds c with c . rows[j] = values[j] for all j; the rows must be a basis.
Gf2Vector solve_functional(const std::vector<Gf2Vector>& rows, const Gf2Vector& values,
                           std::size_t g, const char* which) {
    const auto m = Gf2Matrix::from_rows(g, rows);
    if (gf2::rank(m) != g) {
        throw BasisDegenerate(std::string("chain images do not form a basis of ") + which +
                              " homology; splitting data is inconsistent");
    }
    const auto c = gf2::solve(m, values);
    // rank g over g unknowns: the system is uniquely solvable.
    return *c;
}

} // namespace

Gf2Vector w2_restriction(const HeegaardSplitting& s, const BundleDescriptor& d) {
    check_descriptor(s, d);
    const auto chain = heegaard::basis_chain(s);
    Gf2Vector bits(chain.k);
    for (std::size_t j = 0; j < chain.k; ++j) {
        bits.set(j, d.a_star.dot(chain.alphas[j]));
    }
    return bits;
}

CorrectionPair construct_corrections(const HeegaardSplitting& s, const BundleDescriptor& d) {
    check_descriptor(s, d);
    const auto chain = heegaard::basis_chain(s);
    const auto maps = heegaard::induced_maps(s);
    const std::size_t g = s.genus;

    for (const auto& alpha : chain.alphas) {
        if (d.a_star.dot(alpha)) {
            throw ObstructionNonzero(ObstructionWitness{alpha});
        }
    }

    // c_prime sees the images of the gammas and deltas in H1(M');
    // c_second sees the images of the betas and deltas in H1(M'').
    std::vector<Gf2Vector> prime_rows;
    Gf2Vector prime_values(g);
    prime_rows.reserve(g);
    for (const auto& gamma : chain.gammas) {
        prime_values.set(prime_rows.size(), d.a_star.dot(gamma));
        prime_rows.push_back(maps.i_prime.apply(gamma));
    }
    for (const auto& delta : chain.deltas) {
        prime_values.set(prime_rows.size(), d.a_star.dot(delta));
        prime_rows.push_back(maps.i_prime.apply(delta));
    }

    std::vector<Gf2Vector> second_rows;
    Gf2Vector second_values(g);
    second_rows.reserve(g);
    for (const auto& beta : chain.betas) {
        second_values.set(second_rows.size(), d.a_star.dot(beta));
        second_rows.push_back(maps.i_second.apply(beta));
    }
    for (const auto& delta : chain.deltas) {
        // Value 0 on the delta images by construction.
        second_rows.push_back(maps.i_second.apply(delta));
    }

    return CorrectionPair{solve_functional(prime_rows, prime_values, g, "near-handlebody"),
                          solve_functional(second_rows, second_values, g, "far-handlebody")};
}

Gf2Vector b_star(const HeegaardSplitting& s, const BundleDescriptor& d,
                 const CorrectionPair& c) {
    check_descriptor(s, d);
    if (c.c_prime.dim() != s.genus || c.c_second.dim() != s.genus) {
        throw std::invalid_argument("correction dimensions do not match genus");
    }
    const auto maps = heegaard::induced_maps(s);
    const std::size_t n = 2 * s.genus;
    Gf2Vector out(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto e = Gf2Vector::unit(n, t);
        const bool value = c.c_second.dot(maps.i_second.apply(e)) ^ d.a_star.get(t) ^
                           c.c_prime.dot(maps.i_prime.apply(e));
        out.set(t, value);
    }
    return out;
}

CertifyResult certify(const HeegaardSplitting& s, const BundleDescriptor& d) {
    check_descriptor(s, d);
    CorrectionPair corrections;
    try {
        corrections = construct_corrections(s, d);
    } catch (const ObstructionNonzero& obstruction) {
        return obstruction.witness();
    }

    const auto chain = heegaard::basis_chain(s);
    const auto maps = heegaard::induced_maps(s);
    const auto evaluate = [&](const Gf2Vector& v) -> bool {
        return corrections.c_second.dot(maps.i_second.apply(v)) ^ d.a_star.dot(v) ^
               corrections.c_prime.dot(maps.i_prime.apply(v));
    };

    FramingCertificate cert;
    cert.splitting = s;
    cert.descriptor = d;
    cert.chain = chain;
    cert.corrections = corrections;
    const auto record = [&](const char* role, const std::vector<Gf2Vector>& vectors) {
        for (const auto& v : vectors) {
            cert.transcript.push_back({role, v, evaluate(v)});
        }
    };
    record("alpha", chain.alphas);
    record("beta", chain.betas);
    record("gamma", chain.gammas);
    record("delta", chain.deltas);

    for (const auto& entry : cert.transcript) {
        if (entry.value) {
            throw std::logic_error("constructed corrections failed to cancel the descriptor "
                                   "on the basis chain");
        }
    }
    return cert;
}

OracleResult solvable_bruteforce(const HeegaardSplitting& s, const BundleDescriptor& d,
                                 std::size_t genus_bound) {
    check_descriptor(s, d);
    const std::size_t g = s.genus;
    if (g > genus_bound) {
        throw std::invalid_argument("genus " + std::to_string(g) +
                                    " exceeds the exhaustive-search bound " +
                                    std::to_string(genus_bound));
    }
    const auto maps = heegaard::induced_maps(s);
    const std::size_t n = 2 * g;

    // Images of the standard basis vectors, packed g bits to a word.
    std::vector<std::uint64_t> prime_image(n, 0);
    std::vector<std::uint64_t> second_image(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        const auto e = Gf2Vector::unit(n, t);
        const auto p = maps.i_prime.apply(e);
        const auto q = maps.i_second.apply(e);
        for (std::size_t j = 0; j < g; ++j) {
            prime_image[t] |= static_cast<std::uint64_t>(p.get(j)) << j;
            second_image[t] |= static_cast<std::uint64_t>(q.get(j)) << j;
        }
    }

    const auto parity = [](std::uint64_t x) { return std::popcount(x) & 1u; };
    const std::uint64_t limit = std::uint64_t{1} << g;
    for (std::uint64_t c1 = 0; c1 < limit; ++c1) {
        for (std::uint64_t c2 = 0; c2 < limit; ++c2) {
            bool vanishes = true;
            for (std::size_t t = 0; t < n; ++t) {
                const unsigned bit = parity(c2 & second_image[t]) ^
                                     static_cast<unsigned>(d.a_star.get(t)) ^
                                     parity(c1 & prime_image[t]);
                if (bit != 0) {
                    vanishes = false;
                    break;
                }
            }
            if (vanishes) {
                CorrectionPair pair{Gf2Vector(g), Gf2Vector(g)};
                for (std::size_t j = 0; j < g; ++j) {
                    pair.c_prime.set(j, (c1 >> j) & 1);
                    pair.c_second.set(j, (c2 >> j) & 1);
                }
                return OracleResult{true, std::move(pair)};
            }
        }
    }
    return OracleResult{false, std::nullopt};
}

} // namespace stiefel::framing
