#include "stiefel/heegaard.hpp"

#include <optional>
#include <stdexcept>

namespace stiefel::heegaard {

using gf2::Gf2Matrix;
using gf2::Gf2Subspace;
using gf2::Gf2Vector;

gf2::Gf2Subspace standard_k_prime(std::size_t genus) {
    std::vector<Gf2Vector> mus;
    mus.reserve(genus);
    for (std::size_t i = 0; i < genus; ++i) {
        mus.push_back(Gf2Vector::unit(2 * genus, 2 * i));
    }
    return Gf2Subspace::span(2 * genus, std::move(mus));
}

HeegaardSplitting make_splitting(std::size_t genus,
                                 std::vector<gf2::Gf2Vector> attaching_classes,
                                 std::string label) {
    HeegaardSplitting s;
    s.genus = genus;
    s.k_prime = standard_k_prime(genus);
    s.k_second = Gf2Subspace::span(2 * genus, std::move(attaching_classes));
    s.label = std::move(label);
    return s;
}

std::vector<Diagnostic> validate(const HeegaardSplitting& s) {
    std::vector<Diagnostic> out;
    const std::size_t n = 2 * s.genus;
    if (s.k_prime.ambient_dim() != n || s.k_second.ambient_dim() != n) {
        out.push_back({Severity::Error,
                       "kernel ambient dimension does not equal 2*genus = " + std::to_string(n)});
        return out;
    }
    if (s.k_prime != standard_k_prime(s.genus)) {
        out.push_back({Severity::Error, "k_prime is not the span of the mu generators"});
    }
    if (s.k_second.dim() != s.genus) {
        out.push_back({Severity::Error,
                       "k_second has dimension " + std::to_string(s.k_second.dim()) +
                           ", expected " + std::to_string(s.genus)});
    }
    const gf2::SymplecticSpace sp(s.genus);
    if (!gf2::is_isotropic(sp, s.k_prime)) {
        out.push_back({Severity::Warning, "k_prime is not isotropic for the intersection form"});
    }
    if (!gf2::is_isotropic(sp, s.k_second)) {
        out.push_back({Severity::Warning, "k_second is not isotropic for the intersection form"});
    }
    return out;
}

bool is_valid(const HeegaardSplitting& s) {
    for (const auto& d : validate(s)) {
        if (d.severity == Severity::Error) {
            return false;
        }
    }
    return true;
}

namespace {

void require_valid(const HeegaardSplitting& s) {
    for (const auto& d : validate(s)) {
        if (d.severity == Severity::Error) {
            throw std::invalid_argument("invalid splitting: " + d.message);
        }
    }
}

} // namespace

H1Result h1_manifold(const HeegaardSplitting& s) {
    require_valid(s);
    const auto sum = gf2::subspace_sum(s.k_prime, s.k_second);
    H1Result r;
    r.dimension = 2 * s.genus - sum.dim();
    r.quotient = gf2::quotient_map(2 * s.genus, sum);
    return r;
}

H2Result h2_manifold(const HeegaardSplitting& s) {
    require_valid(s);
    H2Result r;
    r.basis = gf2::subspace_intersection(s.k_prime, s.k_second);
    r.dimension = r.basis.dim();
    return r;
}

BasisChain basis_chain(const HeegaardSplitting& s) {
    require_valid(s);
    BasisChain chain;
    const auto meet = gf2::subspace_intersection(s.k_prime, s.k_second);
    chain.alphas = meet.basis();
    chain.k = meet.dim();
    chain.h = s.genus - chain.k;
    chain.betas = gf2::extend_basis(meet, s.k_prime);
    chain.gammas = gf2::extend_basis(meet, s.k_second);
    const auto sum = gf2::subspace_sum(s.k_prime, s.k_second);
    chain.deltas = gf2::extend_basis(sum, Gf2Subspace::full(2 * s.genus));
    return chain;
}

InducedMaps induced_maps(const HeegaardSplitting& s) {
    require_valid(s);
    return InducedMaps{gf2::quotient_map(2 * s.genus, s.k_prime),
                       gf2::quotient_map(2 * s.genus, s.k_second)};
}

HeegaardSplitting connected_sum(const HeegaardSplitting& a, const HeegaardSplitting& b) {
    require_valid(a);
    require_valid(b);
    const std::size_t genus = a.genus + b.genus;
    std::vector<Gf2Vector> gens;
    gens.reserve(genus);
    for (const auto& v : a.k_second.basis()) {
        Gf2Vector w(2 * genus);
        for (std::size_t i = 0; i < 2 * a.genus; ++i) {
            w.set(i, v.get(i));
        }
        gens.push_back(std::move(w));
    }
    for (const auto& v : b.k_second.basis()) {
        Gf2Vector w(2 * genus);
        for (std::size_t i = 0; i < 2 * b.genus; ++i) {
            w.set(2 * a.genus + i, v.get(i));
        }
        gens.push_back(std::move(w));
    }
    return make_splitting(genus, std::move(gens), a.label + " # " + b.label);
}

namespace {

// Strict integer parse: the whole token must be consumed.
std::optional<long long> parse_int(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) {
            return std::nullopt;
        }
        return value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Splits "name(args)" into its pieces; nullopt when text is not of that shape.
struct CallForm {
    std::string name;
    std::vector<std::string> args;
};

std::optional<CallForm> parse_call(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') {
        return std::nullopt;
    }
    CallForm form;
    form.name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t start = 0;
    while (true) {
        const auto comma = inner.find(',', start);
        if (comma == std::string::npos) {
            form.args.push_back(inner.substr(start));
            break;
        }
        form.args.push_back(inner.substr(start, comma - start));
        start = comma + 1;
    }
    return form;
}

HeegaardSplitting lens_space(long long p, long long q) {
    const bool p_odd = p % 2 != 0;
    const bool q_odd = q % 2 != 0;
    if (!p_odd && !q_odd) {
        throw std::invalid_argument("lens parameters (" + std::to_string(p) + "," +
                                    std::to_string(q) +
                                    ") are both even: degenerate mod-2 attaching class");
    }
    Gf2Vector attach(2);
    attach.set(0, q_odd);
    attach.set(1, p_odd);
    return make_splitting(1, {attach},
                          "lens(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

HeegaardSplitting iterated_sum(const HeegaardSplitting& piece, long long n,
                               const std::string& label) {
    if (n < 1) {
        throw std::invalid_argument("connected-sum count must be at least 1, got " +
                                    std::to_string(n));
    }
    HeegaardSplitting acc = piece;
    for (long long i = 1; i < n; ++i) {
        acc = connected_sum(acc, piece);
    }
    acc.label = label;
    return acc;
}

} // namespace

HeegaardSplitting catalog(const std::string& name) {
    if (name == "s3_g0") {
        return make_splitting(0, {}, "s3_g0");
    }
    if (name == "s3_g1") {
        return make_splitting(1, {Gf2Vector::from_bits({0, 1})}, "s3_g1");
    }
    if (name == "rp3") {
        auto s = lens_space(2, 1);
        s.label = "rp3";
        return s;
    }
    if (name == "s1xs2") {
        return make_splitting(1, {Gf2Vector::from_bits({1, 0})}, "s1xs2");
    }
    if (const auto call = parse_call(name)) {
        if (call->name == "lens" && call->args.size() == 2) {
            const auto p = parse_int(call->args[0]);
            const auto q = parse_int(call->args[1]);
            if (p && q) {
                return lens_space(*p, *q);
            }
        } else if ((call->name == "sum_s1xs2" || call->name == "sum_rp3") &&
                   call->args.size() == 1) {
            if (const auto n = parse_int(call->args[0])) {
                const auto piece = catalog(call->name == "sum_s1xs2" ? "s1xs2" : "rp3");
                return iterated_sum(piece, *n, name);
            }
        }
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
    return {"s3_g0", "s3_g1", "rp3", "s1xs2", "lens(p,q)", "sum_s1xs2(n)", "sum_rp3(n)"};
}

HeegaardSplitting random_splitting(std::size_t genus, std::uint64_t seed) {
    const gf2::SymplecticSpace sp(genus);
    const auto t = gf2::random_symplectic(sp, seed);
    std::vector<Gf2Vector> gens;
    gens.reserve(genus);
    for (std::size_t i = 0; i < genus; ++i) {
        gens.push_back(t.apply(Gf2Vector::unit(2 * genus, 2 * i)));
    }
    return make_splitting(genus, std::move(gens),
                          "random(g=" + std::to_string(genus) +
                              ",seed=" + std::to_string(seed) + ")");
}

} // namespace stiefel::heegaard
