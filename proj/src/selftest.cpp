#include "stiefel/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "stiefel/bundles.hpp"
#include "stiefel/framing.hpp"
#include "stiefel/gf2.hpp"
#include "stiefel/heegaard.hpp"
#include "stiefel/quatframe.hpp"
#include "stiefel/surface.hpp"

namespace stiefel::selftest {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_tol(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string fmt_vec4(const quatframe::Vec4& v) {
    return "(" + fmt_double(v[0]) + ", " + fmt_double(v[1]) + ", " + fmt_double(v[2]) + ", " +
           fmt_double(v[3]) + ")";
}

gf2::Gf2Vector vector_from_mask(std::size_t dim, std::uint64_t mask) {
    gf2::Gf2Vector v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if ((mask >> j) & 1u) v.set(j, true);
    }
    return v;
}

SuiteResult s3_frames(const Options& options) {
    const std::size_t samples = options.samples.value_or(1000);
    std::ostringstream text;
    text << "suite s3-frames\n";
    text << "seed=" << options.seed << " samples=" << samples << " tol=" << fmt_tol(options.tol)
         << "\n";
    text << "checks: frame diagnostics, antipodal equivariance, orthonormalization fixed point\n";

    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = quatframe::random_unit_point(rng);
        const auto diag = quatframe::check_frame(x, options.tol);
        if (!diag.pass(options.tol)) {
            text << "result: FAIL\n";
            text << "failing case: sample " << i << " at x=" << fmt_vec4(x) << "\n";
            text << "  norm_error=" << fmt_double(diag.norm_error)
                 << " orthonormality_error=" << fmt_double(diag.orthonormality_error)
                 << " tangency_error=" << fmt_double(diag.tangency_error)
                 << " orientation_det=" << fmt_double(diag.orientation_det) << "\n";
            return {false, text.str()};
        }
        if (!quatframe::antipodal_check(x, options.tol)) {
            text << "result: FAIL\n";
            text << "failing case: sample " << i << " at x=" << fmt_vec4(x)
                 << " breaks antipodal equivariance\n";
            return {false, text.str()};
        }

        const auto frame = quatframe::frame_at(x);
        const auto fixed = quatframe::gram_schmidt(frame.u1, frame.u2, frame.u3);
        const auto drift_of = [](const quatframe::Vec4& a, const quatframe::Vec4& b) {
            double m = 0.0;
            for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::abs(a[c] - b[c]));
            return m;
        };
        const double drift = std::max({drift_of(frame.u1, fixed.u1), drift_of(frame.u2, fixed.u2),
                                       drift_of(frame.u3, fixed.u3)});
        if (!(drift <= options.tol)) {
            text << "result: FAIL\n";
            text << "failing case: sample " << i << " at x=" << fmt_vec4(x)
                 << " moves under orthonormalization, drift=" << fmt_double(drift) << "\n";
            return {false, text.str()};
        }
    }

    text << "checked " << samples << " random unit points\n";
    text << "result: PASS\n";
    return {true, text.str()};
}

SuiteResult oracle_equivalence(const Options& options) {
    const std::size_t splittings_per_genus = options.samples.value_or(200);
    constexpr std::size_t max_genus = 4;
    constexpr std::size_t random_descriptors = 100;

    std::ostringstream text;
    text << "suite oracle-equivalence\n";
    text << "seed=" << options.seed << " samples=" << splittings_per_genus
         << " (splittings per genus, genus 0.." << max_genus << ")\n";
    text << "checks: certificate construction == exhaustive search == restricted-class test\n";

    std::mt19937_64 rng(options.seed);
    std::size_t total_checks = 0;
    for (std::size_t g = 0; g <= max_genus; ++g) {
        const std::size_t dim = 2 * g;
        for (std::size_t t = 0; t < splittings_per_genus; ++t) {
            const std::uint64_t splitting_seed = rng();
            const auto s = heegaard::random_splitting(g, splitting_seed);

            std::vector<std::uint64_t> masks;
            if (g <= 2) {
                for (std::uint64_t m = 0; m < (std::uint64_t{1} << dim); ++m) masks.push_back(m);
            } else {
                const std::uint64_t cap = (std::uint64_t{1} << dim) - 1;
                for (std::size_t r = 0; r < random_descriptors; ++r) masks.push_back(rng() & cap);
            }

            for (const std::uint64_t mask : masks) {
                const framing::BundleDescriptor d{vector_from_mask(dim, mask)};
                const bool certified =
                    std::holds_alternative<framing::FramingCertificate>(framing::certify(s, d));
                const bool oracle = framing::solvable_bruteforce(s, d).solvable;
                const bool unobstructed = framing::w2_restriction(s, d).is_zero();
                ++total_checks;
                if (certified != oracle || oracle != unobstructed) {
                    text << "result: FAIL\n";
                    text << "failing case:\n";
                    text << "  genus=" << g << " splitting_seed=" << splitting_seed << "\n";
                    const auto rows = s.k_second.basis();
                    for (std::size_t r = 0; r < rows.size(); ++r) {
                        text << "  k_second[" << r << "]=" << rows[r].to_string() << "\n";
                    }
                    text << "  a_star=" << d.a_star.to_string() << "\n";
                    text << "  certify=" << (certified ? "certified" : "obstructed")
                         << " oracle=" << (oracle ? "solvable" : "unsolvable")
                         << " w2_zero=" << (unobstructed ? "true" : "false") << "\n";
                    return {false, text.str()};
                }
            }
        }
    }

    text << "checked " << total_checks << " (splitting, descriptor) pairs\n";
    text << "result: PASS\n";
    return {true, text.str()};
}

SuiteResult curves(const Options&) {
    constexpr std::size_t max_genus = 3;
    std::ostringstream text;
    text << "suite curves\n";
    text << "exhaustive sweep, genus 0.." << max_genus << "\n";
    text << "checks: representative is a valid multicurve and reproduces its class\n";

    std::size_t total = 0;
    for (std::size_t g = 0; g <= max_genus; ++g) {
        const std::size_t dim = 2 * g;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
            const auto cls = vector_from_mask(dim, mask);
            const auto multicurve = surface::represent_simple(g, cls);
            ++total;
            if (!surface::verify_multicurve(multicurve) || multicurve.homology_class != cls) {
                text << "result: FAIL\n";
                text << "failing case: genus=" << g << " class=" << cls.to_string() << "\n";
                return {false, text.str()};
            }
        }
    }

    text << "checked " << total << " classes\n";
    text << "result: PASS\n";
    return {true, text.str()};
}

SuiteResult bundles_suite(const Options& options) {
    const std::size_t samples = options.samples.value_or(1000);
    constexpr std::size_t max_cross_caps = 8;

    std::ostringstream text;
    text << "suite bundles\n";
    text << "seed=" << options.seed << " samples=" << samples << " (random triples)\n";
    text << "checks: normal cocycles orientable, sign-flip invariance, classification is an "
            "equivalence relation\n";

    for (std::size_t n = 1; n <= max_cross_caps; ++n) {
        for (const bool sign : {false, true}) {
            const auto normal = bundles::normal_bundle_cocycle(n, sign);
            if (!bundles::total_space_orientable(normal)) {
                text << "result: FAIL\n";
                text << "failing case: normal cocycle n=" << n << " sign=" << (sign ? 1 : 0)
                     << " not orientable\n";
                return {false, text.str()};
            }
        }
    }

    std::size_t flip_cases = 0;
    for (std::size_t n = 1; n <= max_cross_caps; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto weights = vector_from_mask(n, mask);
            const auto plus = bundles::make_cocycle(n, weights, false);
            const auto minus = bundles::make_cocycle(n, weights, true);
            ++flip_cases;
            if (bundles::w1_class(plus) != bundles::w1_class(minus)) {
                text << "result: FAIL\n";
                text << "failing case: n=" << n << " weights=" << weights.to_string()
                     << " w1 depends on the 2-handle sign\n";
                return {false, text.str()};
            }
        }
    }

    std::mt19937_64 rng(options.seed);
    auto random_cocycle = [&rng](std::size_t n) {
        const std::uint64_t cap = (std::uint64_t{1} << n) - 1;
        return bundles::make_cocycle(n, vector_from_mask(n, rng() & cap), (rng() & 1u) != 0);
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_cross_caps);
        const auto b1 = random_cocycle(n);
        const auto b2 = random_cocycle(n);
        const auto b3 = random_cocycle(n);
        const bool iso12 = bundles::is_isomorphic(b1, b2);
        const bool iso23 = bundles::is_isomorphic(b2, b3);
        const bool iso13 = bundles::is_isomorphic(b1, b3);
        const bool reflexive = bundles::is_isomorphic(b1, b1) && bundles::is_isomorphic(b2, b2);
        const bool symmetric = iso12 == bundles::is_isomorphic(b2, b1);
        const bool transitive = !(iso12 && iso23) || iso13;
        const bool matches_w1 = iso12 == (bundles::w1_class(b1) == bundles::w1_class(b2));
        if (!reflexive || !symmetric || !transitive || !matches_w1) {
            text << "result: FAIL\n";
            text << "failing case: triple " << i << " n=" << n << " weights=("
                 << b1.fiber_weights.to_string() << ", " << b2.fiber_weights.to_string() << ", "
                 << b3.fiber_weights.to_string() << ")\n";
            return {false, text.str()};
        }
    }

    text << "checked " << flip_cases << " sign-flip cases and " << samples << " random triples\n";
    text << "result: PASS\n";
    return {true, text.str()};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"s3-frames", "oracle-equivalence", "curves", "bundles"};
}

SuiteResult run_suite(const std::string& name, const Options& options) {
    if (name == "s3-frames") return s3_frames(options);
    if (name == "oracle-equivalence") return oracle_equivalence(options);
    if (name == "curves") return curves(options);
    if (name == "bundles") return bundles_suite(options);
    throw std::invalid_argument("unknown selftest suite: " + name);
}

} // namespace stiefel::selftest
