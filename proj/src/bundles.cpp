#include "stiefel/bundles.hpp"

#include <stdexcept>
#include <string>

namespace stiefel::bundles {

using gf2::Gf2Vector;

SurfaceHandleDecomposition cross_cap_decomposition(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument(
            "cross-cap count must be at least 1; the orientable case has a "
            "trivial normal bundle and no cocycle to classify");
    }
    return SurfaceHandleDecomposition{n, std::vector<bool>(n, true)};
}

LineBundleCocycle make_cocycle(std::size_t n, Gf2Vector fiber_weights, bool two_handle_sign) {
    if (fiber_weights.dim() != n) {
        throw std::invalid_argument("fiber weight count " +
                                    std::to_string(fiber_weights.dim()) +
                                    " does not match cross-cap count " + std::to_string(n));
    }
    return LineBundleCocycle{cross_cap_decomposition(n), std::move(fiber_weights),
                             two_handle_sign};
}

Gf2Vector base_twist_weights(const SurfaceHandleDecomposition& d) {
    Gf2Vector w(d.cross_caps);
    for (std::size_t i = 0; i < d.cross_caps; ++i) {
        w.set(i, d.half_twisted[i]);
    }
    return w;
}

bool total_space_orientable(const LineBundleCocycle& b) {
    return b.fiber_weights == base_twist_weights(b.decomposition);
}

LineBundleCocycle normal_bundle_cocycle(std::size_t n, bool sign) {
    auto d = cross_cap_decomposition(n);
    Gf2Vector weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        weights.set(i, true);
    }
    return LineBundleCocycle{std::move(d), std::move(weights), sign};
}

Gf2Vector w1_class(const LineBundleCocycle& b) { return b.fiber_weights; }

bool is_isomorphic(const LineBundleCocycle& b1, const LineBundleCocycle& b2) {
    if (b1.decomposition.cross_caps != b2.decomposition.cross_caps) {
        throw std::invalid_argument("cocycles live over different cross-cap sums");
    }
    return w1_class(b1) == w1_class(b2);
}

} // namespace stiefel::bundles
