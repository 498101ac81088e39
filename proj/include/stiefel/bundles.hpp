#pragma once

// Line bundles over the connected sum of n projective planes, presented by
// the handle decomposition with one 0-handle, n half-twisted 1-handles, and
// one 2-handle. A bundle is a cocycle: a gluing sign over each 1-handle
// cocore plus the sign used over the 2-handle. Classification is by the
// cellular first Stiefel-Whitney class, which in this model is just the
// weight vector over the 1-handles.

#include <cstddef>
#include <vector>

#include "stiefel/gf2.hpp"

namespace stiefel::bundles {

struct SurfaceHandleDecomposition {
    std::size_t cross_caps = 0;           // n >= 1
    std::vector<bool> half_twisted;       // one flag per 1-handle, always true here

    bool operator==(const SurfaceHandleDecomposition&) const = default;
};

// The decomposition of the n-fold cross-cap sum; n = 0 (orientable case) is
// rejected since its normal bundle is trivial and needs no cocycle.
SurfaceHandleDecomposition cross_cap_decomposition(std::size_t n);

struct LineBundleCocycle {
    SurfaceHandleDecomposition decomposition;
    gf2::Gf2Vector fiber_weights; // n bits, 1 meaning the fiber glues by -1
    bool two_handle_sign = false;

    bool operator==(const LineBundleCocycle&) const = default;
};

LineBundleCocycle make_cocycle(std::size_t n, gf2::Gf2Vector fiber_weights,
                               bool two_handle_sign);

// Twist flags of the base: all-ones, one per half-twisted 1-handle.
gf2::Gf2Vector base_twist_weights(const SurfaceHandleDecomposition& d);

// The total space is orientable exactly when the fiber twist cancels the
// base twist over every 1-handle.
bool total_space_orientable(const LineBundleCocycle& b);

// The cocycle of the normal bundle of the cross-cap sum inside the ambient
// 3-manifold: fiber weights all-ones, with a free choice of 2-handle sign.
LineBundleCocycle normal_bundle_cocycle(std::size_t n, bool sign);

// Cellular first Stiefel-Whitney class. With a single 0-cell there are no
// coboundaries on 1-cells, and the 2-handle sign drops out because the
// attaching word runs through each 1-handle twice.
gf2::Gf2Vector w1_class(const LineBundleCocycle& b);

bool is_isomorphic(const LineBundleCocycle& b1, const LineBundleCocycle& b2);

} // namespace stiefel::bundles
