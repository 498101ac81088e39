#pragma once

// Standard curves on the closed orientable genus-g surface and simple
// representatives of mod-2 homology classes. Curves are tracked at the level
// of the standard model's intersection table: mu_i and lambda_i meet once,
// everything on distinct handles is disjoint, and desing_i stands for the
// simple curve obtained by resolving the single crossing of mu_i and
// lambda_i.

#include <cstddef>
#include <utility>
#include <vector>

#include "stiefel/gf2.hpp"

namespace stiefel::surface {

enum class CurveKind { Mu, Lambda, Desing };

struct StandardCurve {
    CurveKind kind;
    std::size_t index; // 1-based handle index
    std::size_t genus;

    bool operator==(const StandardCurve&) const = default;
};

StandardCurve mu(std::size_t genus, std::size_t index);
StandardCurve lambda(std::size_t genus, std::size_t index);
StandardCurve desing(std::size_t genus, std::size_t index);

// A disjoint union of standard curves joined by embedded bands into one
// connected curve. Bands are combinatorial: unordered pairs of component
// indices that must form a tree. The empty multicurve represents the zero
// class (a circle bounding a disk).
struct Multicurve {
    std::size_t genus = 0;
    std::vector<StandardCurve> components;
    std::vector<std::pair<std::size_t, std::size_t>> bands;
    gf2::Gf2Vector homology_class;

    bool operator==(const Multicurve&) const = default;
};

gf2::Gf2Vector class_of(const StandardCurve& c);

// Intersection count in the standard model. Same-handle curves of different
// kinds meet once; same-kind curves are counted as parallel pushoffs.
std::size_t geometric_intersection(const StandardCurve& a, const StandardCurve& b);

// Builds a connected simple representative of alpha: one curve per handle
// that alpha touches (desing where both generators appear), banded together
// along increasing handle index.
Multicurve represent_simple(std::size_t genus, const gf2::Gf2Vector& alpha);

// Checks the Multicurve invariants from scratch: pairwise disjoint
// components, bands forming a tree, and the recorded class matching the
// component sum. Malformed data is simply not a multicurve, never an error.
bool verify_multicurve(const Multicurve& c);

} // namespace stiefel::surface
