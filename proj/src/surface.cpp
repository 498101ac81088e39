#include "stiefel/surface.hpp"

#include <stdexcept>
#include <string>

namespace stiefel::surface {

namespace {

StandardCurve make_curve(CurveKind kind, std::size_t genus, std::size_t index) {
    if (index == 0 || index > genus) {
        throw std::out_of_range("curve index " + std::to_string(index) +
                                " out of range for genus " + std::to_string(genus));
    }
    return StandardCurve{kind, index, genus};
}

} // namespace

StandardCurve mu(std::size_t genus, std::size_t index) {
    return make_curve(CurveKind::Mu, genus, index);
}

StandardCurve lambda(std::size_t genus, std::size_t index) {
    return make_curve(CurveKind::Lambda, genus, index);
}

StandardCurve desing(std::size_t genus, std::size_t index) {
    return make_curve(CurveKind::Desing, genus, index);
}

gf2::Gf2Vector class_of(const StandardCurve& c) {
    if (c.index == 0 || c.index > c.genus) {
        throw std::out_of_range("curve index out of range for genus");
    }
    gf2::Gf2Vector v(2 * c.genus);
    const std::size_t mu_pos = 2 * (c.index - 1);
    switch (c.kind) {
    case CurveKind::Mu:
        v.set(mu_pos, true);
        break;
    case CurveKind::Lambda:
        v.set(mu_pos + 1, true);
        break;
    case CurveKind::Desing:
        v.set(mu_pos, true);
        v.set(mu_pos + 1, true);
        break;
    }
    return v;
}

std::size_t geometric_intersection(const StandardCurve& a, const StandardCurve& b) {
    if (a.genus != b.genus) {
        throw std::invalid_argument("curves live on surfaces of different genus");
    }
    if (a.index == 0 || a.index > a.genus || b.index == 0 || b.index > b.genus) {
        throw std::out_of_range("curve index out of range for genus");
    }
    if (a.index != b.index) {
        return 0;
    }
    // Same handle: distinct kinds meet once, same kinds are parallel.
    return a.kind == b.kind ? 0 : 1;
}

Multicurve represent_simple(std::size_t genus, const gf2::Gf2Vector& alpha) {
    if (alpha.dim() != 2 * genus) {
        throw std::invalid_argument("class dimension " + std::to_string(alpha.dim()) +
                                    " does not match genus " + std::to_string(genus));
    }
    Multicurve mc;
    mc.genus = genus;
    mc.homology_class = alpha;
    for (std::size_t i = 1; i <= genus; ++i) {
        const bool has_mu = alpha.get(2 * (i - 1));
        const bool has_lambda = alpha.get(2 * (i - 1) + 1);
        if (has_mu && has_lambda) {
            mc.components.push_back(desing(genus, i));
        } else if (has_mu) {
            mc.components.push_back(mu(genus, i));
        } else if (has_lambda) {
            mc.components.push_back(lambda(genus, i));
        }
    }
    for (std::size_t j = 1; j < mc.components.size(); ++j) {
        mc.bands.emplace_back(j - 1, j);
    }
    return mc;
}

bool verify_multicurve(const Multicurve& c) {
    const std::size_t n = c.components.size();
    for (const auto& comp : c.components) {
        if (comp.genus != c.genus || comp.index == 0 || comp.index > c.genus) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (geometric_intersection(c.components[i], c.components[j]) != 0) {
                return false;
            }
        }
    }

    // Tree check: n-1 distinct non-loop edges plus connectedness.
    if (n == 0) {
        if (!c.bands.empty()) {
            return false;
        }
    } else {
        if (c.bands.size() != n - 1) {
            return false;
        }
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) {
            parent[i] = i;
        }
        auto find = [&parent](std::size_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& [a, b] : c.bands) {
            if (a >= n || b >= n || a == b) {
                return false;
            }
            const std::size_t ra = find(a);
            const std::size_t rb = find(b);
            if (ra == rb) {
                return false; // cycle
            }
            parent[ra] = rb;
        }
    }

    if (c.homology_class.dim() != 2 * c.genus) {
        return false;
    }
    gf2::Gf2Vector total(2 * c.genus);
    for (const auto& comp : c.components) {
        total += class_of(comp);
    }
    return total == c.homology_class;
}

} // namespace stiefel::surface
