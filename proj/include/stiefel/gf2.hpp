#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Exact linear algebra over the two-element field. Vectors and matrix rows
// are bit-packed into 64-bit words so that row operations and dot products
// are word-parallel; subspaces are kept in reduced row-echelon form, which
// is a canonical representative of the row space and makes equality and
// downstream constructions deterministic.

namespace stiefel::gf2 {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t dim);

    static Gf2Vector from_bits(const std::vector<int>& bits);
    static Gf2Vector from_bits(std::initializer_list<int> bits);
    static Gf2Vector from_string(std::string_view bits); // e.g. "0101"
    static Gf2Vector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    bool is_zero() const;
    std::size_t weight() const;
    std::optional<std::size_t> leading_index() const;

    Gf2Vector& operator+=(const Gf2Vector& rhs);
    friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) {
        lhs += rhs;
        return lhs;
    }

    bool dot(const Gf2Vector& rhs) const;

    bool operator==(const Gf2Vector&) const = default;

    std::vector<int> to_bits() const;
    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;

    void check_index(std::size_t i) const;
};

class Gf2Subspace;

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    // cols is explicit so that 0-row matrices keep their column count.
    static Gf2Matrix from_rows(std::size_t cols, std::vector<Gf2Vector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    const Gf2Vector& row(std::size_t r) const;

    Gf2Vector apply(const Gf2Vector& v) const;
    Gf2Matrix multiply(const Gf2Matrix& rhs) const;
    Gf2Matrix transposed() const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<Gf2Vector> rows_;
};

// A linear subspace of Z_2^n, stored as a reduced row-echelon basis with
// strictly increasing pivot indices. Two subspaces are equal as values
// exactly when they are equal as sets of vectors.
class Gf2Subspace {
public:
    Gf2Subspace() = default;
    explicit Gf2Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Gf2Subspace span(std::size_t ambient_dim, std::vector<Gf2Vector> vectors);
    static Gf2Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }

    bool contains(const Gf2Vector& v) const;
    bool contains_subspace(const Gf2Subspace& other) const;

    bool operator==(const Gf2Subspace&) const = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Gf2Vector> basis_;
};

std::size_t rank(const Gf2Matrix& m);

// Basis of {v : m v = 0}; dim = cols - rank.
Gf2Subspace kernel_basis(const Gf2Matrix& m);

Gf2Subspace subspace_intersection(const Gf2Subspace& a, const Gf2Subspace& b);
Gf2Subspace subspace_sum(const Gf2Subspace& a, const Gf2Subspace& b);

/// Completes a basis of `partial` to a basis of `target`. Candidates are
/// drawn from target's echelon basis in pivot order, lowest first, so the
/// result is determined by the two subspaces alone.
std::vector<Gf2Vector> extend_basis(const Gf2Subspace& partial, const Gf2Subspace& target);

/// The (n - dim kernel) x n matrix whose kernel is exactly `kernel`, with
/// rows the dual basis to the echelon complement of the kernel: row j sends
/// the j-th non-pivot coordinate q_j to 1 and kills the kernel, so the rows
/// are coordinates on the quotient space Z_2^n / kernel.
Gf2Matrix quotient_map(std::size_t ambient_dim, const Gf2Subspace& kernel);

// Solves m x = rhs; one solution (free coordinates zero) or nullopt.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& rhs);

// Z_2^{2g} with the mod-2 intersection form of the genus-g surface in the
// fixed ordered basis (mu_1, lambda_1, ..., mu_g, lambda_g).
struct SymplecticSpace {
    explicit SymplecticSpace(std::size_t genus);

    std::size_t genus;
    Gf2Matrix form; // 2g x 2g, blocks [[0,1],[1,0]]
};

bool symplectic_pairing(const SymplecticSpace& s, const Gf2Vector& a, const Gf2Vector& b);
bool is_isotropic(const SymplecticSpace& s, const Gf2Subspace& sub);

// Matrix of v |-> v + <v,w> w.
Gf2Matrix transvection(const SymplecticSpace& s, const Gf2Vector& w);

/// Seed-determined product of symplectic transvections; satisfies
/// T^t J T = J. The two-argument form draws the transvection count from the
/// seed; pass `transvection_count` explicitly to fix it (0 gives identity).
/// Uses no platform-dependent distributions, so equal seeds give bit-equal
/// matrices everywhere.
Gf2Matrix random_symplectic(const SymplecticSpace& s, std::uint64_t seed);
Gf2Matrix random_symplectic(const SymplecticSpace& s, std::uint64_t seed,
                            std::size_t transvection_count);

} // namespace stiefel::gf2
