#include "stiefel/gf2.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace stiefel::gf2 {

namespace {

std::size_t word_count(std::size_t dim) { return (dim + 63) / 64; }

// Reduces rows to reduced row-echelon form in place: zero rows dropped,
// pivot indices strictly increasing, each pivot the only 1 in its column.
void rref(std::vector<Gf2Vector>& rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] += rows[r];
            }
        }
        ++r;
    }
    rows.resize(r);
}

// Reduce v against echelon rows; the residual is zero iff v is in the span.
Gf2Vector residual(const std::vector<Gf2Vector>& echelon_rows, Gf2Vector v) {
    for (const auto& row : echelon_rows) {
        const auto pivot = row.leading_index();
        if (pivot && v.get(*pivot)) {
            v += row;
        }
    }
    return v;
}

std::vector<std::size_t> pivot_indices(const std::vector<Gf2Vector>& echelon_rows) {
    std::vector<std::size_t> pivots;
    pivots.reserve(echelon_rows.size());
    for (const auto& row : echelon_rows) {
        pivots.push_back(*row.leading_index());
    }
    return pivots;
}

} // namespace

Gf2Vector::Gf2Vector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw std::invalid_argument("Gf2Vector entries must be 0 or 1");
        }
        v.set(i, bits[i] == 1);
    }
    return v;
}

Gf2Vector Gf2Vector::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("bit string must contain only 0 and 1");
        }
        v.set(i, bits[i] == '1');
    }
    return v;
}

Gf2Vector Gf2Vector::unit(std::size_t dim, std::size_t index) {
    Gf2Vector v(dim);
    v.set(index, true);
    return v;
}

void Gf2Vector::check_index(std::size_t i) const {
    if (i >= dim_) {
        throw std::out_of_range("Gf2Vector index " + std::to_string(i) +
                                " out of range for dimension " + std::to_string(dim_));
    }
}

bool Gf2Vector::get(std::size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

bool Gf2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::weight() const {
    std::size_t total = 0;
    for (const auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::optional<std::size_t> Gf2Vector::leading_index() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) {
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
    }
    return std::nullopt;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& rhs) {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("Gf2Vector dimension mismatch: " +
                                    std::to_string(dim_) + " vs " + std::to_string(rhs.dim_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= rhs.words_[k];
    }
    return *this;
}

bool Gf2Vector::dot(const Gf2Vector& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("Gf2Vector dimension mismatch: " +
                                    std::to_string(dim_) + " vs " + std::to_string(rhs.dim_));
    }
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & rhs.words_[k];
    }
    return std::popcount(acc) % 2 == 1;
}

std::vector<int> Gf2Vector::to_bits() const {
    std::vector<int> bits(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        bits[i] = get(i) ? 1 : 0;
    }
    return bits;
}

std::string Gf2Vector::to_string() const {
    std::string s(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::size_t cols, std::vector<Gf2Vector> rows) {
    for (const auto& r : rows) {
        if (r.dim() != cols) {
            throw std::invalid_argument("row length " + std::to_string(r.dim()) +
                                        " does not match column count " + std::to_string(cols));
        }
    }
    Gf2Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) { rows_.at(r).set(c, value); }

const Gf2Vector& Gf2Matrix::row(std::size_t r) const { return rows_.at(r); }

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
    if (v.dim() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch: " +
                                    std::to_string(cols_) + " cols vs vector of dim " +
                                    std::to_string(v.dim()));
    }
    Gf2Vector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows()) {
        throw std::invalid_argument("matrix-matrix dimension mismatch");
    }
    Gf2Matrix out(rows_.size(), rhs.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Gf2Vector acc(rhs.cols());
        for (std::size_t k = 0; k < cols_; ++k) {
            if (rows_[r].get(k)) {
                acc += rhs.rows_[k];
            }
        }
        out.rows_[r] = std::move(acc);
    }
    return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix out(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows_[r].get(c)) {
                out.set(c, r, true);
            }
        }
    }
    return out;
}

Gf2Subspace Gf2Subspace::span(std::size_t ambient_dim, std::vector<Gf2Vector> vectors) {
    for (const auto& v : vectors) {
        if (v.dim() != ambient_dim) {
            throw std::invalid_argument("spanning vector dimension " + std::to_string(v.dim()) +
                                        " does not match ambient dimension " +
                                        std::to_string(ambient_dim));
        }
    }
    rref(vectors, ambient_dim);
    Gf2Subspace s(ambient_dim);
    s.basis_ = std::move(vectors);
    return s;
}

Gf2Subspace Gf2Subspace::full(std::size_t ambient_dim) {
    std::vector<Gf2Vector> basis;
    basis.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        basis.push_back(Gf2Vector::unit(ambient_dim, i));
    }
    Gf2Subspace s(ambient_dim);
    s.basis_ = std::move(basis);
    return s;
}

bool Gf2Subspace::contains(const Gf2Vector& v) const {
    if (v.dim() != ambient_dim_) {
        throw std::invalid_argument("vector dimension does not match ambient dimension");
    }
    return residual(basis_, v).is_zero();
}

bool Gf2Subspace::contains_subspace(const Gf2Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) {
        throw std::invalid_argument("ambient dimension mismatch");
    }
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Gf2Vector& v) { return contains(v); });
}

std::size_t rank(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    rref(rows, m.cols());
    return rows.size();
}

Gf2Subspace kernel_basis(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    rref(rows, m.cols());
    const auto pivots = pivot_indices(rows);

    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto p : pivots) {
        is_pivot[p] = true;
    }

    // One kernel vector per free column: 1 in the free coordinate, and in
    // pivot coordinate p_i the echelon entry of row i at the free column.
    std::vector<Gf2Vector> kernel;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) {
            continue;
        }
        Gf2Vector v(m.cols());
        v.set(c, true);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].get(c)) {
                v.set(pivots[i], true);
            }
        }
        kernel.push_back(std::move(v));
    }
    return Gf2Subspace::span(m.cols(), std::move(kernel));
}

Gf2Subspace subspace_intersection(const Gf2Subspace& a, const Gf2Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("subspace ambient dimension mismatch: " +
                                    std::to_string(a.ambient_dim()) + " vs " +
                                    std::to_string(b.ambient_dim()));
    }
    // v lies in a Heegaard kernel iff its quotient coordinates vanish, so the
    // intersection is the kernel of the stacked quotient maps.
    const Gf2Matrix qa = quotient_map(a.ambient_dim(), a);
    const Gf2Matrix qb = quotient_map(b.ambient_dim(), b);
    std::vector<Gf2Vector> stacked;
    stacked.reserve(qa.rows() + qb.rows());
    for (std::size_t r = 0; r < qa.rows(); ++r) {
        stacked.push_back(qa.row(r));
    }
    for (std::size_t r = 0; r < qb.rows(); ++r) {
        stacked.push_back(qb.row(r));
    }
    return kernel_basis(Gf2Matrix::from_rows(a.ambient_dim(), std::move(stacked)));
}

Gf2Subspace subspace_sum(const Gf2Subspace& a, const Gf2Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("subspace ambient dimension mismatch: " +
                                    std::to_string(a.ambient_dim()) + " vs " +
                                    std::to_string(b.ambient_dim()));
    }
    std::vector<Gf2Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Gf2Subspace::span(a.ambient_dim(), std::move(all));
}

std::vector<Gf2Vector> extend_basis(const Gf2Subspace& partial, const Gf2Subspace& target) {
    if (partial.ambient_dim() != target.ambient_dim()) {
        throw std::invalid_argument("subspace ambient dimension mismatch");
    }
    if (!target.contains_subspace(partial)) {
        throw std::invalid_argument("partial subspace is not contained in target");
    }

    // Working echelon set seeded with partial's basis; candidates that
    // reduce to zero are dependent and skipped.
    std::vector<Gf2Vector> echelon = partial.basis();
    std::vector<Gf2Vector> extension;
    const std::size_t needed = target.dim() - partial.dim();
    extension.reserve(needed);

    for (const auto& candidate : target.basis()) {
        if (extension.size() == needed) {
            break;
        }
        Gf2Vector reduced = residual(echelon, candidate);
        if (reduced.is_zero()) {
            continue;
        }
        extension.push_back(candidate);
        const std::size_t pivot = *reduced.leading_index();
        auto pos = std::find_if(echelon.begin(), echelon.end(),
                                [pivot](const Gf2Vector& row) {
                                    return *row.leading_index() > pivot;
                                });
        echelon.insert(pos, std::move(reduced));
    }
    return extension;
}

Gf2Matrix quotient_map(std::size_t ambient_dim, const Gf2Subspace& kernel) {
    if (kernel.ambient_dim() != ambient_dim) {
        throw std::invalid_argument("kernel ambient dimension " +
                                    std::to_string(kernel.ambient_dim()) +
                                    " does not match ambient dimension " +
                                    std::to_string(ambient_dim));
    }
    const auto& basis = kernel.basis();
    const auto pivots = pivot_indices(basis);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (const auto p : pivots) {
        is_pivot[p] = true;
    }

    // Row for free column q: q-th coordinate plus, for each kernel basis row
    // i, its entry at q on pivot coordinate p_i. These functionals kill the
    // kernel and are dual to the images of the free coordinates.
    std::vector<Gf2Vector> out_rows;
    for (std::size_t q = 0; q < ambient_dim; ++q) {
        if (is_pivot[q]) {
            continue;
        }
        Gf2Vector row(ambient_dim);
        row.set(q, true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].get(q)) {
                row.set(pivots[i], true);
            }
        }
        out_rows.push_back(std::move(row));
    }
    return Gf2Matrix::from_rows(ambient_dim, std::move(out_rows));
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& rhs) {
    if (rhs.dim() != m.rows()) {
        throw std::invalid_argument("right-hand side dimension does not match row count");
    }
    const std::size_t n = m.cols();
    // Augmented elimination with the rhs in an extra trailing column.
    std::vector<Gf2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Gf2Vector aug(n + 1);
        for (std::size_t c = 0; c < n; ++c) {
            aug.set(c, m.get(r, c));
        }
        aug.set(n, rhs.get(r));
        rows.push_back(std::move(aug));
    }
    rref(rows, n + 1);

    Gf2Vector x(n);
    for (const auto& row : rows) {
        const std::size_t pivot = *row.leading_index();
        if (pivot == n) {
            return std::nullopt; // 0 = 1 row: inconsistent
        }
        x.set(pivot, row.get(n));
    }
    return x;
}

SymplecticSpace::SymplecticSpace(std::size_t g) : genus(g), form(2 * g, 2 * g) {
    for (std::size_t i = 0; i < g; ++i) {
        form.set(2 * i, 2 * i + 1, true);
        form.set(2 * i + 1, 2 * i, true);
    }
}

bool symplectic_pairing(const SymplecticSpace& s, const Gf2Vector& a, const Gf2Vector& b) {
    if (a.dim() != 2 * s.genus || b.dim() != 2 * s.genus) {
        throw std::invalid_argument("symplectic pairing expects vectors of dimension 2g");
    }
    return a.dot(s.form.apply(b));
}

bool is_isotropic(const SymplecticSpace& s, const Gf2Subspace& sub) {
    if (sub.ambient_dim() != 2 * s.genus) {
        throw std::invalid_argument("subspace ambient dimension must be 2g");
    }
    const auto& basis = sub.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            if (symplectic_pairing(s, basis[i], basis[j])) {
                return false;
            }
        }
    }
    return true;
}

Gf2Matrix transvection(const SymplecticSpace& s, const Gf2Vector& w) {
    const std::size_t n = 2 * s.genus;
    if (w.dim() != n) {
        throw std::invalid_argument("transvection vector must have dimension 2g");
    }
    const Gf2Vector jw = s.form.apply(w);
    Gf2Matrix t = Gf2Matrix::identity(n);
    // Column c picks up w when <e_c, w> = (Jw)_c is 1.
    for (std::size_t c = 0; c < n; ++c) {
        if (!jw.get(c)) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (w.get(r)) {
                t.set(r, c, !t.get(r, c));
            }
        }
    }
    return t;
}

namespace {

Gf2Vector random_nonzero_vector(std::mt19937_64& rng, std::size_t dim) {
    Gf2Vector v(dim);
    do {
        for (std::size_t i = 0; i < dim; ++i) {
            v.set(i, (rng() & 1) != 0);
        }
    } while (v.is_zero());
    return v;
}

} // namespace

Gf2Matrix random_symplectic(const SymplecticSpace& s, std::uint64_t seed,
                            std::size_t transvection_count) {
    const std::size_t n = 2 * s.genus;
    std::mt19937_64 rng(seed);
    Gf2Matrix result = Gf2Matrix::identity(n);
    for (std::size_t step = 0; step < transvection_count; ++step) {
        const Gf2Vector w = random_nonzero_vector(rng, n);
        result = transvection(s, w).multiply(result);
    }
    return result;
}

Gf2Matrix random_symplectic(const SymplecticSpace& s, std::uint64_t seed) {
    if (s.genus == 0) {
        return Gf2Matrix::identity(0);
    }
    std::mt19937_64 rng(seed);
    // Between 2g and 6g transvections, drawn from the same stream the
    // transvection vectors come from.
    const std::size_t count = 2 * s.genus + static_cast<std::size_t>(rng() % (4 * s.genus + 1));
    const std::uint64_t subseed = rng();
    return random_symplectic(s, subseed, count);
}

} // namespace stiefel::gf2
