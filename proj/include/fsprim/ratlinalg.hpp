#pragma once

// Exact linear algebra over the rationals.
//
// RatMatrix is a plain dense matrix. The elimination work is done by
// EchelonBasis, which keeps sparse rows so that the 0/1 restriction matrices
// built by the filtration code can be fed in row by row without ever being
// materialized densely.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fsprim/rational.hpp"

namespace fsprim {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    /// Row-major integer literal, for tests and small hand-built maps.
    static RatMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static RatMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::vector<Rational> column(std::size_t c) const;

    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
    friend std::vector<Rational> operator*(const RatMatrix& lhs, std::span<const Rational> v);
    friend bool operator==(const RatMatrix& lhs, const RatMatrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using SparseEntry = std::pair<std::size_t, Rational>;
/// Entries sorted by strictly increasing column, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// Incrementally built row-space basis in echelon form.
///
/// Each inserted row is reduced against the current pivots; a nonzero
/// remainder becomes a new pivot row normalized to leading coefficient 1.
/// Deterministic for a fixed insertion order.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols);

    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true if the row enlarged the span.
    bool insert(const SparseVector& row);
    bool insert(std::span<const Rational> dense_row);

    /// True if the row lies in the current span.
    [[nodiscard]] bool contains(const SparseVector& row) const;

    /// Back-substitutes to reduced row echelon form. Idempotent.
    void reduce();

    /// Pivot columns in increasing order (call reduce() first for RREF rows).
    [[nodiscard]] std::vector<std::size_t> pivot_columns() const;
    [[nodiscard]] std::vector<std::size_t> free_columns() const;

    /// Rows of the reduced form, ordered by pivot column.
    [[nodiscard]] std::vector<SparseVector> reduced_rows();

    /// Basis of the right null space of the inserted rows (one column per
    /// free column; the matrix restricted to the free rows is the identity).
    [[nodiscard]] RatMatrix kernel();
    /// The same basis as sparse columns.
    [[nodiscard]] std::vector<SparseVector> kernel_columns();

private:
    /// Reduces `acc` in place against the pivots; returns the first column
    /// that survives, or cols_ if the vector reduced to zero.
    std::size_t reduce_dense(std::vector<Rational>& acc, std::size_t start) const;

    std::size_t cols_;
    std::vector<std::ptrdiff_t> pivot_row_; // column -> index into rows_, -1 if none
    std::vector<SparseVector> rows_;
    bool reduced_ = true;
    mutable std::vector<Rational> scratch_;
};

/// A subspace of k^n with a basis in column pivot form: the basis restricted
/// to the rows listed in `pivots` is the identity matrix. Coordinates of a
/// member v are therefore just v[pivots]. Stored sparsely.
class Subspace {
public:
    Subspace() = default;
    /// Takes a basis already in pivot form; validated.
    Subspace(const RatMatrix& basis, std::vector<std::size_t> pivots);
    Subspace(std::size_t ambient, std::vector<SparseVector> columns, std::vector<std::size_t> pivots);

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Span of arbitrary columns (reduced to pivot form).
    static Subspace span_of(const RatMatrix& columns);

    [[nodiscard]] std::size_t ambient_dimension() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return pivots_.size(); }
    /// Dense copy of the basis.
    [[nodiscard]] RatMatrix basis() const;
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Column j of the basis as a sparse vector.
    [[nodiscard]] const SparseVector& sparse_column(std::size_t j) const { return sparse_cols_[j]; }
    /// Row r of the basis as (column, value) pairs.
    [[nodiscard]] const SparseVector& sparse_row(std::size_t r) const { return sparse_rows_[r]; }
    /// Basis entry (r, j).
    [[nodiscard]] Rational entry(std::size_t r, std::size_t j) const;

    /// Coefficients of v in this basis, or nullopt if v is not in the span.
    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;
    [[nodiscard]] bool contains(const SparseVector& v) const { return coordinates(v).has_value(); }

    /// True if every basis vector of `other` lies in this subspace.
    [[nodiscard]] bool contains(const Subspace& other) const;

private:
    void index();

    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<SparseVector> sparse_cols_;
    std::vector<SparseVector> sparse_rows_;
    std::vector<std::ptrdiff_t> pivot_index_; // row -> basis column, -1 if not a pivot row
};

[[nodiscard]] std::size_t rank(const RatMatrix& m);
[[nodiscard]] RatMatrix kernel_basis(const RatMatrix& m);
[[nodiscard]] RatMatrix image_basis(const RatMatrix& m);
/// Coefficients expressing v in the column span of s; throws
/// std::invalid_argument if s.rows() != v.size().
[[nodiscard]] std::optional<std::vector<Rational>> solve_membership(const RatMatrix& s,
                                                                    std::span<const Rational> v);

SparseVector to_sparse(std::span<const Rational> dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t n);

} // namespace fsprim
