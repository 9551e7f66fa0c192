#include "fsprim/ratlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fsprim {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols) throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns)
{
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("RatMatrix::from_columns: bad column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Rational> RatMatrix::column(std::size_t c) const
{
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs)
{
    if (lhs.cols() != rhs.rows()) throw std::invalid_argument("RatMatrix product: shape mismatch");
    RatMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                const Rational& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

std::vector<Rational> operator*(const RatMatrix& lhs, std::span<const Rational> v)
{
    if (lhs.cols() != v.size()) throw std::invalid_argument("RatMatrix-vector product: shape mismatch");
    std::vector<Rational> out(lhs.rows());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k)
            if (!lhs(i, k).is_zero() && !v[k].is_zero()) out[i] += lhs(i, k) * v[k];
    return out;
}

SparseVector to_sparse(std::span<const Rational> dense)
{
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n)
{
    std::vector<Rational> out(n);
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, -1), scratch_(cols) {}

std::size_t EchelonBasis::reduce_dense(std::vector<Rational>& acc, std::size_t start) const
{
    for (std::size_t c = start; c < cols_; ++c) {
        if (acc[c].is_zero()) continue;
        std::ptrdiff_t p = pivot_row_[c];
        if (p < 0) return c;
        Rational factor = acc[c];
        for (const auto& [col, value] : rows_[static_cast<std::size_t>(p)]) acc[col].sub_mul(factor, value);
    }
    return cols_;
}

bool EchelonBasis::insert(const SparseVector& row)
{
    if (row.empty()) return false;
    auto& acc = scratch_;
    for (const auto& [c, x] : row) {
        if (c >= cols_) throw std::invalid_argument("EchelonBasis::insert: column out of range");
        acc[c] = x;
    }
    std::size_t lead = reduce_dense(acc, row.front().first);
    if (lead == cols_) return false; // acc is all zero again
    Rational inv = acc[lead].reciprocal();
    SparseVector stored;
    for (std::size_t c = lead; c < cols_; ++c) {
        if (acc[c].is_zero()) continue;
        stored.emplace_back(c, acc[c] * inv);
        acc[c] = Rational();
    }
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(stored));
    reduced_ = false;
    return true;
}

bool EchelonBasis::insert(std::span<const Rational> dense_row)
{
    if (dense_row.size() != cols_) throw std::invalid_argument("EchelonBasis::insert: wrong row length");
    return insert(to_sparse(dense_row));
}

bool EchelonBasis::contains(const SparseVector& row) const
{
    if (row.empty()) return true;
    auto& acc = scratch_;
    for (const auto& [c, x] : row) acc.at(c) = x;
    std::size_t lead = reduce_dense(acc, row.front().first);
    bool inside = lead == cols_;
    if (!inside)
        for (auto& x : acc) x = Rational();
    return inside;
}

void EchelonBasis::reduce()
{
    if (reduced_) return;
    // Process pivots right to left; rows with larger pivots are already reduced.
    std::vector<std::size_t> pivots = pivot_columns();
    auto& acc = scratch_;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto& row = rows_[static_cast<std::size_t>(pivot_row_[*it])];
        bool touched = false;
        for (std::size_t k = 1; k < row.size(); ++k)
            if (pivot_row_[row[k].first] >= 0) {
                touched = true;
                break;
            }
        if (!touched) continue;
        for (const auto& [c, x] : row) acc[c] = x;
        for (std::size_t c = *it + 1; c < cols_; ++c) {
            if (acc[c].is_zero()) continue;
            std::ptrdiff_t p = pivot_row_[c];
            if (p < 0) continue;
            Rational factor = acc[c];
            for (const auto& [col, value] : rows_[static_cast<std::size_t>(p)]) acc[col].sub_mul(factor, value);
        }
        SparseVector out;
        for (std::size_t c = *it; c < cols_; ++c) {
            if (acc[c].is_zero()) continue;
            out.emplace_back(c, std::move(acc[c]));
            acc[c] = Rational();
        }
        row = std::move(out);
    }
    reduced_ = true;
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_row_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::size_t> EchelonBasis::free_columns() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<SparseVector> EchelonBasis::reduced_rows()
{
    reduce();
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (std::size_t c : pivot_columns()) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
    return out;
}

std::vector<SparseVector> EchelonBasis::kernel_columns()
{
    reduce();
    std::vector<std::size_t> free = free_columns();
    std::vector<std::ptrdiff_t> free_index(cols_, -1);
    for (std::size_t j = 0; j < free.size(); ++j) free_index[free[j]] = static_cast<std::ptrdiff_t>(j);
    std::vector<SparseVector> k(free.size());
    for (std::size_t c = 0; c < cols_; ++c) {
        std::ptrdiff_t p = pivot_row_[c];
        if (p < 0) {
            if (free_index[c] >= 0) k[static_cast<std::size_t>(free_index[c])].emplace_back(c, Rational(1));
            continue;
        }
        // Row p reads x_c + sum_{free f} r_f x_f = 0.
        for (const auto& [col, value] : rows_[static_cast<std::size_t>(p)]) {
            if (col == c) continue;
            std::ptrdiff_t j = free_index[col];
            if (j >= 0) k[static_cast<std::size_t>(j)].emplace_back(c, -value);
        }
    }
    return k;
}

RatMatrix EchelonBasis::kernel()
{
    const auto cols = kernel_columns();
    RatMatrix k(cols_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, x] : cols[j]) k(r, j) = x;
    return k;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const RatMatrix& basis, std::vector<std::size_t> pivots)
    : ambient_(basis.rows()), pivots_(std::move(pivots))
{
    if (pivots_.size() != basis.cols()) throw std::invalid_argument("Subspace: one pivot per basis column required");
    sparse_cols_.resize(basis.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (!basis(r, j).is_zero()) sparse_cols_[j].emplace_back(r, basis(r, j));
    index();
}

Subspace::Subspace(std::size_t ambient, std::vector<SparseVector> columns, std::vector<std::size_t> pivots)
    : ambient_(ambient), pivots_(std::move(pivots)), sparse_cols_(std::move(columns))
{
    if (pivots_.size() != sparse_cols_.size()) throw std::invalid_argument("Subspace: one pivot per basis column required");
    for (auto& col : sparse_cols_) {
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col[i].first >= ambient_ || col[i].second.is_zero() || (i && col[i - 1].first == col[i].first))
                throw std::invalid_argument("Subspace: malformed sparse column");
    }
    index();
}

// Builds the row view and checks pivot form.
void Subspace::index()
{
    pivot_index_.assign(ambient_, -1);
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
        std::size_t p = pivots_[j];
        if (p >= ambient_ || pivot_index_[p] >= 0) throw std::invalid_argument("Subspace: bad pivot rows");
        pivot_index_[p] = static_cast<std::ptrdiff_t>(j);
    }
    sparse_rows_.assign(ambient_, {});
    for (std::size_t j = 0; j < sparse_cols_.size(); ++j)
        for (const auto& [r, x] : sparse_cols_[j]) sparse_rows_[r].emplace_back(j, x);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const auto& row = sparse_rows_[pivots_[i]];
        if (row.size() != 1 || row.front().first != i || !row.front().second.is_one())
            throw std::invalid_argument("Subspace: basis is not in pivot form");
    }
}

RatMatrix Subspace::basis() const
{
    RatMatrix m(ambient_, dimension());
    for (std::size_t j = 0; j < sparse_cols_.size(); ++j)
        for (const auto& [r, x] : sparse_cols_[j]) m(r, j) = x;
    return m;
}

Rational Subspace::entry(std::size_t r, std::size_t j) const
{
    const auto& row = sparse_rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const SparseEntry& e, std::size_t c) { return e.first < c; });
    return it != row.end() && it->first == j ? it->second : Rational();
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::full(std::size_t ambient)
{
    std::vector<std::size_t> pivots(ambient);
    std::vector<SparseVector> cols(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        pivots[i] = i;
        cols[i].emplace_back(i, Rational(1));
    }
    return Subspace(ambient, std::move(cols), std::move(pivots));
}

Subspace Subspace::span_of(const RatMatrix& columns)
{
    EchelonBasis eb(columns.rows());
    for (std::size_t c = 0; c < columns.cols(); ++c) eb.insert(to_sparse(columns.column(c)));
    return Subspace(columns.rows(), eb.reduced_rows(), eb.pivot_columns());
}

std::optional<std::vector<Rational>> Subspace::coordinates(const SparseVector& v) const
{
    const std::size_t n = ambient_dimension();
    std::vector<Rational> coeff(dimension());
    for (const auto& [r, x] : v) {
        if (r >= n) throw std::invalid_argument("Subspace::coordinates: index out of range");
        std::ptrdiff_t j = pivot_index_[r];
        if (j >= 0) coeff[static_cast<std::size_t>(j)] = x;
    }
    // residual = v - basis * coeff must vanish
    std::vector<Rational> residual(n);
    for (const auto& [r, x] : v) residual[r] = x;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        if (coeff[j].is_zero()) continue;
        for (const auto& [r, x] : sparse_cols_[j]) residual[r].sub_mul(coeff[j], x);
    }
    for (const auto& x : residual)
        if (!x.is_zero()) return std::nullopt;
    return coeff;
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dimension() != ambient_dimension()) return false;
    for (std::size_t j = 0; j < other.dimension(); ++j)
        if (!contains(other.sparse_column(j))) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::size_t rank(const RatMatrix& m)
{
    EchelonBasis eb(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
    return eb.rank();
}

RatMatrix kernel_basis(const RatMatrix& m)
{
    EchelonBasis eb(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
    return eb.kernel();
}

RatMatrix image_basis(const RatMatrix& m) { return Subspace::span_of(m).basis(); }

std::optional<std::vector<Rational>> solve_membership(const RatMatrix& s, std::span<const Rational> v)
{
    if (s.rows() != v.size())
        throw std::invalid_argument("solve_membership: S has " + std::to_string(s.rows()) + " rows but v has length " +
                                    std::to_string(v.size()));
    // Row-reduce the augmented system [S | v]; v is in the span iff the last
    // column never becomes a pivot.
    const std::size_t n = s.cols();
    EchelonBasis eb(n + 1);
    for (std::size_t r = 0; r < s.rows(); ++r) {
        SparseVector row = to_sparse(s.row(r));
        if (!v[r].is_zero()) row.emplace_back(n, v[r]);
        eb.insert(row);
    }
    std::vector<SparseVector> rows = eb.reduced_rows();
    std::vector<Rational> x(n);
    for (const auto& row : rows) {
        std::size_t lead = row.front().first;
        if (lead == n) return std::nullopt;
        // Free variables are zero: x_lead = rhs.
        if (row.back().first == n) x[lead] = row.back().second;
    }
    return x;
}

} // namespace fsprim
