#pragma once

// Exact linear algebra over a field (Rational, QuadraticNumber<D>).
// Dense row-major storage; sizes here stay in the low hundreds.

#include "centerkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace centerkit {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static Matrix from_columns(const std::vector<Vec<K>>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged input");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows_in, std::size_t cols) {
        Matrix m(rows_in.size(), cols);
        for (std::size_t r = 0; r < rows_in.size(); ++r) {
            if (rows_in[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged input");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows_in[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<K> row(std::size_t r) const { return Vec<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
        Vec<K> out(rows_, K(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const K inv = K(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || is_zero(m(r, c))) continue;
            const K factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!is_zero(m(lead_row, k))) m(r, k) -= factor * m(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

/// Rank of a family of vectors of equal length.
template <class K>
std::size_t rank_of(const std::vector<Vec<K>>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(Matrix<K>::from_rows(vectors, dim));
}

/// Basis of the right null space {v : m v = 0}.
template <class K>
std::vector<Vec<K>> nullspace(Matrix<K> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v(m.cols(), K(0));
        v[free] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m x = b, or nullopt if b is not in the column space.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    Vec<K> x(m.cols(), K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

/// Incrementally maintained row-echelon basis of a subspace of K^dim.
/// Each stored row has a leading 1 at a distinct column and zeros in the
/// other rows' leading columns (fully reduced).
template <class K>
class Subspace {
public:
    explicit Subspace(std::size_t dim) : dim_(dim) {}

    template <class It>
    static Subspace span(std::size_t dim, It first, It last) {
        Subspace s(dim);
        for (; first != last; ++first) s.insert(*first);
        return s;
    }
    static Subspace span(std::size_t dim, const std::vector<Vec<K>>& vs) { return span(dim, vs.begin(), vs.end()); }

    std::size_t ambient_dimension() const { return dim_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Vec<K>>& basis() const { return rows_; }

    /// Reduces v against the basis; the result is zero iff v lies in the subspace.
    Vec<K> reduce(Vec<K> v) const {
        check(v);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t c = leads_[i];
            if (is_zero(v[c])) continue;
            const K factor = v[c];
            const auto& row = rows_[i];
            for (std::size_t k = c; k < dim_; ++k)
                if (!is_zero(row[k])) v[k] -= factor * row[k];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const {
        const auto r = reduce(v);
        for (const auto& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    /// Adds v to the spanning set; returns true iff the dimension grew.
    bool insert(const Vec<K>& v_in) {
        Vec<K> v = reduce(v_in);
        std::size_t lead = dim_;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!is_zero(v[k])) { lead = k; break; }
        if (lead == dim_) return false;
        const K inv = K(1) / v[lead];
        for (std::size_t k = lead; k < dim_; ++k) v[k] *= inv;
        for (auto& row : rows_) {
            if (is_zero(row[lead])) continue;
            const K factor = row[lead];
            for (std::size_t k = lead; k < dim_; ++k)
                if (!is_zero(v[k])) row[k] -= factor * v[k];
        }
        // Keep rows ordered by leading column.
        std::size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& v : other.rows_)
            if (!contains(v)) return false;
        return true;
    }
    bool operator==(const Subspace& other) const {
        return dim_ == other.dim_ && dimension() == other.dimension() && contains(other);
    }

private:
    void check(const Vec<K>& v) const {
        if (v.size() != dim_) throw std::invalid_argument("Subspace: vector has wrong length");
    }

    std::size_t dim_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> leads_;
};

}  // namespace centerkit
