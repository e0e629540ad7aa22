#pragma once

// Dense exact linear algebra over Q: row reduction, rank, kernels, and
// consistency of linear systems.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace coamoeba {

/// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    RatMatrix column_block(std::size_t first, std::size_t count) const {
        RatMatrix r(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += to_short_string((*this)(i, j));
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t pivot_cols_limit = SIZE_MAX) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t limit = std::min(pivot_cols_limit, m.cols());
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

/// Basis of the null space, one basis vector per column of the result.
inline RatMatrix kernel(const RatMatrix& a) {
    RatMatrix m = a;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMatrix basis(a.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        basis(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -m(r, free_cols[f]);
    }
    return basis;
}

/// Whether A x = b has a solution; if so one solution is written to `x`.
inline bool solve(const RatMatrix& a, const std::vector<Rat>& b, std::vector<Rat>* x = nullptr) {
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b.at(i);
    }
    auto pivots = row_reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (aug(r, a.cols()) != 0) return false;
    if (x) {
        x->assign(a.cols(), Rat(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) (*x)[pivots[r]] = aug(r, a.cols());
    }
    return true;
}

/// Coordinates of the columns of `v` in the column basis `basis` (which must
/// have full column rank and contain the span of `v`).
inline RatMatrix coordinates_in(const RatMatrix& basis, const RatMatrix& v) {
    RatMatrix out(basis.cols(), v.cols());
    for (std::size_t c = 0; c < v.cols(); ++c) {
        std::vector<Rat> rhs(v.rows());
        for (std::size_t r = 0; r < v.rows(); ++r) rhs[r] = v(r, c);
        std::vector<Rat> x;
        if (!solve(basis, rhs, &x)) throw std::logic_error("vector outside the spanned subspace");
        for (std::size_t r = 0; r < basis.cols(); ++r) out(r, c) = x[r];
    }
    return out;
}

inline Rat determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rat det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

}  // namespace coamoeba
