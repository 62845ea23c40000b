#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcube/numeric.hpp"

namespace symcube {

/// Sparse row over the integers: column index -> nonzero entry.
using SparseIntRow = std::map<int, Int>;

/// Rank of a sparse integer matrix by fraction-free elimination. Rows are
/// combined as a*row - b*pivot and renormalized by their content gcd, so
/// entries stay small; exact by construction.
long sparse_int_rank(std::vector<SparseIntRow> rows);

/// Dense exact linear algebra over a field T (Rat or Gaussian).
/// Sizes here are tiny; plain Gaussian elimination is enough.
template <typename T>
struct DenseMatrix {
    std::vector<std::vector<T>> rows;

    std::size_t height() const { return rows.size(); }
    std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }
};

namespace detail {
inline bool lin_is_zero(const Rat& v) { return v == 0; }
inline bool lin_is_zero(const Gaussian& v) { return v.is_zero(); }
} // namespace detail

template <typename T>
long dense_rank(DenseMatrix<T> m) {
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.width() && row < m.height(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.height() && detail::lin_is_zero(m.rows[pivot][col])) ++pivot;
        if (pivot == m.height()) continue;
        std::swap(m.rows[row], m.rows[pivot]);
        for (std::size_t r = row + 1; r < m.height(); ++r) {
            if (detail::lin_is_zero(m.rows[r][col])) continue;
            T factor = m.rows[r][col] / m.rows[row][col];
            for (std::size_t c = col; c < m.width(); ++c)
                m.rows[r][c] -= factor * m.rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

template <typename T>
T dense_det(DenseMatrix<T> m) {
    if (m.height() != m.width()) throw invalid_input("determinant of non-square matrix");
    T det = T(1);
    for (std::size_t col = 0; col < m.width(); ++col) {
        std::size_t pivot = col;
        while (pivot < m.height() && detail::lin_is_zero(m.rows[pivot][col])) ++pivot;
        if (pivot == m.height()) return T(0);
        if (pivot != col) {
            std::swap(m.rows[col], m.rows[pivot]);
            det = -det;
        }
        det = det * m.rows[col][col];
        for (std::size_t r = col + 1; r < m.height(); ++r) {
            if (detail::lin_is_zero(m.rows[r][col])) continue;
            T factor = m.rows[r][col] / m.rows[col][col];
            for (std::size_t c = col; c < m.width(); ++c)
                m.rows[r][c] -= factor * m.rows[col][c];
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan; throws invalid_input when singular.
template <typename T>
DenseMatrix<T> dense_inverse(DenseMatrix<T> m) {
    if (m.height() != m.width()) throw invalid_input("inverse of non-square matrix");
    std::size_t n = m.height();
    DenseMatrix<T> inv;
    inv.rows.assign(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) inv.rows[i][i] = T(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::lin_is_zero(m.rows[pivot][col])) ++pivot;
        if (pivot == n) throw invalid_input("matrix is singular");
        std::swap(m.rows[col], m.rows[pivot]);
        std::swap(inv.rows[col], inv.rows[pivot]);
        T lead = m.rows[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m.rows[col][c] = m.rows[col][c] / lead;
            inv.rows[col][c] = inv.rows[col][c] / lead;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || detail::lin_is_zero(m.rows[r][col])) continue;
            T factor = m.rows[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m.rows[r][c] -= factor * m.rows[col][c];
                inv.rows[r][c] -= factor * inv.rows[col][c];
            }
        }
    }
    return inv;
}

} // namespace symcube
