#ifndef LINOBS_LINALG_HPP
#define LINOBS_LINALG_HPP

#include "linobs/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace linobs {

// Exact linear algebra over a field T (T additionally needs division).

template <class T>
struct EchelonForm {
    Matrix<T> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination taking the first nonzero entry as pivot.
template <class T>
EchelonForm<T> rref(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        const T inv = one_like(m.zero()) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!is_zero(m(row, c))) m(r, c) = m(r, c) - factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

/// Basis of the right kernel. One vector per free column, in increasing
/// column order, with that free coordinate set to 1. Empty iff the columns
/// are independent.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    const auto ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    const T one = one_like(m.zero());
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), m.zero());
        v[free] = one;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Determinant by elimination.
template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    T det = one_like(m.zero());
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(m(piv, col))) ++piv;
        if (piv == n) return m.zero();
        if (piv != col) {
            m.swap_rows(piv, col);
            det = -det;
        }
        det = det * m(col, col);
        const T inv = one_like(m.zero()) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m(r, col))) continue;
            const T factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; throws std::domain_error for singular input.
template <class T>
Matrix<T> gauss_jordan_inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto ech = rref(hstack(m, Matrix<T>::identity(n, m.zero())));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = i;
        cols[i] = n + i;
    }
    return submatrix(ech.reduced, rows, cols);
}

/// Canonical basis (columns) of the span of the columns of m: the nonzero
/// rows of rref(m^T), transposed back.
template <class T>
Matrix<T> span_basis(const Matrix<T>& m) {
    auto ech = rref(transpose(m));
    std::vector<std::size_t> rows(ech.pivots.size()), cols(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return transpose(submatrix(ech.reduced, rows, cols));
}

/// Canonical basis of span(U) ∩ span(V); U, V have independent columns.
template <class T>
Matrix<T> intersect_spans(const Matrix<T>& u, const Matrix<T>& v) {
    if (u.rows() != v.rows()) throw std::invalid_argument("subspaces of different ambient spaces");
    const auto null = kernel_basis(hstack(u, v));
    Matrix<T> vecs(u.rows(), null.size(), u.zero());
    for (std::size_t k = 0; k < null.size(); ++k) {
        for (std::size_t i = 0; i < u.rows(); ++i) {
            T acc = u.zero();
            for (std::size_t c = 0; c < u.cols(); ++c) acc = acc + u(i, c) * null[k][c];
            vecs(i, k) = acc;
        }
    }
    return span_basis(vecs);
}

/// Kernel basis as the columns of a matrix.
template <class T>
Matrix<T> kernel_matrix(const Matrix<T>& m) {
    return Matrix<T>::from_columns(kernel_basis(m), m.cols(), m.zero());
}

/// Fraction-free (Bareiss) determinant over an integral domain; needs
/// divide_exact(a, b) for the exact division step.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one_like(m.zero());
    T prev = one_like(m.zero());
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m(piv, k))) ++piv;
            if (piv == n) return m.zero();
            m.swap_rows(k, piv);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = m.zero();
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

}  // namespace linobs

#endif  // LINOBS_LINALG_HPP
