#ifndef LINOBS_MATRIX_HPP
#define LINOBS_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace linobs {

// Ring helpers for the GMP types; Scalar and MultiPoly provide their own.
inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline mpz_class zero_like(const mpz_class&) { return 0; }
inline mpz_class one_like(const mpz_class&) { return 1; }
inline bool is_zero(const mpz_class& x) { return x == 0; }
inline mpz_class divide_exact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Dense row-major matrix over a ring T.
///
/// T needs +, -, *, == and the free functions zero_like / one_like /
/// is_zero. Every matrix keeps a zero prototype so that ring elements with
/// runtime context (a field descriptor, a variable list) can be created
/// without an entry to copy from.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& like)
        : rows_(rows), cols_(cols), zero_(zero_like(like)), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& like) {
        Matrix m(n, n, like);
        const T one = one_like(like);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& like) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        Matrix m(r, c, like);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows, const T& like) {
        Matrix m(rows, cols.size(), like);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix<T> r(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (is_zero(b(k, j))) continue;
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) r[i] = r[i] + a(i, k) * v[k];
    return r;
}

template <class T>
Matrix<T> scaled(const Matrix<T>& a, const T& s) {
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols(), a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
bool is_identity(const Matrix<T>& a) {
    if (!a.is_square()) return false;
    const T one = one_like(a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == (i == j ? one : a.zero()))) return false;
    return true;
}

template <class T>
bool is_zero_matrix(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <class T>
bool is_upper_triangular(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < i && j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

/// Non-negative power by repeated squaring.
template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned long long e) {
    if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
    Matrix<T> result = Matrix<T>::identity(a.rows(), a.zero());
    Matrix<T> base = a;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

/// Rows and columns picked by index, in the order given.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix<T> r(rows.size(), cols.size(), a.zero());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = a(rows[i], cols[j]);
    return r;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks, const T& like) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix<T> r(n, n, like);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return r;
}

/// Entrywise conversion to another ring.
template <class U, class T, class F>
Matrix<U> map_entries(const Matrix<T>& a, const U& like, F&& f) {
    Matrix<U> r(a.rows(), a.cols(), like);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j));
    return r;
}

}  // namespace linobs

#endif  // LINOBS_MATRIX_HPP
