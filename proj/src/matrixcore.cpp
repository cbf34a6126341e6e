#include "linobs/matrixcore.hpp"

#include <stdexcept>

namespace linobs {

namespace {

Scalar laplace_determinant(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return one_like(m.zero());
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Scalar det = m.zero();
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Scalar term = m(0, j) * laplace_determinant(submatrix(m, rows, cols));
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void require_square(const ExactMatrix& m, const char* what) {
    if (!m.is_square()) throw std::invalid_argument(std::string(what) + " needs a square matrix");
}

}  // namespace

ExactMatrix zero_matrix(const Field& f, std::size_t rows, std::size_t cols) {
    return ExactMatrix(rows, cols, Scalar::zero(f));
}

ExactMatrix identity_matrix(const Field& f, std::size_t n) { return ExactMatrix::identity(n, Scalar::zero(f)); }

ExactMatrix int_matrix(const Field& f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m = zero_matrix(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

ExactMatrix from_rational(const Field& f, const QMatrix& m) {
    return map_entries(m, Scalar::zero(f), [&](const mpq_class& q) { return Scalar::from_rational(f, q); });
}

ExactMatrix diagonal_matrix(const std::vector<Scalar>& diag) {
    if (diag.empty()) return {};
    ExactMatrix m(diag.size(), diag.size(), diag[0]);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ExactMatrix adjugate(const ExactMatrix& m) {
    require_square(m, "adjugate");
    const std::size_t n = m.rows();
    ExactMatrix adj(n, n, m.zero());
    if (n == 1) {
        adj(0, 0) = one_like(m.zero());
        return adj;
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows.clear();
            cols.clear();
            for (std::size_t r = 0; r < n; ++r)
                if (r != i) rows.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            Scalar minor = laplace_determinant(submatrix(m, rows, cols));
            adj(j, i) = (i + j) % 2 == 0 ? minor : -minor;
        }
    }
    return adj;
}

ExactMatrix inverse(const ExactMatrix& m) {
    require_square(m, "inverse");
    if (m.zero().field().kind() != FieldKind::ratfun) return gauss_jordan_inverse(m);
    const Scalar det = laplace_determinant(m);
    if (det.is_zero()) throw std::domain_error("singular matrix");
    const Scalar inv = det.inverse();
    ExactMatrix adj = adjugate(m);
    for (std::size_t i = 0; i < adj.rows(); ++i)
        for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) * inv;
    return adj;
}

QMatrix inverse(const QMatrix& m) { return gauss_jordan_inverse(m); }

ExactMatrix matrix_pow(const ExactMatrix& m, long long e) {
    if (e >= 0) return power(m, static_cast<unsigned long long>(e));
    return power(inverse(m), 0ULL - static_cast<unsigned long long>(e));
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) {
    require_square(x, "commutator");
    if (x.rows() != y.rows() || y.cols() != x.cols()) throw std::invalid_argument("commutator of different sizes");
    if (!(x.zero().field() == y.zero().field())) throw std::invalid_argument("commutator over different fields");
    return x * y * inverse(x) * inverse(y);
}

std::optional<std::uint64_t> multiplicative_order(const ExactMatrix& x, std::uint64_t bound) {
    require_square(x, "multiplicative order");
    if (determinant(x).is_zero()) throw std::domain_error("singular matrix has no multiplicative order");
    ExactMatrix p = x;
    for (std::uint64_t e = 1; e <= bound; ++e) {
        if (is_identity(p)) return e;
        p = p * x;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> order_dividing(const ExactMatrix& x, std::uint64_t multiple) {
    require_square(x, "multiplicative order");
    if (multiple == 0) return std::nullopt;
    if (!is_identity(power(x, multiple))) return std::nullopt;
    std::uint64_t e = multiple;
    for (auto q : prime_factors(multiple)) {
        while (e % q == 0 && is_identity(power(x, e / q))) e /= q;
    }
    return e;
}

std::uint64_t unipotent_exponent(std::uint64_t p, std::size_t n) {
    std::uint64_t q = 1;
    while (q < n) q *= p;
    return q;
}

std::optional<std::uint64_t> charp_order(const ExactMatrix& x) {
    const std::uint64_t p = x.zero().field().characteristic();
    if (p == 0) throw std::invalid_argument("charp_order needs a prime field");
    const std::size_t n = x.rows();
    mpz_class multiple = 1, q = 1;
    for (std::size_t d = 1; d <= n; ++d) {
        q *= static_cast<unsigned long>(p);
        mpz_class term = q - 1;
        mpz_lcm(multiple.get_mpz_t(), multiple.get_mpz_t(), term.get_mpz_t());
    }
    multiple *= static_cast<unsigned long>(unipotent_exponent(p, n));
    if (!multiple.fits_ulong_p()) return std::nullopt;
    return order_dividing(x, multiple.get_ui());
}

bool satisfies_polynomial(const ExactMatrix& m, const std::vector<Scalar>& coeffs) {
    require_square(m, "polynomial evaluation");
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
    // Horner from the top coefficient.
    const ExactMatrix id = ExactMatrix::identity(m.rows(), m.zero());
    ExactMatrix acc = scaled(id, coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * m + scaled(id, coeffs[k]);
    return is_zero_matrix(acc);
}

std::vector<Scalar> shifted_power_polynomial(const Scalar& lambda, unsigned k) {
    std::vector<Scalar> c{one_like(lambda)};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Scalar> next(c.size() + 1, zero_like(lambda));
        for (std::size_t d = 0; d < c.size(); ++d) {
            next[d + 1] = next[d + 1] + c[d];
            next[d] = next[d] - lambda * c[d];
        }
        c = std::move(next);
    }
    return c;
}

MultiPoly fraction_free_determinant(const PolyMatrix& m) { return bareiss_determinant(m); }

QMatrix evaluate(const PolyMatrix& m, const std::vector<mpq_class>& point) {
    return map_entries(m, mpq_class(0), [&](const MultiPoly& p) { return p.evaluate(point); });
}

PolyMatrix constant_poly_matrix(const QMatrix& m, const MultiPoly::VarList& vars) {
    return map_entries(m, MultiPoly(vars), [&](const mpq_class& q) { return MultiPoly(vars, q); });
}

}  // namespace linobs
