#ifndef LINOBS_MATRIXCORE_HPP
#define LINOBS_MATRIXCORE_HPP

#include "linobs/linalg.hpp"
#include "linobs/matrix.hpp"
#include "linobs/multipoly.hpp"
#include "linobs/scalar.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linobs {

using ExactMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<MultiPoly>;
using QMatrix = Matrix<mpq_class>;

ExactMatrix zero_matrix(const Field& f, std::size_t rows, std::size_t cols);
ExactMatrix identity_matrix(const Field& f, std::size_t n);
/// Builds a matrix from integer entries.
ExactMatrix int_matrix(const Field& f, const std::vector<std::vector<long long>>& rows);
ExactMatrix from_rational(const Field& f, const QMatrix& m);
ExactMatrix diagonal_matrix(const std::vector<Scalar>& diag);

/// Inverse over the matrix's field. Rational-function matrices go through
/// the adjugate so only one (determinant) denominator appears. Throws
/// std::domain_error for singular input.
ExactMatrix inverse(const ExactMatrix& m);
QMatrix inverse(const QMatrix& m);

/// Integer power; negative exponents invert.
ExactMatrix matrix_pow(const ExactMatrix& m, long long e);

ExactMatrix adjugate(const ExactMatrix& m);

/// X Y X^-1 Y^-1. Throws std::domain_error if X or Y is singular.
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

/// Least e <= bound with X^e = I, or nullopt when no such e exists.
/// Throws std::domain_error for singular X.
std::optional<std::uint64_t> multiplicative_order(const ExactMatrix& x, std::uint64_t bound);

/// Exact order of X when X^multiple = I, found by stripping prime factors
/// off multiple; nullopt when X^multiple != I.
std::optional<std::uint64_t> order_dividing(const ExactMatrix& x, std::uint64_t multiple);

/// Smallest p^k with p^k >= n: the exponent killing any unipotent n x n
/// matrix in characteristic p.
std::uint64_t unipotent_exponent(std::uint64_t p, std::size_t n);

/// Order of X over prime(p), searched among divisors of
/// lcm(p^d - 1, d <= n) * unipotent_exponent(p, n). Every invertible n x n
/// matrix over F_p has order dividing that number. nullopt when X is
/// singular or the multiple does not fit in 64 bits.
std::optional<std::uint64_t> charp_order(const ExactMatrix& x);

/// p(M) == 0 for coefficients listed lowest degree first. Throws
/// std::invalid_argument for an empty coefficient list.
bool satisfies_polynomial(const ExactMatrix& m, const std::vector<Scalar>& coeffs);

/// Coefficients of (t - lambda)^k, lowest degree first.
std::vector<Scalar> shifted_power_polynomial(const Scalar& lambda, unsigned k);

/// Exact determinant of a polynomial matrix by fraction-free elimination.
MultiPoly fraction_free_determinant(const PolyMatrix& m);

/// Substitutes a rational point for the variables.
QMatrix evaluate(const PolyMatrix& m, const std::vector<mpq_class>& point);

/// Polynomial matrix with constant entries (embedding for cross-checks).
PolyMatrix constant_poly_matrix(const QMatrix& m, const MultiPoly::VarList& vars);

}  // namespace linobs

#endif  // LINOBS_MATRIXCORE_HPP
