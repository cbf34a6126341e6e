#ifndef LINOBS_UPOLY_HPP
#define LINOBS_UPOLY_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

// Dense univariate polynomials over Q, coefficient of x^d at index d.
// Used for cyclotomic arithmetic; the zero polynomial is the empty vector.
namespace linobs::upoly {

using Poly = std::vector<mpq_class>;

void trim(Poly& a);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Inverse of a modulo an irreducible modulus. Throws std::domain_error
/// when a shares a factor with the modulus.
Poly inverse_mod(const Poly& a, const Poly& modulus);

/// m-th cyclotomic polynomial by dividing x^m - 1 by Phi_d for d | m, d < m.
Poly cyclotomic(unsigned m);

}  // namespace linobs::upoly

#endif  // LINOBS_UPOLY_HPP
