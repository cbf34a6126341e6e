#ifndef LINOBS_RATFUN_HPP
#define LINOBS_RATFUN_HPP

#include "linobs/multipoly.hpp"

#include <string>

namespace linobs {

/// Quotient of two multivariate polynomials over Q.
///
/// No multivariate gcd is taken. After every operation the pair is tidied:
/// an exactly dividing denominator is folded into the numerator, common
/// monomial factors are cancelled and the denominator is scaled to have
/// leading coefficient 1. Equality is decided by cross-multiplication, so it
/// does not depend on how far the tidying got.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(MultiPoly num);
    RatFun(MultiPoly num, MultiPoly den);

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const { return RatFun(-num_, den_); }
    RatFun inverse() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

    /// "(num)/(den)", or just the numerator when the denominator is 1.
    std::string to_string() const;

private:
    void tidy();

    MultiPoly num_;
    MultiPoly den_{MultiPoly::VarList{}, mpq_class(1)};
};

/// f == g as rational functions: f.num * g.den - g.num * f.den is the zero
/// polynomial. Throws std::domain_error on a zero denominator.
bool ratfun_equal(const RatFun& f, const RatFun& g);

inline bool operator==(const RatFun& a, const RatFun& b) { return ratfun_equal(a, b); }

}  // namespace linobs

#endif  // LINOBS_RATFUN_HPP
