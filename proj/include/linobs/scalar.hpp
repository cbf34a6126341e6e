#ifndef LINOBS_SCALAR_HPP
#define LINOBS_SCALAR_HPP

#include "linobs/field.hpp"
#include "linobs/ratfun.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace linobs {

/// Element of one of the exact fields described by a FieldDescriptor.
///
/// Payload per kind:
///   rational   - mpq_class in lowest terms
///   prime      - residue in [0, p)
///   cyclotomic - coefficients in zeta of degree < deg Phi_m
///   ratfun     - RatFun over the descriptor's variables
///
/// Mixing scalars from different fields throws std::invalid_argument.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    /// Image of a rational; throws std::domain_error if the denominator
    /// vanishes in characteristic p.
    static Scalar from_rational(const Field& f, const mpq_class& q);
    /// Primitive m-th root of unity of cyclotomic(m).
    static Scalar zeta(const Field& f);
    static Scalar variable(const Field& f, std::string_view name);
    static Scalar from_ratfun(const Field& f, RatFun r);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    /// Integer power; negative exponents invert first.
    Scalar pow(long long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
    const std::vector<mpq_class>& cyclotomic_coefficients() const { return std::get<std::vector<mpq_class>>(value_); }
    const RatFun& ratfun() const { return std::get<RatFun>(value_); }

    /// Canonical text: "-3/4", "5", "1+2*z^3", "(z^2 + 1)/(w)".
    std::string to_string() const;

private:
    using Payload = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>, RatFun>;
    Scalar(Field f, Payload v) : field_(std::move(f)), value_(std::move(v)) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    Payload value_ = mpq_class(0);
};

/// Parses an arithmetic expression (integers, + - * / ^, parentheses) and
/// evaluates it in f. Identifiers: "z" / "zeta" and "ζd" (d | m) in
/// cyclotomic fields, declared variable names in ratfun fields.
Scalar parse_scalar(const Field& f, std::string_view text);

/// Multiplicative order of x, or nullopt for infinite order. Throws
/// std::domain_error for x = 0.
std::optional<std::uint64_t> torsion_order(const Scalar& x);

inline Scalar zero_like(const Scalar& x) { return Scalar::zero(x.field()); }
inline Scalar one_like(const Scalar& x) { return Scalar::one(x.field()); }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

}  // namespace linobs

#endif  // LINOBS_SCALAR_HPP
