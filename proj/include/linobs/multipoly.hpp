#ifndef LINOBS_MULTIPOLY_HPP
#define LINOBS_MULTIPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector, so iteration order is
/// lexicographic with the first variable most significant; the last entry is
/// the leading term. Zero coefficients are never stored. A default-constructed
/// polynomial is an unbound zero that adopts the variable list of whatever it
/// is combined with.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using VarList = std::shared_ptr<const std::vector<std::string>>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars);
    MultiPoly(VarList vars, const mpq_class& constant);

    static VarList make_variables(std::vector<std::string> names);
    static MultiPoly variable(VarList vars, std::size_t index);
    static MultiPoly variable(VarList vars, std::string_view name);

    const VarList& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_ ? vars_->size() : 0; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    mpq_class constant_term() const;
    unsigned total_degree() const;

    /// Lex-leading term; the polynomial must be nonzero.
    const std::pair<const Exponents, mpq_class>& leading_term() const { return *terms_.rbegin(); }

    /// Adds c * x^e.
    void add_term(const Exponents& e, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;

    /// Quotient when d divides this polynomial exactly, otherwise nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    /// Componentwise minimum exponent over all terms (zero vector for 0).
    Exponents min_exponents() const;
    /// Divides every term by x^e; e must be componentwise <= min_exponents().
    MultiPoly divide_monomial(const Exponents& e) const;

    mpq_class evaluate(std::span<const mpq_class> point) const;

    /// Terms in decreasing lex order, e.g. "3*i*l - j*k + 1/2".
    std::string to_string() const;

private:
    void bind(const MultiPoly& o);

    VarList vars_;
    std::map<Exponents, mpq_class> terms_;
};

/// Exact division for fraction-free elimination; throws std::domain_error
/// when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly zero_like(const MultiPoly& x) { return MultiPoly(x.variables()); }
inline MultiPoly one_like(const MultiPoly& x) { return MultiPoly(x.variables(), mpq_class(1)); }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }

}  // namespace linobs

#endif  // LINOBS_MULTIPOLY_HPP
