#include "linobs/scalar.hpp"

#include "linobs/upoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace linobs {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
    mpz_class r;
    mpz_class pm;
    mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pm.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

upoly::Poly reduce_cyclo(upoly::Poly a, const Field& f) {
    upoly::trim(a);
    if (a.size() >= f.cyclotomic_modulus().size()) a = upoly::divmod(a, f.cyclotomic_modulus()).second;
    return a;
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) { return from_rational(f, mpq_class(mpz_class(std::to_string(v)))); }

Scalar Scalar::from_rational(const Field& f, const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    switch (f.kind()) {
        case FieldKind::rational: return Scalar(f, q);
        case FieldKind::prime: {
            const u64 p = f.descriptor().p;
            const u64 den = reduce_mpz(q.get_den(), p);
            if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
            return Scalar(f, mulmod(reduce_mpz(q.get_num(), p), powmod(den, p - 2, p), p));
        }
        case FieldKind::cyclotomic: {
            upoly::Poly c;
            if (q != 0) c.push_back(q);
            return Scalar(f, std::move(c));
        }
        case FieldKind::ratfun:
            return Scalar(f, RatFun(MultiPoly(f.variable_names(), q)));
    }
    throw std::logic_error("unreachable field kind");
}

Scalar Scalar::zeta(const Field& f) {
    if (f.kind() != FieldKind::cyclotomic) throw std::invalid_argument("zeta requires a cyclotomic field");
    return Scalar(f, reduce_cyclo(upoly::Poly{mpq_class(0), mpq_class(1)}, f));
}

Scalar Scalar::variable(const Field& f, std::string_view name) {
    if (f.kind() != FieldKind::ratfun) throw std::invalid_argument("variables require a ratfun field");
    return Scalar(f, RatFun(MultiPoly::variable(f.variable_names(), name)));
}

Scalar Scalar::from_ratfun(const Field& f, RatFun r) {
    if (f.kind() != FieldKind::ratfun) throw std::invalid_argument("rational functions require a ratfun field");
    return Scalar(f, std::move(r));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("scalars from different fields: " + field_.descriptor().to_string() + " vs " +
                                    o.field_.descriptor().to_string());
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::rational: return rational() == 0;
        case FieldKind::prime: return residue() == 0;
        case FieldKind::cyclotomic: return cyclotomic_coefficients().empty();
        case FieldKind::ratfun: return ratfun().is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const {
    switch (field_.kind()) {
        case FieldKind::rational: return Scalar(field_, mpq_class(-rational()));
        case FieldKind::prime: {
            const u64 p = field_.descriptor().p;
            return Scalar(field_, residue() == 0 ? u64{0} : p - residue());
        }
        case FieldKind::cyclotomic: {
            auto c = cyclotomic_coefficients();
            for (auto& x : c) x = -x;
            return Scalar(field_, std::move(c));
        }
        case FieldKind::ratfun: return Scalar(field_, -ratfun());
    }
    return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    switch (field_.kind()) {
        case FieldKind::rational: std::get<mpq_class>(value_) += o.rational(); break;
        case FieldKind::prime: {
            const u64 p = field_.descriptor().p;
            u64 s = residue() + o.residue();
            if (s >= p || s < residue()) s -= p;
            value_ = s;
            break;
        }
        case FieldKind::cyclotomic: value_ = upoly::add(cyclotomic_coefficients(), o.cyclotomic_coefficients()); break;
        case FieldKind::ratfun: value_ = ratfun() + o.ratfun(); break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    switch (field_.kind()) {
        case FieldKind::rational: std::get<mpq_class>(value_) *= o.rational(); break;
        case FieldKind::prime: value_ = mulmod(residue(), o.residue(), field_.descriptor().p); break;
        case FieldKind::cyclotomic:
            value_ = reduce_cyclo(upoly::mul(cyclotomic_coefficients(), o.cyclotomic_coefficients()), field_);
            break;
        case FieldKind::ratfun: value_ = ratfun() * o.ratfun(); break;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    switch (field_.kind()) {
        case FieldKind::rational: return Scalar(field_, mpq_class(1 / rational()));
        case FieldKind::prime: {
            const u64 p = field_.descriptor().p;
            return Scalar(field_, powmod(residue(), p - 2, p));
        }
        case FieldKind::cyclotomic:
            return Scalar(field_, upoly::inverse_mod(cyclotomic_coefficients(), field_.cyclotomic_modulus()));
        case FieldKind::ratfun: return Scalar(field_, ratfun().inverse());
    }
    return *this;
}

Scalar Scalar::pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    Scalar r = one(field_);
    while (n) {
        if (n & 1u) r *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    switch (a.field_.kind()) {
        case FieldKind::rational: return a.rational() == b.rational();
        case FieldKind::prime: return a.residue() == b.residue();
        case FieldKind::cyclotomic: return a.cyclotomic_coefficients() == b.cyclotomic_coefficients();
        case FieldKind::ratfun: return ratfun_equal(a.ratfun(), b.ratfun());
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_.kind()) {
        case FieldKind::rational: return rational().get_str();
        case FieldKind::prime: return std::to_string(residue());
        case FieldKind::cyclotomic: {
            const auto& c = cyclotomic_coefficients();
            if (c.empty()) return "0";
            std::string out;
            for (std::size_t d = 0; d < c.size(); ++d) {
                if (c[d] == 0) continue;
                std::string term;
                if (d == 0) {
                    term = c[d].get_str();
                } else {
                    const std::string mono = d == 1 ? "z" : "z^" + std::to_string(d);
                    if (c[d] == 1) term = mono;
                    else if (c[d] == -1) term = "-" + mono;
                    else term = c[d].get_str() + "*" + mono;
                }
                if (!out.empty() && term[0] != '-') out += '+';
                out += term;
            }
            return out;
        }
        case FieldKind::ratfun: return ratfun().to_string();
    }
    return {};
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
public:
    ExprParser(const Field& f, std::string_view text) : field_(f), text_(normalize(text)) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    // Folds the unicode minus sign to ASCII and "ζ" to a marker byte.
    static std::string normalize(std::string_view in) {
        std::string out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (in.substr(i, 3) == "\xE2\x88\x92") {
                out += '-';
                i += 2;
            } else if (in.substr(i, 2) == "\xCE\xB6") {
                out += '\x01';
                i += 1;
            } else {
                out += in[i];
            }
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar \"" + text_ + "\": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (accept('*')) v *= unary();
            else if (accept('/')) v /= unary();
            else return v;
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            bool paren = accept('(');
            bool neg = accept('-');
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) fail("exponent must be an integer");
            if (paren && !accept(')')) fail("missing ')'");
            long long e = std::stoll(digits);
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    std::string read_digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return d;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Scalar v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Scalar::from_rational(field_, mpq_class(mpz_class(read_digits())));
        }
        if (c == '\x01') {
            ++pos_;
            return root_of_unity(read_digits());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            return identifier(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Scalar root_of_unity(const std::string& order) {
        if (field_.kind() != FieldKind::cyclotomic) fail("roots of unity need a cyclotomic field");
        const unsigned m = field_.descriptor().m;
        if (order.empty()) return Scalar::zeta(field_);
        const unsigned long d = std::stoul(order);
        if (d == 0 || m % d != 0) fail("zeta order " + order + " does not divide " + std::to_string(m));
        return Scalar::zeta(field_).pow(static_cast<long long>(m / d));
    }

    Scalar identifier(const std::string& name) {
        if (field_.kind() == FieldKind::ratfun) return Scalar::variable(field_, name);
        if (field_.kind() == FieldKind::cyclotomic) {
            if (name == "z" || name == "zeta") return Scalar::zeta(field_);
            if (name.rfind("zeta", 0) == 0) return root_of_unity(name.substr(4));
        }
        fail("unknown identifier '" + name + "'");
    }

    Field field_;
    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const Field& f, std::string_view text) { return ExprParser(f, text).parse(); }

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> torsion_order(const Scalar& x) {
    if (x.is_zero()) throw std::domain_error("torsion order of zero");
    const Field& f = x.field();
    std::uint64_t multiple = 0;
    switch (f.kind()) {
        case FieldKind::rational:
            if (x.rational() == 1) return 1;
            if (x.rational() == -1) return 2;
            return std::nullopt;
        case FieldKind::prime: multiple = f.descriptor().p - 1; break;
        case FieldKind::cyclotomic: {
            // Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
            multiple = std::lcm<std::uint64_t>(2, f.descriptor().m);
            break;
        }
        case FieldKind::ratfun: {
            const RatFun& r = x.ratfun();
            if (!r.numerator().is_constant() || !r.denominator().is_constant()) return std::nullopt;
            const mpq_class q = r.numerator().constant_term() / r.denominator().constant_term();
            if (q == 1) return 1;
            if (q == -1) return 2;
            return std::nullopt;
        }
    }
    if (multiple == 0 || !x.pow(static_cast<long long>(multiple)).is_one()) return std::nullopt;
    std::uint64_t e = multiple;
    for (auto q : prime_factors(multiple)) {
        while (e % q == 0 && x.pow(static_cast<long long>(e / q)).is_one()) e /= q;
    }
    return e;
}

}  // namespace linobs
