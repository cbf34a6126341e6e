#include "linobs/ratfun.hpp"

#include <stdexcept>

namespace linobs {

RatFun::RatFun(MultiPoly num) : num_(std::move(num)), den_(num_.variables(), mpq_class(1)) {}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    tidy();
}

void RatFun::tidy() {
    if (num_.is_zero()) {
        den_ = one_like(den_);
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = *std::move(q);
            den_ = one_like(den_);
            return;
        }
        // Cancel the largest monomial dividing both.
        auto mn = num_.min_exponents();
        const auto md = den_.min_exponents();
        bool any = false;
        for (std::size_t v = 0; v < mn.size() && v < md.size(); ++v) {
            mn[v] = std::min(mn[v], md[v]);
            any = any || mn[v] != 0;
        }
        if (any && mn.size() == md.size()) {
            num_ = num_.divide_monomial(mn);
            den_ = den_.divide_monomial(mn);
        }
    }
    const mpq_class lead = den_.leading_term().second;
    if (lead != 1) {
        const mpq_class inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratfun_equal(const RatFun& f, const RatFun& g) {
    if (f.denominator().is_zero() || g.denominator().is_zero())
        throw std::domain_error("rational function with zero denominator");
    return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

}  // namespace linobs
