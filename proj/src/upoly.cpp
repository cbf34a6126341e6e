#include "linobs/upoly.hpp"

#include <stdexcept>

namespace linobs::upoly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {Poly{}, rem};
    Poly quot(rem.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        mpq_class c = rem.back() / lead;
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly inverse_mod(const Poly& a, const Poly& modulus) {
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = modulus, r1 = divmod(a, modulus).second;
    Poly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw std::domain_error("element not invertible modulo the cyclotomic polynomial");
    mpq_class c = r0[0];
    for (auto& x : s0) x /= c;
    return divmod(s0, modulus).second;
}

Poly cyclotomic(unsigned m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be at least 1");
    Poly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic(d));
        p = std::move(q);
    }
    return p;
}

}  // namespace linobs::upoly
