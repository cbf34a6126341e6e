#include "linobs/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace linobs {

MultiPoly::MultiPoly(VarList vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarList vars, const mpq_class& constant) : vars_(std::move(vars)) {
    if (constant != 0) terms_.emplace(Exponents(variable_count(), 0), constant);
}

MultiPoly::VarList MultiPoly::make_variables(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly MultiPoly::variable(VarList vars, std::size_t index) {
    if (!vars || index >= vars->size()) throw std::out_of_range("variable index out of range");
    MultiPoly p(vars);
    Exponents e(vars->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), mpq_class(1));
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
    if (vars) {
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it != vars->end()) return variable(vars, static_cast<std::size_t>(it - vars->begin()));
    }
    throw std::invalid_argument("unknown variable: " + std::string(name));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

mpq_class MultiPoly::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [e, c] = *terms_.begin();
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; }) ? c : mpq_class(0);
}

unsigned MultiPoly::total_degree() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

void MultiPoly::bind(const MultiPoly& o) {
    if (!o.vars_ || vars_ == o.vars_) return;
    if (!vars_) {
        vars_ = o.vars_;
        // Unbound constants carry zero-length exponent vectors.
        if (!terms_.empty()) {
            mpq_class c = constant_term();
            terms_.clear();
            terms_.emplace(Exponents(variable_count(), 0), c);
        }
        return;
    }
    if (*vars_ != *o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    if (e.size() != variable_count()) throw std::invalid_argument("exponent vector length mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    bind(o);
    MultiPoly tmp;
    const MultiPoly* src = &o;
    if (o.variable_count() != variable_count()) {
        tmp = o;
        tmp.bind(*this);
        src = &tmp;
    }
    for (const auto& [e, c] : src->terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a, rhs = b;
    lhs.bind(rhs);
    rhs.bind(lhs);
    MultiPoly r(lhs.vars_);
    if (lhs.is_zero() || rhs.is_zero()) return r;
    const std::size_t nv = r.variable_count();
    MultiPoly::Exponents e(nv);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t v = 0; v < nv; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.variable_count() == b.variable_count()) return a.terms_ == b.terms_;
    MultiPoly lhs = a, rhs = b;
    lhs.bind(rhs);
    rhs.bind(lhs);
    return lhs.terms_ == rhs.terms_;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(vars_, mpq_class(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    MultiPoly rem = *this, divisor = d;
    rem.bind(divisor);
    divisor.bind(rem);
    MultiPoly quot(rem.vars_);
    const auto& [lead_e, lead_c] = divisor.leading_term();
    const std::size_t nv = rem.variable_count();
    Exponents shift(nv);
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        for (std::size_t v = 0; v < nv; ++v) {
            if (re[v] < lead_e[v]) return std::nullopt;
            shift[v] = re[v] - lead_e[v];
        }
        const mpq_class c = rc / lead_c;
        quot.add_term(shift, c);
        for (const auto& [e, x] : divisor.terms_) {
            Exponents t(nv);
            for (std::size_t v = 0; v < nv; ++v) t[v] = e[v] + shift[v];
            rem.add_term(t, -c * x);
        }
    }
    return quot;
}

MultiPoly::Exponents MultiPoly::min_exponents() const {
    Exponents m(variable_count(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
            continue;
        }
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
    }
    return m;
}

MultiPoly MultiPoly::divide_monomial(const Exponents& m) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents t = e;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (t[v] < m[v]) throw std::domain_error("monomial does not divide polynomial");
            t[v] -= m[v];
        }
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

mpq_class MultiPoly::evaluate(std::span<const mpq_class> point) const {
    if (point.size() != variable_count()) throw std::invalid_argument("evaluation point has wrong dimension");
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (std::uint32_t k = 0; k < e[v]; ++k) t *= point[v];
        }
        total += t;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += (*vars_)[v];
            if (e[v] > 1) mono += '^' + std::to_string(e[v]);
        }
        mpq_class mag = abs(c);
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + '*' + mono;
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *std::move(q);
}

}  // namespace linobs
