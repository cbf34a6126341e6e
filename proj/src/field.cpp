#include "linobs/field.hpp"

#include "linobs/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace linobs {

namespace {

std::uint64_t parse_unsigned(std::string_view text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string("missing ") + what);
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad ") + what + ": " + std::string(text));
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace

FieldDescriptor FieldDescriptor::rational() { return {}; }

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    FieldDescriptor d;
    d.kind = FieldKind::prime;
    d.p = p;
    return d;
}

FieldDescriptor FieldDescriptor::cyclotomic(unsigned m) {
    FieldDescriptor d;
    d.kind = FieldKind::cyclotomic;
    d.m = m;
    return d;
}

FieldDescriptor FieldDescriptor::ratfun(std::vector<std::string> variables) {
    FieldDescriptor d;
    d.kind = FieldKind::ratfun;
    d.variables = std::move(variables);
    return d;
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rational();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("unknown field descriptor: " + std::string(text));
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    if (head == "fp" || head == "prime") return prime(parse_unsigned(tail, "prime"));
    if (head == "cyclotomic") return cyclotomic(static_cast<unsigned>(parse_unsigned(tail, "cyclotomic order")));
    if (head == "ratfun") {
        std::vector<std::string> vars;
        std::size_t start = 0;
        while (start <= tail.size()) {
            auto comma = tail.find(',', start);
            if (comma == std::string_view::npos) comma = tail.size();
            vars.emplace_back(tail.substr(start, comma - start));
            start = comma + 1;
        }
        return ratfun(std::move(vars));
    }
    throw std::invalid_argument("unknown field descriptor: " + std::string(text));
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::rational: return "rational";
        case FieldKind::prime: return "fp:" + std::to_string(p);
        case FieldKind::cyclotomic: return "cyclotomic:" + std::to_string(m);
        case FieldKind::ratfun: {
            std::string s = "ratfun:";
            for (std::size_t i = 0; i < variables.size(); ++i) {
                if (i) s += ',';
                s += variables[i];
            }
            return s;
        }
    }
    return "rational";
}

void FieldDescriptor::validate() const {
    switch (kind) {
        case FieldKind::rational: return;
        case FieldKind::prime:
            if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
            return;
        case FieldKind::cyclotomic:
            if (m < 1) throw std::invalid_argument("cyclotomic order must be at least 1");
            return;
        case FieldKind::ratfun: {
            std::set<std::string> seen;
            for (const auto& v : variables) {
                if (v.empty()) throw std::invalid_argument("empty variable name");
                if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_')
                    throw std::invalid_argument("variable names must start with a letter: " + v);
                if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
            }
            return;
        }
    }
}

std::shared_ptr<const Field::Impl> Field::make_impl(const FieldDescriptor& desc) {
    desc.validate();
    auto impl = std::make_shared<Impl>();
    impl->desc = desc;
    if (desc.kind == FieldKind::cyclotomic) impl->phi = upoly::cyclotomic(desc.m);
    impl->vars = std::make_shared<const std::vector<std::string>>(desc.variables);
    return impl;
}

Field::Field() {
    static const std::shared_ptr<const Impl> rationals = make_impl(FieldDescriptor::rational());
    impl_ = rationals;
}

Field::Field(const FieldDescriptor& desc) : impl_(make_impl(desc)) {}

Field field_make(const FieldDescriptor& desc) { return Field(desc); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= n / q; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace linobs
