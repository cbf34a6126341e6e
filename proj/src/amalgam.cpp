#include "linobs/amalgam.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linobs {

namespace {

Side side_of(char gen) {
    switch (gen) {
        case 'X': case 'Y': case 'S': case 'A': return Side::left;
        case 'U': case 'V': case 'T': case 'B': return Side::right;
        default: throw std::invalid_argument(std::string("unknown generator '") + gen + "'");
    }
}

char central_of(Side s) { return s == Side::left ? 'S' : 'T'; }

std::vector<Letter> commutator_letters(Side s) {
    const char a = s == Side::left ? 'X' : 'U';
    const char b = s == Side::left ? 'Y' : 'V';
    return {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
}

std::vector<Letter> invert(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

std::vector<Letter> letter_power(const std::vector<Letter>& w, long long e) {
    const auto base = e < 0 ? invert(w) : w;
    std::vector<Letter> out;
    for (long long r = 0; r < (e < 0 ? -e : e); ++r) out.insert(out.end(), base.begin(), base.end());
    return out;
}

std::vector<Letter> free_reduce(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    for (const auto& x : w) {
        if (x.exp == 0) continue;
        if (!out.empty() && out.back().gen == x.gen) {
            out.back().exp += x.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    return out;
}

long long parse_exponent(std::string_view text, std::string_view token) {
    if (text.empty()) throw std::invalid_argument("missing exponent in '" + std::string(token) + "'");
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("missing exponent in '" + std::string(token) + "'");
    long long v = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("bad exponent in '" + std::string(token) + "'");
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000) throw std::invalid_argument("exponent too large in '" + std::string(token) + "'");
    }
    return neg ? -v : v;
}

Syllable parse_segment(std::string_view seg) {
    std::istringstream in{std::string(seg)};
    std::string token;
    Syllable s;
    bool have_side = false;
    while (in >> token) {
        if (token == "1") continue;
        const char gen = token[0];
        long long e = 1;
        if (token.size() > 1) {
            if (token[1] != '^') throw std::invalid_argument("bad token '" + token + "'");
            e = parse_exponent(std::string_view(token).substr(2), token);
        }
        const Side side = side_of(gen);
        if (have_side && side != s.side)
            throw std::invalid_argument("segment '" + std::string(seg) + "' mixes generators of both factors");
        s.side = side;
        have_side = true;
        if (gen == 'S' || gen == 'T') {
            s.central += e;
        } else if (gen == 'A' || gen == 'B') {
            const auto c = letter_power(commutator_letters(side), e);
            s.free_part.insert(s.free_part.end(), c.begin(), c.end());
        } else {
            s.free_part.push_back({gen, e});
        }
    }
    s.free_part = free_reduce(s.free_part);
    return s;
}

std::string syllable_text(const Syllable& s) {
    std::string out;
    auto emit = [&](char gen, long long e) {
        if (!out.empty()) out += ' ';
        out += gen;
        if (e != 1) out += '^' + std::to_string(e);
    };
    for (const auto& x : s.free_part) emit(x.gen, x.exp);
    if (s.central != 0) emit(central_of(s.side), s.central);
    return out.empty() ? "1" : out;
}

ExactMatrix commutator_image(const Representation& rho, Side s) {
    return s == Side::left ? commutator(rho['X'], rho['Y']) : commutator(rho['U'], rho['V']);
}

bool is_diagonal(const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (r != c && !m(r, c).is_zero()) return false;
    return true;
}

std::optional<std::uint64_t> char_zero_order(const ExactMatrix& x) {
    if (x.zero().field().kind() == FieldKind::ratfun) return std::nullopt;
    if (is_diagonal(x)) {
        std::uint64_t e = 1;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            const auto o = torsion_order(x(r, r));
            if (!o) return std::nullopt;
            e = std::lcm(e, *o);
        }
        return order_dividing(x, e);
    }
    return multiplicative_order(x, 120);
}

}  // namespace

GroupWord GroupWord::parse(std::string_view text) {
    GroupWord w;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        const auto seg = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        if (seg.find_first_not_of(" \t") == std::string_view::npos) {
            if (bar != std::string_view::npos || start != 0) throw std::invalid_argument("empty syllable in word");
        } else {
            Syllable s = parse_segment(seg);
            // A segment of "1" tokens is the identity and contributes nothing.
            if (seg.find_first_not_of(" \t1") != std::string_view::npos) w.syllables.push_back(std::move(s));
        }
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return w;
}

std::string GroupWord::to_string() const {
    if (syllables.empty()) return "1";
    std::string out;
    for (std::size_t s = 0; s < syllables.size(); ++s) {
        if (s) out += " | ";
        out += syllable_text(syllables[s]);
    }
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
        w.syllables.push_back({it->side, invert(it->free_part), -it->central});
    return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    w.syllables.insert(w.syllables.end(), b.syllables.begin(), b.syllables.end());
    return w;
}

GroupWord normal_form(const GroupWord& w) {
    GroupWord out;
    for (const auto& s : w.syllables) {
        Syllable cur{s.side, free_reduce(s.free_part), s.central};
        if (!out.syllables.empty() && out.syllables.back().side == cur.side) {
            Syllable& top = out.syllables.back();
            top.free_part.insert(top.free_part.end(), cur.free_part.begin(), cur.free_part.end());
            top.free_part = free_reduce(top.free_part);
            top.central += cur.central;
            if (top.is_identity()) out.syllables.pop_back();
        } else if (!cur.is_identity()) {
            out.syllables.push_back(std::move(cur));
        }
    }
    return out;
}

std::optional<std::pair<long long, long long>> peripheral_exponents(const Syllable& s) {
    const auto& f = s.free_part;
    if (f.size() % 4 != 0) return std::nullopt;
    const long long m = static_cast<long long>(f.size() / 4);
    if (f == letter_power(commutator_letters(s.side), m)) return std::pair{m, s.central};
    if (f == letter_power(commutator_letters(s.side), -m)) return std::pair{-m, s.central};
    return std::nullopt;
}

GroupWord substitute_peripheral(const GroupWord& w, const GluingData& g, Side target) {
    GroupWord out;
    for (const auto& s : normal_form(w).syllables) {
        const auto pe = peripheral_exponents(s);
        if (s.side == target || !pe) {
            out.syllables.push_back(s);
            continue;
        }
        const auto [m, n] = *pe;
        long long am, cn;
        if (target == Side::left) {
            am = g.i * m + g.k * n;
            cn = g.j * m + g.l * n;
        } else {
            am = g.l * m - g.k * n;
            cn = -g.j * m + g.i * n;
        }
        out.syllables.push_back({target, free_reduce(letter_power(commutator_letters(target), am)), cn});
    }
    return normal_form(out);
}

const ExactMatrix& Representation::operator[](char gen) const {
    const auto it = images.find(gen);
    if (it == images.end()) throw std::invalid_argument(std::string("representation has no image for ") + gen);
    return it->second;
}

void validate_representation(const Representation& rho) {
    if (rho.dim == 0) throw std::invalid_argument("representation dimension must be positive");
    for (char gen : std::string("XYSUVT")) {
        const ExactMatrix& m = rho[gen];
        if (m.rows() != rho.dim || m.cols() != rho.dim)
            throw std::invalid_argument(std::string("image of ") + gen + " has the wrong size");
        if (!(m.zero().field() == rho.field))
            throw std::invalid_argument(std::string("image of ") + gen + " is over another field");
        if (determinant(m).is_zero()) throw std::invalid_argument(std::string("image of ") + gen + " is singular");
    }
    if (rho.images.size() != 6) throw std::invalid_argument("representation has extra generators");
}

Representation trivial_representation(const Field& f, std::size_t dim) {
    Representation rho{f, dim, {}};
    for (char gen : std::string("XYSUVT")) rho.images.emplace(gen, identity_matrix(f, dim));
    return rho;
}

ExactMatrix evaluate_word(const Representation& rho, const GroupWord& w) {
    ExactMatrix acc = identity_matrix(rho.field, rho.dim);
    for (const auto& s : w.syllables) {
        for (const auto& x : s.free_part) {
            if (side_of(x.gen) != s.side) throw std::invalid_argument("letter on the wrong side of its syllable");
            acc = acc * matrix_pow(rho[x.gen], x.exp);
        }
        if (s.central != 0) acc = acc * matrix_pow(rho[central_of(s.side)], s.central);
    }
    return acc;
}

RelationReport check_representation(const Representation& rho, const GluingData& g) {
    validate_representation(rho);
    RelationReport r;
    auto check = [&](const std::string& name, bool holds) {
        r.checked.push_back(name);
        if (!holds) r.violations.push_back(name);
    };
    auto commute = [](const ExactMatrix& a, const ExactMatrix& b) { return a * b == b * a; };
    check("S commutes with X", commute(rho['S'], rho['X']));
    check("S commutes with Y", commute(rho['S'], rho['Y']));
    check("T commutes with U", commute(rho['T'], rho['U']));
    check("T commutes with V", commute(rho['T'], rho['V']));
    const ExactMatrix a = commutator_image(rho, Side::left);
    const ExactMatrix b = commutator_image(rho, Side::right);
    check("B = A^i S^j", b == matrix_pow(a, g.i) * matrix_pow(rho['S'], g.j));
    check("T = A^k S^l", rho['T'] == matrix_pow(a, g.k) * matrix_pow(rho['S'], g.l));
    return r;
}

Certificate unfaithfulness_certificate(const Representation& rho, const GluingData& g) {
    const RelationReport rel = check_representation(rho, g);
    if (!rel.ok()) throw std::invalid_argument("representation violates " + rel.violations.front());
    const std::uint64_t p = rho.field.characteristic();
    const std::pair<char, ExactMatrix> candidates[] = {{'S', rho['S']}, {'A', commutator_image(rho, Side::left)}};
    for (const auto& [name, x] : candidates) {
        const auto e = p ? charp_order(x) : char_zero_order(x);
        if (!e) continue;
        Certificate c;
        c.found = true;
        c.element = name;
        c.exponent = *e;
        c.text = std::string(1, name) + (*e == 1 ? "" : "^" + std::to_string(*e)) + " ∈ kernel";
        return c;
    }
    return {false, 0, 0,
            "inconclusive: S and A have no finite image order found; see the lemma61, case1, case2 and case3 labs"};
}

TorsionSolution adjugate_solution(const BlockSystem& sys, const GluingData& g, std::size_t col) {
    if (col >= sys.size()) throw std::invalid_argument("adjugate column out of range");
    const Field q{};
    const ExactMatrix m = from_rational(q, evaluate_system(sys, g));
    const mpq_class det = determinant(m).rational();
    if (det == 0) throw std::invalid_argument("system is singular at " + g.to_string());
    const ExactMatrix adj = adjugate(m);
    TorsionSolution out;
    out.modulus = abs(det.get_num());
    for (std::size_t r = 0; r < adj.rows(); ++r) out.x.push_back(adj(r, col).rational().get_num());
    return out;
}

Representation torsion_representation(const BlockPattern& ps, const BlockPattern& pt, const GluingData& g,
                                      const std::vector<mpz_class>& x, unsigned m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    const BlockSystem sys = build_block_system(ps, pt);
    if (x.size() != sys.size()) throw std::invalid_argument("solution has the wrong length");
    const QMatrix mat = evaluate_system(sys, g);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < mat.cols(); ++c) acc += mat(r, c).get_num() * x[c];
        if (acc % m != 0) throw std::invalid_argument("vector does not solve the block system mod " + std::to_string(m));
    }

    const std::size_t n = ps.n();
    const Field f(m <= 2 ? FieldDescriptor::rational() : FieldDescriptor::cyclotomic(m));
    const Scalar zeta = m == 1 ? Scalar::one(f) : m == 2 ? Scalar::from_int(f, -1) : Scalar::zeta(f);
    auto root = [&](const mpz_class& e) {
        mpz_class r = e % m;
        if (r < 0) r += m;
        return zeta.pow(r.get_si());
    };
    auto a = [&](std::size_t c) { return x[c]; };
    auto s = [&](std::size_t c) { return x[n + ps.labels()[c]]; };
    auto t = [&](std::size_t c) { return x[n + sys.d + pt.labels()[c]]; };

    // Shift P on each block with P D P^-1 D^-1 = diag(zeta^e); the block
    // sums of e vanish mod m, so the diagonal D closes up.
    auto commutator_pair = [&](const BlockPattern& blocks, auto exponent) {
        ExactMatrix shift = zero_matrix(f, n, n);
        std::vector<Scalar> diag(n, Scalar::one(f));
        for (const auto& block : blocks.blocks()) {
            const std::size_t r = block.size();
            mpz_class delta = 0;
            for (std::size_t q = 0; q < r; ++q) {
                shift(block[(q + 1) % r], block[q]) = Scalar::one(f);
                if (q > 0) delta -= exponent(block[q]);
                diag[block[q]] = root(delta);
            }
        }
        return std::pair{shift, diagonal_matrix(diag)};
    };

    Representation rho{f, n, {}};
    auto [px, dy] = commutator_pair(ps, a);
    auto [pu, dv] = commutator_pair(pt, [&](std::size_t c) -> mpz_class { return mpz_class(static_cast<long>(g.i)) * a(c) + mpz_class(static_cast<long>(g.j)) * s(c); });
    std::vector<Scalar> sd, td;
    for (std::size_t c = 0; c < n; ++c) {
        sd.push_back(root(s(c)));
        td.push_back(root(t(c)));
    }
    rho.images.emplace('X', std::move(px));
    rho.images.emplace('Y', std::move(dy));
    rho.images.emplace('S', diagonal_matrix(sd));
    rho.images.emplace('U', std::move(pu));
    rho.images.emplace('V', std::move(dv));
    rho.images.emplace('T', diagonal_matrix(td));
    return rho;
}

}  // namespace linobs
