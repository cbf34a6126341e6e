#include "linobs/gluing.hpp"

#include <set>
#include <stdexcept>

namespace linobs {

namespace {

using Mat2 = std::array<long long, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

long long parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::size_t used = 0;
    const std::string str(s);
    long long v = 0;
    try {
        v = std::stoll(str, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + str + "'");
    }
    if (used != str.size()) throw std::invalid_argument("not an integer: '" + str + "'");
    return v;
}

}  // namespace

std::string GluingData::to_string() const {
    return std::to_string(i) + ',' + std::to_string(j) + ',' + std::to_string(k) + ',' + std::to_string(l);
}

GluingData validate_gluing(long long i, long long j, long long k, long long l) {
    const long long det = i * l - j * k;
    GluingData g;
    if (det == -1) {
        k = -k;
        l = -l;
        g.flipped = true;
    } else if (det != 1) {
        throw std::invalid_argument("gluing determinant il-jk = " + std::to_string(det) + ", expected 1 or -1");
    }
    g.i = i;
    g.j = j;
    g.k = k;
    g.l = l;
    g.all_nonzero = i != 0 && j != 0 && k != 0 && l != 0;
    g.parity_ok = j % 2 != 0 && k % 2 != 0 && i != 0 && l != 0 && i % 2 == 0 && l % 2 == 0;
    return g;
}

GluingData parse_gluing(std::string_view text) {
    std::vector<long long> v;
    while (true) {
        const auto comma = text.find(',');
        v.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (v.size() != 4) throw std::invalid_argument("gluing needs four integers i,j,k,l");
    return validate_gluing(v[0], v[1], v[2], v[3]);
}

GluingData inverse_gluing(const GluingData& g) { return validate_gluing(g.l, -g.j, -g.k, g.i); }

GluingGenerator GluingGenerator::parse(std::string_view text) {
    GluingGenerator gen;
    bool saw_length = false;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.starts_with("len=")) {
            const long long len = parse_int(item.substr(4));
            if (len < 0 || len > 16) throw std::invalid_argument("generator length must be in [0,16]");
            gen.max_length = static_cast<unsigned>(len);
            saw_length = true;
        } else if (item.starts_with("limit=")) {
            const long long lim = parse_int(item.substr(6));
            if (lim < 0) throw std::invalid_argument("limit must be nonnegative");
            gen.limit = static_cast<std::size_t>(lim);
        } else if (item == "nonzero") {
            gen.nonzero = true;
        } else if (item == "any") {
            gen.nonzero = false;
        } else if (item == "parity") {
            gen.parity = true;
        } else {
            throw std::invalid_argument("unknown generator option '" + std::string(item) + "'");
        }
    }
    if (!saw_length) throw std::invalid_argument("generator needs len=<n>");
    return gen;
}

std::string GluingGenerator::to_string() const {
    std::string s = "len=" + std::to_string(max_length) + (nonzero ? ",nonzero" : ",any");
    if (parity) s += ",parity";
    if (limit) s += ",limit=" + std::to_string(limit);
    return s;
}

std::vector<GluingData> generate_gluings(const GluingGenerator& gen) {
    const std::array<Mat2, 4> gens{Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}, Mat2{1, -1, 0, 1}, Mat2{1, 0, -1, 1}};
    std::set<Mat2> seen{Mat2{1, 0, 0, 1}};
    std::vector<Mat2> order{Mat2{1, 0, 0, 1}};
    std::vector<Mat2> frontier = order;
    for (unsigned len = 1; len <= gen.max_length; ++len) {
        std::vector<Mat2> next;
        for (const auto& m : frontier) {
            for (const auto& g : gens) {
                const Mat2 p = mul(m, g);
                if (seen.insert(p).second) {
                    next.push_back(p);
                    order.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<GluingData> out;
    for (const auto& m : order) {
        const GluingData g = validate_gluing(m[0], m[1], m[2], m[3]);
        if (gen.nonzero && !g.all_nonzero) continue;
        if (gen.parity && !g.parity_ok) continue;
        out.push_back(g);
        if (gen.limit && out.size() == gen.limit) break;
    }
    return out;
}

}  // namespace linobs
