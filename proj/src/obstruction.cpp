#include "linobs/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linobs {

namespace {

// Renumbers labels by first appearance.
std::vector<std::size_t> normalize_labels(const std::vector<std::size_t>& raw) {
    std::vector<std::size_t> map(raw.size() + 1, SIZE_MAX);
    std::vector<std::size_t> out(raw.size());
    std::size_t next = 0;
    for (std::size_t c = 0; c < raw.size(); ++c) {
        if (raw[c] >= map.size()) map.resize(raw[c] + 1, SIZE_MAX);
        if (map[raw[c]] == SIZE_MAX) map[raw[c]] = next++;
        out[c] = map[raw[c]];
    }
    return out;
}

// Labels of the partition moved by c -> perm[c], given inv = perm^-1.
void relabel_into(const std::vector<std::size_t>& labels, const std::vector<std::size_t>& inv,
                  std::vector<std::size_t>& out, std::vector<std::size_t>& scratch) {
    const std::size_t n = labels.size();
    std::fill(scratch.begin(), scratch.end(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t b = labels[inv[p]];
        if (scratch[b] == SIZE_MAX) scratch[b] = next++;
        out[p] = scratch[b];
    }
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t c = 0; c < perm.size(); ++c) inv[perm[c]] = c;
    return inv;
}

// Permutation sending s to consecutive blocks of nonincreasing size.
std::vector<std::size_t> sorting_permutation(const BlockPattern& s) {
    std::vector<std::size_t> order(s.block_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.blocks()[a].size() > s.blocks()[b].size(); });
    std::vector<std::size_t> perm(s.n());
    std::size_t pos = 0;
    for (auto b : order)
        for (auto c : s.blocks()[b]) perm[c] = pos++;
    return perm;
}

// Inverses of all permutations fixing the labels of s.
std::vector<std::vector<std::size_t>> stabilizer_inverses(const BlockPattern& s) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> perm(s.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> buf(s.n()), scratch(s.n() + 1);
    do {
        const auto inv = invert(perm);
        relabel_into(s.labels(), inv, buf, scratch);
        if (buf == s.labels()) out.push_back(inv);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::size_t> min_under(const std::vector<std::size_t>& labels,
                                   const std::vector<std::vector<std::size_t>>& inverses) {
    std::vector<std::size_t> best = labels, buf(labels.size()), scratch(labels.size() + 1);
    for (const auto& inv : inverses) {
        relabel_into(labels, inv, buf, scratch);
        if (buf < best) best = buf;
    }
    return best;
}

void integer_partitions(std::size_t n, std::size_t cap, std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(n, cap); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v) {
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class z = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(z);
    }
    if (g != 0 && g != 1)
        for (auto& z : out) z /= g;
    // First nonzero entry positive.
    for (const auto& z : out) {
        if (z == 0) continue;
        if (z < 0)
            for (auto& w : out) w = -w;
        break;
    }
    return out;
}

}  // namespace

BlockPattern::BlockPattern(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n) {
    std::vector<std::size_t> raw(n, SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block in partition");
        for (auto c : blocks[b]) {
            if (c >= n) throw std::invalid_argument("partition element " + std::to_string(c + 1) + " exceeds n");
            if (raw[c] != SIZE_MAX) throw std::invalid_argument("element " + std::to_string(c + 1) + " repeated");
            raw[c] = b;
        }
    }
    for (std::size_t c = 0; c < n; ++c)
        if (raw[c] == SIZE_MAX) throw std::invalid_argument("element " + std::to_string(c + 1) + " missing");
    *this = from_labels(raw);
}

BlockPattern BlockPattern::from_labels(const std::vector<std::size_t>& labels) {
    BlockPattern p;
    p.n_ = labels.size();
    p.labels_ = normalize_labels(labels);
    for (std::size_t c = 0; c < p.n_; ++c) {
        if (p.labels_[c] == p.blocks_.size()) p.blocks_.emplace_back();
        p.blocks_[p.labels_[c]].push_back(c);
    }
    return p;
}

BlockPattern BlockPattern::parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t largest = 0;
    while (true) {
        const auto bar = text.find('|');
        std::string_view block = text.substr(0, bar);
        std::vector<std::size_t> elems;
        while (true) {
            const auto comma = block.find(',');
            std::string item(block.substr(0, comma));
            item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad partition element '" + item + "'");
            const std::size_t v = std::stoul(item);
            if (v == 0) throw std::invalid_argument("partition elements are 1-based");
            elems.push_back(v - 1);
            largest = std::max(largest, v);
            if (comma == std::string_view::npos) break;
            block.remove_prefix(comma + 1);
        }
        blocks.push_back(std::move(elems));
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return BlockPattern(n ? n : largest, std::move(blocks));
}

std::vector<std::size_t> BlockPattern::block_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& b : blocks_) s.push_back(b.size());
    return s;
}

BlockPattern BlockPattern::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> raw(n_);
    for (std::size_t c = 0; c < n_; ++c) raw[perm[c]] = labels_[c];
    return from_labels(raw);
}

BlockPattern BlockPattern::without(std::size_t c) const {
    if (c >= n_) throw std::out_of_range("element out of range");
    std::vector<std::size_t> raw;
    for (std::size_t e = 0; e < n_; ++e)
        if (e != c) raw.push_back(labels_[e]);
    return from_labels(raw);
}

bool BlockPattern::refines(const BlockPattern& coarser) const {
    if (coarser.n_ != n_) return false;
    for (const auto& b : blocks_)
        for (auto c : b)
            if (coarser.labels_[c] != coarser.labels_[b.front()]) return false;
    return true;
}

std::string BlockPattern::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        for (std::size_t e = 0; e < blocks_[b].size(); ++e) {
            if (e) out += ',';
            out += std::to_string(blocks_[b][e] + 1);
        }
    }
    return out;
}

std::vector<BlockPattern> enumerate_set_partitions(std::size_t n) {
    std::vector<BlockPattern> out;
    if (n == 0) return out;
    std::vector<std::size_t> labels(n, 0), maxes(n, 0);
    while (true) {
        out.push_back(BlockPattern::from_labels(labels));
        // Next restricted growth string.
        std::size_t c = n - 1;
        while (c > 0 && labels[c] > maxes[c - 1]) --c;
        if (c == 0) break;
        ++labels[c];
        maxes[c] = std::max(maxes[c - 1], labels[c]);
        for (std::size_t e = c + 1; e < n; ++e) {
            labels[e] = 0;
            maxes[e] = maxes[c];
        }
    }
    return out;
}

std::vector<std::size_t> pair_key(const PatternPair& p) {
    std::vector<std::size_t> key = p.s.labels();
    key.insert(key.end(), p.t.labels().begin(), p.t.labels().end());
    return key;
}

PatternPair canonical_pair(const PatternPair& p) {
    if (p.s.n() != p.t.n()) throw std::invalid_argument("patterns of different sizes");
    const auto perm = sorting_permutation(p.s);
    const BlockPattern s = p.s.permuted(perm);
    const BlockPattern t = p.t.permuted(perm);
    return {s, BlockPattern::from_labels(min_under(t.labels(), stabilizer_inverses(s)))};
}

std::vector<PatternPair> enumerate_partition_pairs(std::size_t n) {
    if (n < 2 || n > 7) throw std::out_of_range("dimension must be between 2 and 7");
    const auto all = enumerate_set_partitions(n);
    std::vector<std::vector<std::size_t>> shapes;
    std::vector<std::size_t> cur;
    integer_partitions(n, n, cur, shapes);
    std::set<std::vector<std::size_t>> keys;
    for (const auto& shape : shapes) {
        std::vector<std::size_t> labels;
        for (std::size_t b = 0; b < shape.size(); ++b) labels.insert(labels.end(), shape[b], b);
        const BlockPattern s = BlockPattern::from_labels(labels);
        const auto stab = stabilizer_inverses(s);
        for (const auto& t : all) {
            auto key = labels;
            const auto tmin = min_under(t.labels(), stab);
            key.insert(key.end(), tmin.begin(), tmin.end());
            keys.insert(std::move(key));
        }
    }
    std::vector<PatternPair> out;
    for (const auto& key : keys) {
        const std::vector<std::size_t> sl(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(n));
        const std::vector<std::size_t> tl(key.begin() + static_cast<std::ptrdiff_t>(n), key.end());
        out.push_back({BlockPattern::from_labels(sl), BlockPattern::from_labels(tl)});
    }
    return out;
}

std::string PairRelation::kind_name() const {
    switch (kind) {
        case Kind::equal: return "equal";
        case Kind::t_refines_s: return "T-refines-S";
        case Kind::s_refines_t: return "S-refines-T";
        case Kind::transverse: return "transverse";
    }
    return "transverse";
}

std::vector<std::string> PairRelation::flags() const {
    std::vector<std::string> f;
    if (s_scalar) f.emplace_back("s_scalar");
    if (s_distinct) f.emplace_back("s_distinct");
    if (shared_singleton) f.emplace_back("shared_singleton");
    return f;
}

PairRelation classify_pair(const BlockPattern& ps, const BlockPattern& pt) {
    if (ps.n() != pt.n()) throw std::invalid_argument("patterns of different sizes");
    PairRelation r;
    if (ps == pt) {
        r.kind = PairRelation::Kind::equal;
    } else if (pt.refines(ps)) {
        r.kind = PairRelation::Kind::t_refines_s;
    } else if (ps.refines(pt)) {
        r.kind = PairRelation::Kind::s_refines_t;
    }
    r.s_scalar = ps.block_count() == 1;
    r.s_distinct = ps.block_count() == ps.n();
    for (const auto& b : ps.blocks()) {
        if (b.size() != 1) continue;
        if (pt.blocks()[pt.labels()[b[0]]].size() == 1) r.shared_singleton = true;
    }
    return r;
}

const MultiPoly::VarList& gluing_variables() {
    static const auto vars = MultiPoly::make_variables({"i", "j", "k", "l"});
    return vars;
}

BlockSystem build_block_system(const BlockPattern& ps, const BlockPattern& pt) {
    if (ps.n() != pt.n()) throw std::invalid_argument("patterns of different sizes");
    BlockSystem sys;
    sys.n = ps.n();
    sys.d = ps.block_count();
    sys.dprime = pt.block_count();
    sys.sigma = ps.labels();
    sys.pi = pt.labels();
    const auto& vars = gluing_variables();
    const MultiPoly i = MultiPoly::variable(vars, 0), j = MultiPoly::variable(vars, 1),
                    k = MultiPoly::variable(vars, 2), l = MultiPoly::variable(vars, 3);
    const MultiPoly one(vars, 1);
    const std::size_t n = sys.n, size = sys.n + sys.d + sys.dprime;
    const std::size_t s0 = n, t0 = n + sys.d;
    sys.rows = PolyMatrix(size, size, MultiPoly(vars));
    for (std::size_t c = 0; c < n; ++c) {
        sys.rows(c, c) = k;
        sys.rows(c, s0 + sys.sigma[c]) = l;
        sys.rows(c, t0 + sys.pi[c]) = -one;
    }
    for (std::size_t b = 0; b < sys.d; ++b)
        for (auto c : ps.blocks()[b]) sys.rows(n + b, c) = one;
    for (std::size_t b = 0; b < sys.dprime; ++b) {
        const std::size_t row = n + sys.d + b;
        for (auto c : pt.blocks()[b]) {
            sys.rows(row, c) = sys.rows(row, c) + i;
            sys.rows(row, s0 + sys.sigma[c]) = sys.rows(row, s0 + sys.sigma[c]) + j;
        }
    }
    for (std::size_t c = 0; c < n; ++c) sys.unknowns.push_back("a" + std::to_string(c + 1));
    for (std::size_t b = 0; b < sys.d; ++b) sys.unknowns.push_back("s" + std::to_string(b + 1));
    for (std::size_t b = 0; b < sys.dprime; ++b) sys.unknowns.push_back("t" + std::to_string(b + 1));
    return sys;
}

BlockSystem without_s_determinant_rows(const BlockSystem& sys) {
    BlockSystem out = sys;
    std::vector<std::size_t> rows, cols(sys.rows.cols());
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t r = 0; r < sys.rows.rows(); ++r)
        if (r < sys.n || r >= sys.n + sys.d) rows.push_back(r);
    out.rows = submatrix(sys.rows, rows, cols);
    return out;
}

QMatrix evaluate_system(const BlockSystem& sys, const GluingData& g) {
    const std::vector<mpq_class> point{static_cast<long>(g.i), static_cast<long>(g.j), static_cast<long>(g.k),
                                       static_cast<long>(g.l)};
    return evaluate(sys.rows, point);
}

Verdict torsion_only_verdict(const BlockSystem& sys, const GluingData& g, bool full_kernel) {
    const QMatrix m = evaluate_system(sys, g);
    Verdict v;
    if (m.is_square()) {
        const auto zm = map_entries(m, mpz_class(0), [](const mpq_class& q) { return mpz_class(q.get_num()); });
        v.determinant = bareiss_determinant(zm);
        if (*v.determinant != 0) {
            v.torsion_only = true;
            if (!full_kernel) return v;
        }
    }
    for (const auto& k : kernel_basis(m)) v.kernel.push_back(primitive_integer_vector(k));
    v.torsion_only = v.kernel.empty();
    return v;
}

MultiPoly symbolic_determinant(const BlockSystem& sys) { return fraction_free_determinant(sys.rows); }

ReducedInstance reduce_shared_singleton(const BlockPattern& ps, const BlockPattern& pt) {
    if (ps.n() != pt.n()) throw std::invalid_argument("patterns of different sizes");
    for (std::size_t c = 0; c < ps.n(); ++c) {
        if (ps.blocks()[ps.labels()[c]].size() != 1 || pt.blocks()[pt.labels()[c]].size() != 1) continue;
        ReducedInstance r;
        r.removed = c;
        r.s = ps.without(c);
        r.t = pt.without(c);
        r.system = build_block_system(r.s, r.t);
        return r;
    }
    throw std::invalid_argument("patterns share no singleton block");
}

}  // namespace linobs
