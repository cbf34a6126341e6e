#include "linobs/jordanlab.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace linobs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

ExactMatrix shifted(const ExactMatrix& m, const Scalar& lambda) {
    ExactMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) = r(i, i) - lambda;
    return r;
}

// Distinct values in order of first appearance, with multiplicities.
std::vector<std::pair<Scalar, std::size_t>> group_values(const std::vector<Scalar>& values) {
    std::vector<std::pair<Scalar, std::size_t>> out;
    for (const auto& v : values) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == v; });
        if (it == out.end()) {
            out.emplace_back(v, 1);
        } else {
            ++it->second;
        }
    }
    return out;
}

bool has_repeated_part(const JordanType& t) {
    for (const auto& g : t.groups)
        for (std::size_t a = 1; a < g.partition.size(); ++a)
            if (g.partition[a] == g.partition[a - 1]) return true;
    return false;
}

ExactMatrix chain_matrix(const Field& f, const JordanType& t, const CanonicalForm& layout) {
    ExactMatrix m = zero_matrix(f, t.dimension(), t.dimension());
    const Scalar one = Scalar::one(f);
    for (std::size_t g = 0; g < t.groups.size(); ++g) {
        for (const auto& block : layout.blocks[g]) {
            for (std::size_t r = 0; r < block.size(); ++r) {
                m(block[r], block[r]) = t.groups[g].eigenvalue;
                if (r > 0) m(block[r - 1], block[r]) = one;
            }
        }
    }
    return m;
}

// Q (k x k) with Q^-1 R Q upper triangular for every R, by peeling off
// common eigenvectors.
ExactMatrix peel_common_eigenvectors(const std::vector<ExactMatrix>& rs, const std::vector<std::vector<Scalar>>& spectra,
                                     const Scalar& like) {
    const std::size_t k = rs.front().rows();
    if (k == 0) return ExactMatrix(0, 0, like);
    ExactMatrix w = ExactMatrix::identity(k, like);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        bool found = false;
        for (const auto& lambda : spectra[i]) {
            const auto ker = kernel_basis(shifted(rs[i], lambda) * w);
            if (ker.empty()) continue;
            w = span_basis(w * ExactMatrix::from_columns(ker, w.cols(), like));
            found = true;
            break;
        }
        if (!found) throw std::invalid_argument("supplied spectrum misses an eigenvalue");
    }
    const std::vector<Scalar> v = w.column(0);
    std::size_t pivot = 0;
    while (v[pivot].is_zero()) ++pivot;
    ExactMatrix p(k, k, like);
    for (std::size_t r = 0; r < k; ++r) p(r, 0) = v[r];
    for (std::size_t c = 0, col = 1; c < k; ++c) {
        if (c == pivot) continue;
        p(c, col++) = one_like(like);
    }
    const ExactMatrix pinv = inverse(p);
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < k; ++i) rest.push_back(i);
    std::vector<ExactMatrix> sub;
    for (const auto& r : rs) sub.push_back(submatrix(pinv * r * p, rest, rest));
    if (k == 1) return p;
    const ExactMatrix q = peel_common_eigenvectors(sub, spectra, like);
    ExactMatrix lift = ExactMatrix::identity(k, like);
    for (std::size_t a = 0; a + 1 < k; ++a)
        for (std::size_t b = 0; b + 1 < k; ++b) lift(a + 1, b + 1) = q(a, b);
    return p * lift;
}

}  // namespace

std::size_t JordanType::dimension() const {
    std::size_t n = 0;
    for (const auto& g : groups)
        for (auto part : g.partition) n += part;
    return n;
}

std::string JordanType::to_string() const {
    std::string out;
    for (const auto& g : groups) {
        if (!out.empty()) out += ';';
        out += "eig=" + g.eigenvalue.to_string() + ':';
        for (std::size_t a = 0; a < g.partition.size(); ++a) {
            if (a) out += ',';
            out += std::to_string(g.partition[a]);
        }
    }
    return out;
}

void validate(const JordanType& t) {
    for (std::size_t g = 0; g < t.groups.size(); ++g) {
        const auto& part = t.groups[g].partition;
        if (part.empty()) throw std::invalid_argument("empty partition");
        for (std::size_t a = 0; a < part.size(); ++a) {
            if (part[a] == 0) throw std::invalid_argument("zero part in partition");
            if (a && part[a] > part[a - 1]) throw std::invalid_argument("partition must be nonincreasing");
        }
        for (std::size_t h = 0; h < g; ++h)
            if (t.groups[h].eigenvalue == t.groups[g].eigenvalue) throw std::invalid_argument("repeated eigenvalue");
    }
}

JordanType parse_jordan_type(const Field& f, std::string_view text) {
    JordanType t;
    while (!text.empty()) {
        const auto semi = text.find(';');
        std::string_view item = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (item.empty()) continue;
        if (item.starts_with("eig=")) {
            item.remove_prefix(4);
        } else if (item.starts_with("\xCE\xBB=")) {
            item.remove_prefix(3);
        } else {
            throw std::invalid_argument("Jordan group must start with eig=: " + std::string(item));
        }
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("Jordan group needs ':' before its parts");
        JordanGroup g{parse_scalar(f, trim(item.substr(0, colon))), {}};
        std::string_view parts = item.substr(colon + 1);
        while (!parts.empty()) {
            const auto comma = parts.find(',');
            const std::string piece(trim(parts.substr(0, comma)));
            parts = comma == std::string_view::npos ? std::string_view{} : parts.substr(comma + 1);
            if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad partition part: '" + piece + "'");
            g.partition.push_back(static_cast<unsigned>(std::stoul(piece)));
        }
        t.groups.push_back(std::move(g));
    }
    if (t.groups.empty()) throw std::invalid_argument("empty Jordan type");
    validate(t);
    return t;
}

JordanType jordan_type_of(const ExactMatrix& m, const std::vector<Scalar>& eigenvalues) {
    if (!m.is_square()) throw std::invalid_argument("Jordan type of a non-square matrix");
    const std::size_t n = m.rows();
    const auto grouped = group_values(eigenvalues);
    std::size_t total = 0;
    JordanType t;
    for (const auto& [lambda, mult] : grouped) {
        const ExactMatrix shift = shifted(m, lambda);
        // ge[k] = number of blocks of size >= k
        std::vector<std::size_t> ranks{n};
        ExactMatrix p = ExactMatrix::identity(n, m.zero());
        for (std::size_t k = 1; k <= mult; ++k) {
            p = p * shift;
            ranks.push_back(rank(p));
        }
        if (n - ranks[mult] != mult)
            throw std::invalid_argument("eigenvalue " + lambda.to_string() + " does not have multiplicity " +
                                        std::to_string(mult));
        JordanGroup g{lambda, {}};
        for (std::size_t k = mult; k >= 1; --k) {
            const std::size_t ge = ranks[k - 1] - ranks[k];
            const std::size_t ge_next = k < mult ? ranks[k] - ranks[k + 1] : 0;
            for (std::size_t c = 0; c < ge - ge_next; ++c) g.partition.push_back(static_cast<unsigned>(k));
        }
        total += mult;
        t.groups.push_back(std::move(g));
    }
    if (total != n) throw std::invalid_argument("eigenvalues do not account for the whole space");
    return t;
}

CanonicalForm standard_canonical_matrix(const Field& f, const JordanType& t) {
    validate(t);
    CanonicalForm form;
    std::size_t next = 0;
    for (const auto& g : t.groups) {
        std::vector<std::vector<std::size_t>> parts;
        for (auto size : g.partition) {
            std::vector<std::size_t> block;
            for (unsigned r = 0; r < size; ++r) block.push_back(next++);
            parts.push_back(std::move(block));
        }
        form.blocks.push_back(std::move(parts));
    }
    form.matrix = chain_matrix(f, t, form);
    form.beyond_four = t.dimension() > 4;
    return form;
}

CanonicalForm modified_canonical_matrix(const Field& f, const JordanType& t) {
    CanonicalForm form = standard_canonical_matrix(f, t);
    if (t.groups.size() != 1) return form;
    const auto& part = t.groups[0].partition;
    if (part == std::vector<unsigned>{2, 1, 1}) {
        form.blocks[0] = {{0, 3}, {1}, {2}};
    } else if (part == std::vector<unsigned>{2, 2}) {
        form.blocks[0] = {{0, 2}, {1, 3}};
    } else {
        return form;
    }
    form.matrix = chain_matrix(f, t, form);
    return form;
}

const char* to_string(CentralizerSize s) { return s == CentralizerSize::big ? "Big" : "Small"; }

CentralizerReport centralizer_basis(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("centralizer of a non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix map(n * n, n * n, m.zero());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            for (std::size_t k = 0; k < n; ++k) {
                map(row, r * n + k) = map(row, r * n + k) + m(k, c);
                map(row, k * n + c) = map(row, k * n + c) - m(r, k);
            }
        }
    }
    CentralizerReport report;
    for (const auto& v : kernel_basis(map)) {
        ExactMatrix x(n, n, m.zero());
        for (std::size_t i = 0; i < n * n; ++i) x(i / n, i % n) = v[i];
        report.basis.push_back(std::move(x));
    }
    report.dimension = report.basis.size();
    return report;
}

std::size_t centralizer_dimension_formula(const JordanType& t) {
    std::size_t d = 0;
    for (const auto& g : t.groups)
        for (auto a : g.partition)
            for (auto b : g.partition) d += std::min(a, b);
    return d;
}

CentralizerReport classify_centralizer(const Field& f, const JordanType& t) {
    const CanonicalForm form = modified_canonical_matrix(f, t);
    CentralizerReport report = centralizer_basis(form.matrix);
    if (!has_repeated_part(t)) {
        report.classification = CentralizerSize::small;
        return report;
    }
    report.classification = CentralizerSize::big;
    for (std::size_t g = 0; g < t.groups.size() && !report.witness; ++g) {
        const auto& part = t.groups[g].partition;
        for (std::size_t a = 1; a < part.size(); ++a) {
            if (part[a] != part[a - 1]) continue;
            const std::array<const std::vector<std::size_t>*, 2> blk{&form.blocks[g][a - 1], &form.blocks[g][a]};
            std::array<ExactMatrix, 4> units;
            for (std::size_t x = 0; x < 2; ++x) {
                for (std::size_t y = 0; y < 2; ++y) {
                    ExactMatrix e = zero_matrix(f, t.dimension(), t.dimension());
                    for (std::size_t r = 0; r < part[a]; ++r) e((*blk[x])[r], (*blk[y])[r]) = Scalar::one(f);
                    units[2 * x + y] = std::move(e);
                }
            }
            report.witness = std::move(units);
            break;
        }
    }
    return report;
}

std::optional<std::vector<std::size_t>> triangularizing_order(const std::vector<ExactMatrix>& family) {
    if (family.empty()) return std::vector<std::size_t>{};
    const std::size_t n = family.front().rows();
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& m : family) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || m(i, j).is_zero() || edge[i][j]) continue;
                edge[i][j] = true;
                ++indegree[j];
            }
        }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (edge[i][j] && --indegree[j] == 0) ready.push(j);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

bool small_certificate(const Field& f, const JordanType& t) {
    const CanonicalForm form = modified_canonical_matrix(f, t);
    const auto order = triangularizing_order(centralizer_basis(form.matrix).basis);
    return order.has_value();
}

ExactMatrix Decomposition::subspace(std::size_t k) const {
    std::vector<std::size_t> rows(basis.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return submatrix(basis, rows, index_sets.at(k));
}

Decomposition generalized_eigenspace_decomposition(const ExactMatrix& x, const std::vector<Scalar>& eigenvalues) {
    if (!x.is_square()) throw std::invalid_argument("decomposition of a non-square matrix");
    const std::size_t n = x.rows();
    Decomposition d;
    std::vector<ExactMatrix> spaces;
    std::size_t total = 0;
    for (const auto& [lambda, mult] : group_values(eigenvalues)) {
        (void)mult;
        ExactMatrix space = span_basis(kernel_matrix(power(shifted(x, lambda), n)));
        if (space.cols() == 0) throw std::invalid_argument(lambda.to_string() + " is not an eigenvalue");
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c < space.cols(); ++c) idx.push_back(total + c);
        total += space.cols();
        d.index_sets.push_back(std::move(idx));
        d.labels.push_back({lambda});
        spaces.push_back(std::move(space));
    }
    if (total != n) throw std::invalid_argument("characteristic polynomial does not split over the supplied eigenvalues");
    d.basis = ExactMatrix(n, 0, x.zero());
    for (const auto& s : spaces) d.basis = hstack(d.basis, s);
    return d;
}

Decomposition common_refinement(const Decomposition& ds, const Decomposition& dt) {
    if (ds.basis.rows() != dt.basis.rows()) throw std::invalid_argument("decompositions of different spaces");
    const std::size_t n = ds.basis.rows();
    Decomposition d;
    d.basis = ExactMatrix(n, 0, ds.basis.zero());
    std::size_t total = 0;
    for (std::size_t a = 0; a < ds.size(); ++a) {
        for (std::size_t b = 0; b < dt.size(); ++b) {
            const ExactMatrix w = intersect_spans(ds.subspace(a), dt.subspace(b));
            if (w.cols() == 0) continue;
            std::vector<std::size_t> idx;
            for (std::size_t c = 0; c < w.cols(); ++c) idx.push_back(total + c);
            total += w.cols();
            d.index_sets.push_back(std::move(idx));
            auto label = ds.labels.at(a);
            label.insert(label.end(), dt.labels.at(b).begin(), dt.labels.at(b).end());
            d.labels.push_back(std::move(label));
            d.basis = hstack(d.basis, w);
        }
    }
    if (total != n) throw std::invalid_argument("intersections do not span the space (inputs do not commute?)");
    return d;
}

ExactMatrix restrict_to(const ExactMatrix& m, const ExactMatrix& b) {
    const std::size_t k = b.cols();
    const auto ech = rref(hstack(b, m * b));
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
        if (ech.pivots[i] != i) throw std::invalid_argument("subspace is not invariant");
    if (ech.pivots.size() != k) throw std::invalid_argument("basis columns are dependent");
    ExactMatrix r(k, k, m.zero());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) r(i, j) = ech.reduced(i, k + j);
    return r;
}

bool preserves_decomposition(const Decomposition& d, const ExactMatrix& y) {
    for (std::size_t k = 0; k < d.size(); ++k) {
        try {
            restrict_to(y, d.subspace(k));
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    return true;
}

ExactMatrix simultaneous_triangularize(const std::vector<ExactMatrix>& ms,
                                       const std::vector<std::vector<Scalar>>& spectra) {
    if (ms.empty()) throw std::invalid_argument("empty matrix family");
    if (spectra.size() != ms.size()) throw std::invalid_argument("one spectrum per matrix required");
    for (std::size_t a = 0; a < ms.size(); ++a) {
        if (!ms[a].is_square() || ms[a].rows() != ms[0].rows()) throw std::invalid_argument("matrix sizes differ");
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (!(ms[a] * ms[b] == ms[b] * ms[a])) throw std::invalid_argument("matrices do not commute");
    }
    Decomposition d = generalized_eigenspace_decomposition(ms[0], spectra[0]);
    for (std::size_t i = 1; i < ms.size(); ++i)
        d = common_refinement(d, generalized_eigenspace_decomposition(ms[i], spectra[i]));

    const Scalar like = ms[0].zero();
    ExactMatrix p(ms[0].rows(), 0, like);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const ExactMatrix b = d.subspace(k);
        std::vector<ExactMatrix> rs;
        for (const auto& m : ms) rs.push_back(restrict_to(m, b));
        p = hstack(p, b * peel_common_eigenvectors(rs, spectra, like));
    }
    return p;
}

std::vector<JordanType> single_eigenvalue_types(const Scalar& lambda, unsigned n) {
    std::vector<JordanType> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
        if (left == 0) {
            out.push_back(JordanType{{JordanGroup{lambda, cur}}});
            return;
        }
        for (unsigned part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace linobs
