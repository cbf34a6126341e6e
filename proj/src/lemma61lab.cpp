#include "linobs/lemma61lab.hpp"

#include "linobs/jordanlab.hpp"

#include <random>
#include <stdexcept>

namespace linobs {

namespace {

ExactMatrix from_entries(const std::vector<std::vector<Scalar>>& rows) {
    return ExactMatrix::from_rows(rows, rows.front().front());
}

ExactMatrix top_right(const ExactMatrix& m) { return submatrix(m, {0, 1}, {2, 3}); }

// Inverse of [[P, Q], [0, P]] without touching the 4x4 adjugate.
ExactMatrix block_upper_inverse(const ExactMatrix& p, const ExactMatrix& q) {
    const ExactMatrix pi = inverse(p);
    ExactMatrix neg = pi * q * pi;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) neg(r, c) = -neg(r, c);
    return block_upper(pi, neg);
}

ExactMatrix two_by_two(const std::array<Scalar, 4>& e) { return from_entries({{e[0], e[1]}, {e[2], e[3]}}); }

}  // namespace

Field symbolic_field(std::vector<std::string> names) { return Field(FieldDescriptor::ratfun(std::move(names))); }

ExactMatrix block_upper(const ExactMatrix& p, const ExactMatrix& q) {
    ExactMatrix m(4, 4, p.zero());
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            m(r, c) = p(r, c);
            m(r + 2, c + 2) = p(r, c);
            m(r, c + 2) = q(r, c);
        }
    return m;
}

Lemma61Pair lemma61_pair(const Scalar& z, const Scalar& w) {
    if (z.is_zero() || w.is_zero()) throw std::invalid_argument("z and w must be nonzero");
    const Scalar one = one_like(z);
    const Scalar two = one + one;
    Lemma61Pair p;
    p.alpha = from_entries({{(one + z * z) / w, z}, {z, w}});
    p.beta = from_entries({{(one + w * w) / z, -w}, {-w, z}});
    p.commutator = commutator(p.alpha, p.beta);
    p.b = two * (one + z * z + w * w) / (z * w);
    return p;
}

Lemma61Check verify_lemma61(const Lemma61Pair& p) {
    const Scalar one = one_like(p.b);
    Lemma61Check c;
    c.det_alpha_one = determinant(p.alpha) == one;
    c.det_beta_one = determinant(p.beta) == one;
    c.commutator_form = p.commutator == from_entries({{-one, -p.b}, {zero_like(one), -one}});
    return c;
}

Case2Unknowns case2_symbolic_unknowns() {
    const Field f = symbolic_field({"z", "w", "x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22"});
    Case2Unknowns u;
    u.z = Scalar::variable(f, "z");
    u.w = Scalar::variable(f, "w");
    const char* xs[] = {"x11", "x12", "x21", "x22"};
    const char* ys[] = {"y11", "y12", "y21", "y22"};
    for (std::size_t e = 0; e < 4; ++e) {
        u.x[e] = Scalar::variable(f, xs[e]);
        u.y[e] = Scalar::variable(f, ys[e]);
    }
    return u;
}

bool CommutatorIdentityResult::diagonal_blocks_ok() const {
    const Scalar one = one_like(b);
    const ExactMatrix expected = from_entries({{-one, -b}, {zero_like(one), -one}});
    return submatrix(a, {0, 1}, {0, 1}) == expected && submatrix(a, {2, 3}, {2, 3}) == expected &&
           submatrix(a, {2, 3}, {0, 1}) == ExactMatrix(2, 2, one);
}

CommutatorIdentityResult case2_commutator(const Case2Unknowns& u) {
    const Lemma61Pair p = lemma61_pair(u.z, u.w);
    const ExactMatrix qx = two_by_two(u.x), qy = two_by_two(u.y);
    CommutatorIdentityResult r;
    r.x = block_upper(p.alpha, qx);
    r.y = block_upper(p.beta, qy);
    r.a = r.x * r.y * block_upper_inverse(p.alpha, qx) * block_upper_inverse(p.beta, qy);
    const ExactMatrix tr = top_right(r.a);
    r.a21 = tr(1, 0);
    r.trace_sum = tr(0, 0) + tr(1, 1);
    r.b = p.b;
    const Scalar two = one_like(u.z) + one_like(u.z);
    const auto& x = u.x;
    const auto& y = u.y;
    r.linear_form = -(x[1] * u.w) - x[2] * u.w + two * y[3] * u.w + two * x[3] * u.z + y[1] * u.z + y[2] * u.z;
    return r;
}

Case2TEntries case2_T_entries(const Scalar& b, const ExactMatrix& m, const Scalar& lambda, long long k, long long l) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (k % 2 == 0) throw std::invalid_argument("k must be odd");
    if (l == 0) throw std::invalid_argument("l must be nonzero");
    const Scalar one = one_like(lambda), zero = zero_like(lambda);
    const ExactMatrix abar = from_entries({{-one, -b}, {zero, -one}});
    const ExactMatrix lam = from_entries({{lambda, zero}, {zero, lambda}});
    const ExactMatrix id = from_entries({{one, zero}, {zero, one}});
    const ExactMatrix a = block_upper(abar, m);
    const ExactMatrix s = block_upper(lam, id);
    Case2TEntries out;
    out.t = matrix_pow(a, k) * matrix_pow(s, l);
    const ExactMatrix tr = top_right(out.t);
    out.t21 = tr(1, 0);
    out.trace = tr(0, 0) + tr(1, 1);
    return out;
}

Scalar case2_t21_closed_form(const Scalar& a21, const Scalar& lambda, long long k, long long l) {
    return Scalar::from_int(lambda.field(), k) * lambda.pow(l) * a21;
}

Scalar case2_trace_closed_form(const Scalar& lambda, long long l) {
    return Scalar::from_int(lambda.field(), -2 * l) * lambda.pow(l - 1);
}

Case2Sweep case2_sweep(long long kmax, long long lmax) {
    if (kmax < 1 || lmax < 2) throw std::invalid_argument("sweep needs kmax >= 1 and lmax >= 2");
    const Field f(FieldDescriptor::cyclotomic(4));
    const Scalar b = Scalar::from_int(f, 6);
    const ExactMatrix generic = int_matrix(f, {{2, 5}, {3, 7}});
    const ExactMatrix traceless = int_matrix(f, {{4, -3}, {0, -4}});
    const std::pair<const char*, Scalar> lambdas[] = {
        {"1", Scalar::one(f)}, {"-1", Scalar::from_int(f, -1)}, {"ζ4", Scalar::zeta(f)}};
    Case2Sweep sweep;
    for (long long k = -kmax; k <= kmax; ++k) {
        if (k % 2 == 0) continue;
        for (long long l = -lmax; l <= lmax; ++l) {
            if (l == 0 || l % 2 != 0) continue;
            for (const auto& [name, lambda] : lambdas) {
                for (bool is_generic : {true, false}) {
                    const ExactMatrix& m = is_generic ? generic : traceless;
                    const Case2TEntries t = case2_T_entries(b, m, lambda, k, l);
                    Case2SweepRow row{k, l, name, is_generic, t.t21.to_string(), t.trace.to_string(), false};
                    if (is_generic)
                        row.ok = t.t21 == case2_t21_closed_form(m(1, 0), lambda, k, l) && !t.t21.is_zero();
                    else
                        row.ok = t.t21.is_zero() && t.trace == case2_trace_closed_form(lambda, l);
                    if (!row.ok) ++sweep.failures;
                    sweep.rows.push_back(std::move(row));
                }
            }
        }
    }
    return sweep;
}

std::vector<std::pair<std::size_t, std::size_t>> SupportPattern::forced_zeros() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < support.size(); ++r)
        for (std::size_t c = 0; c < support[r].size(); ++c)
            if (!support[r][c]) out.emplace_back(r + 1, c + 1);
    return out;
}

std::string SupportPattern::to_string() const {
    std::string out;
    for (const auto& row : support) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += row[c] ? '?' : '0';
        }
        out += '\n';
    }
    return out;
}

bool SupportPattern::within(const SupportPattern& other) const {
    if (other.size() != size()) return false;
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c < size(); ++c)
            if (support[r][c] && !other.support[r][c]) return false;
    return true;
}

SupportPattern forced_zero_pattern(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    const CentralizerReport rep = centralizer_basis(m);
    SupportPattern p{std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (const auto& v : rep.basis)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!v(r, c).is_zero()) p.support[r][c] = true;
    return p;
}

ExactMatrix case1_T_matrix(const Scalar& lambda_l, const Scalar& b, long long k, const std::array<Scalar, 3>& free) {
    const Scalar zero = zero_like(lambda_l);
    const Scalar kb = Scalar::from_int(lambda_l.field(), k) * b * lambda_l;
    return from_entries({{lambda_l, zero, free[0], free[1]},
                         {zero, -lambda_l, -kb, free[2]},
                         {zero, zero, -lambda_l, zero},
                         {zero, zero, zero, lambda_l}});
}

SupportPattern case1_family_pattern(const Scalar& lambda_l, const Scalar& b, long long k,
                                    const std::vector<Scalar>& values) {
    SupportPattern acc{std::vector<std::vector<bool>>(4, std::vector<bool>(4, false))};
    for (const auto& p : values)
        for (const auto& q : values)
            for (const auto& r : values) {
                const SupportPattern one = forced_zero_pattern(case1_T_matrix(lambda_l, b, k, {p, q, r}));
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) acc.support[i][j] = acc.support[i][j] || one.support[i][j];
            }
    return acc;
}

SupportPattern case1_expected_pattern() {
    return {{{true, false, true, true}, {true, true, true, true}, {false, false, true, false}, {true, false, true, true}}};
}

ExactMatrix four_corners(const ExactMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("four corners need a 4x4 matrix");
    return submatrix(m, {0, 3}, {0, 3});
}

const char* to_string(Case3Outcome o) { return o == Case3Outcome::small ? "Small" : "Swap"; }

Case3Outcome case3_eigenvalue_split(const Scalar& lambda, const Scalar& mu, long long l) {
    if (lambda == mu) throw std::invalid_argument("eigenvalues must differ");
    if (lambda.is_zero() || mu.is_zero() || !torsion_order(lambda) || !torsion_order(mu))
        throw std::invalid_argument("eigenvalues must be roots of unity");
    return -lambda.pow(l) == mu.pow(l) ? Case3Outcome::swap : Case3Outcome::small;
}

ExactMatrix case3_T_matrix(const Scalar& lambda, const Scalar& mu, long long l, const Scalar& x, const Scalar& y) {
    const Scalar zero = zero_like(lambda);
    const Scalar a = -lambda.pow(l), c = mu.pow(l);
    return from_entries({{a, x, zero, zero}, {zero, a, zero, zero}, {zero, zero, c, y}, {zero, zero, zero, c}});
}

UnipotentCheck unipotent_commutator_triangular_check(const ExactMatrix& alpha, const ExactMatrix& beta) {
    if (alpha.rows() != 2 || alpha.cols() != 2 || beta.rows() != 2 || beta.cols() != 2)
        throw std::invalid_argument("unipotent check needs 2x2 matrices");
    UnipotentCheck out;
    out.commutator = commutator(alpha, beta);
    const ExactMatrix& c = out.commutator;
    if (!(c(0, 0).is_one() && c(1, 1).is_one() && c(1, 0).is_zero() && !c(0, 1).is_zero()))
        throw std::invalid_argument("commutator is not [[1, b], [0, 1]] with b nonzero");
    out.b = c(0, 1);
    out.common_e1 = alpha(1, 0).is_zero() && beta(1, 0).is_zero();
    return out;
}

UnipotentSearch unipotent_search(std::uint64_t seed, std::size_t trials, long long bound) {
    const Field q;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> entry(-bound, bound);
    UnipotentSearch s;
    auto draw = [&] {
        while (true) {
            ExactMatrix m = int_matrix(q, {{entry(rng), entry(rng)}, {entry(rng), entry(rng)}});
            if (!determinant(m).is_zero()) return m;
        }
    };
    for (; s.tried < trials; ++s.tried) {
        const ExactMatrix a = draw(), b = draw();
        const ExactMatrix c = commutator(a, b);
        if (!(c(0, 0).is_one() && c(1, 1).is_one() && c(1, 0).is_zero() && !c(0, 1).is_zero())) continue;
        ++s.qualifying;
        if (!unipotent_commutator_triangular_check(a, b).common_e1) ++s.anomalies;
    }
    return s;
}

}  // namespace linobs
