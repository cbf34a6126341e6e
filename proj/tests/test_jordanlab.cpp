#include <doctest.h>

#include "linobs/jordanlab.hpp"

#include <map>
#include <random>

using namespace linobs;

namespace {

const Field& rationals() {
    static const Field f = field_make(FieldDescriptor::rational());
    return f;
}

Scalar qi(long long v) { return Scalar::from_int(rationals(), v); }

JordanType single(const Scalar& lambda, std::vector<unsigned> parts) { return JordanType{{JordanGroup{lambda, std::move(parts)}}}; }

bool units_multiply(const std::array<ExactMatrix, 4>& e) {
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    const ExactMatrix prod = e[2 * a + b] * e[2 * c + d];
                    const bool ok = b == c ? prod == e[2 * a + d] : is_zero_matrix(prod);
                    if (!ok) return false;
                }
    return true;
}

bool all_upper_triangular_after(const ExactMatrix& p, const std::vector<ExactMatrix>& ms) {
    const ExactMatrix pinv = inverse(p);
    for (const auto& m : ms)
        if (!is_upper_triangular(pinv * m * p)) return false;
    return true;
}

// Partitions of n as nonincreasing lists, built independently of the library.
void partitions(unsigned n, unsigned cap, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = 1; p <= std::min(n, cap); ++p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<JordanType> all_types_up_to(unsigned max_dim) {
    // One or two eigenvalues (1 and 2), every partition split.
    std::vector<JordanType> types;
    for (unsigned n = 1; n <= max_dim; ++n) {
        for (unsigned first = 1; first <= n; ++first) {
            std::vector<std::vector<unsigned>> ps, qs;
            std::vector<unsigned> cur;
            partitions(first, first, cur, ps);
            partitions(n - first, n - first, cur, qs);
            for (const auto& p : ps) {
                if (first == n) {
                    types.push_back(single(qi(1), p));
                    continue;
                }
                for (const auto& q : qs) types.push_back(JordanType{{JordanGroup{qi(1), p}, JordanGroup{qi(2), q}}});
            }
        }
    }
    return types;
}

}  // namespace

TEST_CASE("jordan_type_of examples") {
    const Field& q = rationals();
    const JordanType t = jordan_type_of(int_matrix(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}), {qi(1), qi(1), qi(2)});
    CHECK(t.to_string() == "eig=1:1,1;eig=2:1");

    const ExactMatrix j4 = int_matrix(q, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(jordan_type_of(j4, {qi(1), qi(1), qi(1), qi(1)}).to_string() == "eig=1:4");

    const ExactMatrix modified = modified_canonical_matrix(q, single(qi(5), {2, 1, 1})).matrix;
    CHECK(rank(modified - scaled(identity_matrix(q, 4), qi(5))) == 1);
    CHECK(jordan_type_of(modified, {qi(5), qi(5), qi(5), qi(5)}).to_string() == "eig=5:2,1,1");

    CHECK_THROWS_AS(jordan_type_of(j4, {qi(1), qi(1), qi(1)}), std::invalid_argument);
    CHECK_THROWS_AS(jordan_type_of(j4, {qi(1), qi(1), qi(1), qi(2)}), std::invalid_argument);
}

TEST_CASE("jordan_type_of recovers conjugated canonical forms") {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-2, 2);
    const Field& q = rationals();
    for (const auto& t : all_types_up_to(4)) {
        const ExactMatrix j = standard_canonical_matrix(q, t).matrix;
        ExactMatrix p = identity_matrix(q, j.rows());
        do {
            for (std::size_t r = 0; r < p.rows(); ++r)
                for (std::size_t c = 0; c < p.cols(); ++c) p(r, c) = qi(d(rng));
        } while (determinant(p).is_zero());
        std::vector<Scalar> eig;
        for (const auto& g : t.groups)
            for (auto part : g.partition)
                for (unsigned r = 0; r < part; ++r) eig.push_back(g.eigenvalue);
        CHECK(jordan_type_of(p * j * inverse(p), eig).to_string() == t.to_string());
    }
}

TEST_CASE("Jordan type text syntax") {
    const Field& q = rationals();
    const JordanType t = parse_jordan_type(q, "eig=1:2,1,1; eig=-1:1");
    REQUIRE(t.groups.size() == 2);
    CHECK(t.groups[1].eigenvalue == qi(-1));
    CHECK(t.dimension() == 5);
    CHECK(t.to_string() == "eig=1:2,1,1;eig=-1:1");
    CHECK(parse_jordan_type(q, "\xCE\xBB=3:2").to_string() == "eig=3:2");
    CHECK_THROWS_AS(parse_jordan_type(q, "eig=1:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_type(q, "eig=1:2;eig=1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_type(q, "eig=1:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_type(q, "mu=1:2"), std::invalid_argument);

    const Field c4 = field_make(FieldDescriptor::cyclotomic(4));
    CHECK(parse_jordan_type(c4, "eig=z:2,2").groups[0].eigenvalue == Scalar::zeta(c4));
}

TEST_CASE("modified canonical forms") {
    const Field& q = rationals();
    const Scalar l = qi(7);
    const ExactMatrix lambda4 = scaled(identity_matrix(q, 4), l);

    ExactMatrix e14 = zero_matrix(q, 4, 4);
    e14(0, 3) = qi(1);
    CHECK(modified_canonical_matrix(q, single(l, {2, 1, 1})).matrix == lambda4 + e14);

    ExactMatrix e13_24 = zero_matrix(q, 4, 4);
    e13_24(0, 2) = qi(1);
    e13_24(1, 3) = qi(1);
    CHECK(modified_canonical_matrix(q, single(l, {2, 2})).matrix == lambda4 + e13_24);

    CHECK(modified_canonical_matrix(q, single(l, {1, 1})).matrix == scaled(identity_matrix(q, 2), l));
    CHECK_FALSE(modified_canonical_matrix(q, single(l, {3, 1})).beyond_four);
    const auto big = modified_canonical_matrix(q, single(l, {3, 2}));
    CHECK(big.beyond_four);
    CHECK(big.matrix == standard_canonical_matrix(q, single(l, {3, 2})).matrix);
}

TEST_CASE("centralizer_basis examples") {
    const Field& q = rationals();
    CHECK(centralizer_basis(identity_matrix(q, 2)).dimension == 4);
    CHECK(centralizer_basis(int_matrix(q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})).dimension == 5);

    const auto diag = centralizer_basis(int_matrix(q, {{1, 0}, {0, 2}}));
    CHECK(diag.dimension == 2);
    for (const auto& x : diag.basis) CHECK(x(0, 1).is_zero());
    for (const auto& x : diag.basis) CHECK(x(1, 0).is_zero());
}

TEST_CASE("centralizer dimension matches the min-sum formula") {
    const Field& q = rationals();
    for (const auto& t : all_types_up_to(5)) {
        const ExactMatrix m = standard_canonical_matrix(q, t).matrix;
        const auto report = centralizer_basis(m);
        CHECK_MESSAGE(report.dimension == centralizer_dimension_formula(t), t.to_string());
        for (const auto& x : report.basis) CHECK(x * m == m * x);
    }
}

TEST_CASE("classify_centralizer examples") {
    const Field& q = rationals();
    CHECK(classify_centralizer(q, single(qi(1), {2, 2})).classification == CentralizerSize::big);
    CHECK(classify_centralizer(q, single(qi(1), {3, 1})).classification == CentralizerSize::small);

    const auto r = classify_centralizer(q, single(qi(1), {2, 1, 1}));
    REQUIRE(r.witness.has_value());
    // Units live on the two size-1 blocks, indices 1 and 2.
    ExactMatrix e12 = zero_matrix(q, 4, 4);
    e12(1, 2) = qi(1);
    CHECK((*r.witness)[1] == e12);
    CHECK(units_multiply(*r.witness));
}

TEST_CASE("the 4x4 lists: six small forms, five big forms") {
    const Field& q = rationals();
    const Scalar l = qi(3);
    // Small: (λ), J2, J2+J1, J3, J3+J1, J4.  Big: λI2, λI3, λI4, J2+J1+J1, J2+J2.
    const std::vector<std::vector<unsigned>> small{{1}, {2}, {2, 1}, {3}, {3, 1}, {4}};
    const std::vector<std::vector<unsigned>> big{{1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1}, {2, 2}};

    std::vector<std::vector<unsigned>> got_small, got_big;
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& t : single_eigenvalue_types(l, n)) {
            const auto r = classify_centralizer(q, t);
            (r.classification == CentralizerSize::big ? got_big : got_small).push_back(t.groups[0].partition);
        }
    }
    std::sort(got_small.begin(), got_small.end());
    std::sort(got_big.begin(), got_big.end());
    auto s = small, b = big;
    std::sort(s.begin(), s.end());
    std::sort(b.begin(), b.end());
    CHECK(got_small == s);
    CHECK(got_big == b);
}

TEST_CASE("Big, matrix units and (t-λ)^2 agree in dimension 4") {
    const Field& q = rationals();
    const Scalar l = qi(-2);
    for (const auto& t : single_eigenvalue_types(l, 4)) {
        const auto r = classify_centralizer(q, t);
        const ExactMatrix m = modified_canonical_matrix(q, t).matrix;
        const bool big = r.classification == CentralizerSize::big;
        bool witness_ok = false;
        if (r.witness) {
            witness_ok = units_multiply(*r.witness);
            for (const auto& e : *r.witness) witness_ok = witness_ok && e * m == m * e;
        }
        CHECK(big == witness_ok);
        CHECK(big == satisfies_polynomial(m, shifted_power_polynomial(l, 2)));
    }
}

TEST_CASE("Small iff the centralizer is triangularized by a basis permutation") {
    const Field& q = rationals();
    for (const auto& t : all_types_up_to(5)) {
        const bool small = classify_centralizer(q, t).classification == CentralizerSize::small;
        CHECK_MESSAGE(small_certificate(q, t) == small, t.to_string());
    }
}

TEST_CASE("Small centralizers: commuting pairs triangularize together") {
    const Field& q = rationals();
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& t : single_eigenvalue_types(qi(1), n)) {
            const auto r = classify_centralizer(q, t);
            if (r.classification != CentralizerSize::small) continue;
            const ExactMatrix m = modified_canonical_matrix(q, t).matrix;
            for (const auto& c : r.basis) {
                // Each centralizer element is triangular in the Jordan basis,
                // so its eigenvalues are its diagonal.
                std::vector<Scalar> spectrum;
                for (std::size_t i = 0; i < n; ++i) spectrum.push_back(c(i, i));
                const ExactMatrix p = simultaneous_triangularize({m, c}, {{qi(1)}, spectrum});
                CHECK(all_upper_triangular_after(p, {m, c}));
            }
        }
    }
}

TEST_CASE("the rearranged 3x3 form has an upper-triangular centralizer") {
    const Field& q = rationals();
    const ExactMatrix standard = int_matrix(q, {{4, 1, 0}, {0, 4, 0}, {0, 0, 4}});
    const ExactMatrix rearranged = int_matrix(q, {{4, 0, 1}, {0, 4, 0}, {0, 0, 4}});
    bool standard_all_upper = true;
    for (const auto& x : centralizer_basis(standard).basis) standard_all_upper = standard_all_upper && is_upper_triangular(x);
    CHECK_FALSE(standard_all_upper);
    for (const auto& x : centralizer_basis(rearranged).basis) CHECK(is_upper_triangular(x));
}

TEST_CASE("generalized_eigenspace_decomposition examples") {
    const Field& q = rationals();
    const auto diag = generalized_eigenspace_decomposition(int_matrix(q, {{2, 0}, {0, 3}}), {qi(2), qi(3)});
    CHECK(diag.size() == 2);
    CHECK(is_identity(diag.basis));

    const ExactMatrix j3 = int_matrix(q, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    const auto one = generalized_eigenspace_decomposition(j3, {qi(1)});
    CHECK(one.size() == 1);
    CHECK(one.index_sets[0].size() == 3);

    const ExactMatrix mixed = int_matrix(q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
    const auto two = generalized_eigenspace_decomposition(mixed, {qi(1), qi(1), qi(2)});
    REQUIRE(two.size() == 2);
    CHECK(two.index_sets[0].size() == 2);
    CHECK(two.index_sets[1].size() == 1);

    CHECK_THROWS_AS(generalized_eigenspace_decomposition(mixed, {qi(1)}), std::invalid_argument);
    // x^2 + 1 has no rational roots.
    CHECK_THROWS_AS(generalized_eigenspace_decomposition(int_matrix(q, {{0, -1}, {1, 0}}), {qi(1)}),
                    std::invalid_argument);
}

TEST_CASE("generalized eigenspaces are invariant under commuting matrices") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> d(-3, 3);
    const Field& q = rationals();
    for (const auto& t : all_types_up_to(4)) {
        const ExactMatrix s = standard_canonical_matrix(q, t).matrix;
        std::vector<Scalar> eig;
        for (const auto& g : t.groups) eig.push_back(g.eigenvalue);
        const auto dec = generalized_eigenspace_decomposition(s, eig);
        const auto cent = centralizer_basis(s).basis;
        for (int trial = 0; trial < 3; ++trial) {
            ExactMatrix y = zero_matrix(q, s.rows(), s.cols());
            for (const auto& c : cent) y = y + scaled(c, qi(d(rng)));
            CHECK(preserves_decomposition(dec, y));
        }
    }
    // A non-commuting matrix can break invariance.
    const ExactMatrix s = int_matrix(q, {{1, 0}, {0, 2}});
    const auto dec = generalized_eigenspace_decomposition(s, {qi(1), qi(2)});
    CHECK_FALSE(preserves_decomposition(dec, int_matrix(q, {{0, 1}, {1, 0}})));
}

TEST_CASE("common_refinement examples") {
    const Field& q = rationals();
    const ExactMatrix s = int_matrix(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    const ExactMatrix t = int_matrix(q, {{5, 0, 0}, {0, 6, 0}, {0, 0, 6}});
    const auto ds = generalized_eigenspace_decomposition(s, {qi(1), qi(2)});
    const auto dt = generalized_eigenspace_decomposition(t, {qi(5), qi(6)});

    const auto same = common_refinement(ds, ds);
    CHECK(same.index_sets == ds.index_sets);
    CHECK(same.basis == ds.basis);

    const auto fine = common_refinement(ds, dt);
    CHECK(fine.size() == 3);
    for (const auto& idx : fine.index_sets) CHECK(idx.size() == 1);

    const auto coarse = generalized_eigenspace_decomposition(s, {qi(1), qi(2)});
    const auto finer = generalized_eigenspace_decomposition(int_matrix(q, {{1, 0, 0}, {0, 3, 0}, {0, 0, 2}}),
                                                            {qi(1), qi(3), qi(2)});
    const auto r = common_refinement(coarse, finer);
    CHECK(r.index_sets == finer.index_sets);
    CHECK(r.basis == finer.basis);

    // Eigenspaces of non-commuting matrices need not refine each other.
    const auto swap = generalized_eigenspace_decomposition(int_matrix(q, {{0, 1}, {1, 0}}), {qi(1), qi(-1)});
    const auto shear = generalized_eigenspace_decomposition(int_matrix(q, {{1, 1}, {0, 1}}), {qi(1)});
    CHECK_NOTHROW(common_refinement(swap, shear));  // shear has a single space: trivially fine
    const auto diag = generalized_eigenspace_decomposition(int_matrix(q, {{1, 0}, {0, 2}}), {qi(1), qi(2)});
    CHECK_THROWS_AS(common_refinement(swap, diag), std::invalid_argument);
}

TEST_CASE("simultaneous_triangularize examples") {
    const Field& q = rationals();
    const ExactMatrix d1 = int_matrix(q, {{1, 0}, {0, 2}});
    const ExactMatrix d2 = int_matrix(q, {{3, 0}, {0, 4}});
    CHECK(is_identity(simultaneous_triangularize({d1, d2}, {{qi(1), qi(2)}, {qi(3), qi(4)}})));

    const ExactMatrix x = int_matrix(q, {{1, 1}, {0, 1}});
    const ExactMatrix y = int_matrix(q, {{1, 2}, {0, 1}});
    CHECK(is_identity(simultaneous_triangularize({x, y}, {{qi(1)}, {qi(1)}})));

    const ExactMatrix sw = int_matrix(q, {{0, 1}, {1, 0}});
    const ExactMatrix sy = int_matrix(q, {{2, 3}, {3, 2}});
    const ExactMatrix p = simultaneous_triangularize({sw, sy}, {{qi(1), qi(-1)}, {qi(5), qi(-1)}});
    CHECK(p == int_matrix(q, {{1, 1}, {1, -1}}));
    const ExactMatrix pinv = inverse(p);
    CHECK(pinv * sw * p == int_matrix(q, {{1, 0}, {0, -1}}));
    CHECK(pinv * sy * p == int_matrix(q, {{5, 0}, {0, -1}}));

    CHECK_THROWS_AS(simultaneous_triangularize({sw, x}, {{qi(1), qi(-1)}, {qi(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(simultaneous_triangularize({sw}, {{qi(1)}}), std::invalid_argument);
}

TEST_CASE("simultaneous_triangularize on random commuting families") {
    // Commuting families are built as polynomials in a conjugated Jordan
    // matrix; the output must make every strictly-lower entry exactly zero.
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-2, 2);
    const Field f5 = field_make(FieldDescriptor::prime(5));
    for (const Field& f : {rationals(), f5}) {
        for (auto t : all_types_up_to(4)) {
            std::vector<Scalar> spec1;
            for (auto& g : t.groups) {
                g.eigenvalue = Scalar::from_rational(f, g.eigenvalue.rational());
                spec1.push_back(g.eigenvalue);
            }
            const ExactMatrix j = standard_canonical_matrix(f, t).matrix;
            const std::size_t n = j.rows();
            ExactMatrix p = identity_matrix(f, n);
            do {
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) p(r, c) = Scalar::from_int(f, d(rng));
            } while (determinant(p).is_zero());
            const ExactMatrix pinv = inverse(p);
            const ExactMatrix m1 = p * j * pinv;
            const ExactMatrix m2 = m1 * m1 + scaled(m1, Scalar::from_int(f, d(rng)));
            // m2 is triangular in the Jordan basis; read its eigenvalues there.
            const ExactMatrix tri2 = pinv * m2 * p;
            std::vector<Scalar> spec2;
            for (std::size_t i = 0; i < n; ++i) spec2.push_back(tri2(i, i));
            const ExactMatrix basis = simultaneous_triangularize({m1, m2}, {spec1, spec2});
            CHECK(all_upper_triangular_after(basis, {m1, m2}));
        }
    }
}
