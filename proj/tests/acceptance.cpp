// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "linobs/amalgam.hpp"
#include "linobs/jordanlab.hpp"
#include "linobs/lemma61lab.hpp"
#include "linobs/obstruction.hpp"
#include "linobs/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace linobs;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Field Q{};

std::vector<GluingData> nonzero_gluings() { return generate_gluings(GluingGenerator{}); }

Outcome all_torsion_only(std::size_t n, std::size_t min_gluings, double limit) {
    const auto t0 = Clock::now();
    const auto gl = nonzero_gluings();
    const CaseReport r = sweep_report(n, gl, "acceptance");
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << r.aggregate.pairs << " pairs x " << gl.size() << " gluings, " << r.aggregate.torsion_only << "/"
      << r.aggregate.instances << " torsion-only, " << std::fixed << std::setprecision(2) << dt << " s";
    const bool ok = gl.size() >= min_gluings && r.aggregate.pairs == enumerate_partition_pairs(n).size() &&
                    r.aggregate.instances == r.aggregate.pairs * gl.size() && r.aggregate.not_torsion_only == 0 &&
                    dt < limit;
    return {ok, d.str()};
}

// All (i, j, k, l) in [-b, b]^4 with il - jk = 1.
std::vector<std::array<long, 4>> unimodular_box(long b) {
    std::vector<std::array<long, 4>> out;
    for (long i = -b; i <= b; ++i)
        for (long j = -b; j <= b; ++j)
            for (long k = -b; k <= b; ++k)
                for (long l = -b; l <= b; ++l)
                    if (i * l - j * k == 1) out.push_back({i, j, k, l});
    return out;
}

Outcome criterion1() { return all_torsion_only(3, 200, 5.0); }

Outcome criterion2() {
    const auto t0 = Clock::now();
    Outcome sweep = all_torsion_only(4, 200, 30.0);

    const auto vars = gluing_variables();
    const MultiPoly i = MultiPoly::variable(vars, "i"), j = MultiPoly::variable(vars, "j"),
                    k = MultiPoly::variable(vars, "k"), l = MultiPoly::variable(vars, "l");
    struct Case {
        const char* ps;
        const char* pt;
        std::optional<MultiPoly> factor;
        long il_coeff, constant;
    };
    const std::vector<Case> cases = {
        {"1,2|3,4", "1,4|2,3", std::nullopt, 0, 0},
        {"1,2,3|4", "1,2,4|3", i * l * mpq_class(8) + j * k, 9, 1},
        {"1,4|2|3", "2,3|1|4", std::nullopt, 0, 0},
        {"1,2|3,4", "1,4|2|3", i * l + j * k, 2, 1},
        {"1,2,3|4", "1,4|2|3", j * k * mpq_class(2) + i * l * mpq_class(4), 6, 2},
        {"1,2,3|4", "1,2|3,4", i * l * mpq_class(2) + j * k, 3, 1},
    };
    std::vector<std::vector<std::size_t>> keys;
    for (const auto& p : enumerate_partition_pairs(4)) keys.push_back(pair_key(p));

    const auto box = unimodular_box(6);
    bool ok = sweep.pass;
    std::size_t present = 0, samples = 0;
    for (const auto& c : cases) {
        const BlockPattern ps = BlockPattern::parse(c.ps), pt = BlockPattern::parse(c.pt);
        const auto key = pair_key(canonical_pair({ps, pt}));
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) ++present;
        const MultiPoly det = symbolic_determinant(build_block_system(ps, pt));
        MultiPoly cofactor = det;
        if (c.factor) {
            const auto q = det.divide_exact(*c.factor);
            ok = ok && q && q->terms().size() == 1;
            if (q) cofactor = *q;
        } else {
            ok = ok && det.terms().size() == 1;
        }
        for (const auto& g : box) {
            const std::vector<mpq_class> pt_q = {g[0], g[1], g[2], g[3]};
            const bool nonzero = g[0] && g[1] && g[2] && g[3];
            ++samples;
            if (nonzero && det.evaluate(pt_q) == 0) ok = false;
            if (c.factor) {
                // On il - jk = 1 the factor is il_coeff * il - constant, which
                // has no integer zero since constant / il_coeff is not an integer.
                const mpq_class v = c.factor->evaluate(pt_q);
                ok = ok && v == mpq_class(c.il_coeff * g[0] * g[3] - c.constant) && v != 0;
                ok = ok && c.constant % c.il_coeff != 0;
            }
        }
    }
    ok = ok && present == cases.size();
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << sweep.detail << "; " << present << "/6 case pairs canonical; " << samples << " determinant samples; total "
      << std::fixed << std::setprecision(2) << dt << " s";
    return {ok && dt < 30.0, d.str()};
}

Outcome criterion3() {
    const auto t0 = Clock::now();
    const auto gl = nonzero_gluings();
    SweepOptions opt;
    opt.with_kernels = false;
    const CaseReport r = sweep_report(5, gl, "acceptance", opt);
    std::size_t nonzero_det = 0, instances = 0;
    for (const auto& p : r.pairs)
        for (const auto& v : p.verdicts) {
            ++instances;
            if (!v.determinant.empty() && v.determinant != "0") ++nonzero_det;
        }
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << r.pairs.size() << " pairs x " << gl.size() << " gluings, " << nonzero_det << "/" << instances
      << " nonzero determinants, " << std::fixed << std::setprecision(2) << dt << " s";
    return {gl.size() >= 100 && instances > 0 && nonzero_det == instances && dt < 60.0, d.str()};
}

Outcome criterion4() {
    const auto gl = nonzero_gluings();
    std::size_t checked = 0, open = 0;
    for (const auto& p : enumerate_partition_pairs(4)) {
        const BlockSystem reduced = without_s_determinant_rows(build_block_system(p.s, p.t));
        for (std::size_t g = 0; g < gl.size(); g += 8) {
            const Verdict v = torsion_only_verdict(reduced, gl[g]);
            ++checked;
            if (!v.torsion_only && !v.kernel.empty()) {
                // The kernel vector must solve the reduced system exactly.
                const QMatrix m = evaluate_system(reduced, gl[g]);
                bool solves = true;
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    mpq_class acc = 0;
                    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * mpq_class(v.kernel[0][c]);
                    solves = solves && acc == 0;
                }
                if (solves) ++open;
            }
        }
    }
    std::ostringstream d;
    d << open << "/" << checked << " reduced systems with a verified kernel vector";
    return {checked > 0 && open == checked, d.str()};
}

bool units_multiply(const std::array<ExactMatrix, 4>& e) {
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    const ExactMatrix prod = e[2 * a + b] * e[2 * c + d];
                    if (!(b == c ? prod == e[2 * a + d] : is_zero_matrix(prod))) return false;
                }
    return true;
}

Outcome criterion5() {
    const Scalar lambda = Scalar::from_int(Q, 3);
    using Parts = std::vector<unsigned>;
    std::set<Parts> small, big;
    bool ok = true;
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& t : single_eigenvalue_types(lambda, n)) {
            const CentralizerReport r = classify_centralizer(Q, t);
            const bool is_big = r.classification == CentralizerSize::big;
            (is_big ? big : small).insert(t.groups[0].partition);
            const ExactMatrix m = modified_canonical_matrix(Q, t).matrix;
            if (is_big) {
                ok = ok && r.witness && units_multiply(*r.witness);
                if (r.witness)
                    for (const auto& e : *r.witness) ok = ok && e * m == m * e;
            }
            if (n == 4) ok = ok && is_big == satisfies_polynomial(m, shifted_power_polynomial(lambda, 2));
        }
    }
    const std::set<Parts> want_small{{1}, {2}, {2, 1}, {3}, {3, 1}, {4}};
    const std::set<Parts> want_big{{1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1}, {2, 2}};
    ok = ok && small == want_small && big == want_big;
    std::ostringstream d;
    d << small.size() << " Small, " << big.size() << " Big; witnesses and (t-λ)^2 checked";
    return {ok, d.str()};
}

mpq_class random_nonzero(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    long a = 0;
    while (a == 0) a = num(rng);
    mpq_class q(a, den(rng));
    q.canonicalize();
    return q;
}

Outcome criterion6() {
    const Field f = symbolic_field({"z", "w"});
    const Lemma61Check sym = verify_lemma61(lemma61_pair(Scalar::variable(f, "z"), Scalar::variable(f, "w")));
    std::mt19937 rng(61);
    std::size_t good = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const mpq_class z = random_nonzero(rng), w = random_nonzero(rng);
        const Lemma61Pair p = lemma61_pair(Scalar::from_rational(Q, z), Scalar::from_rational(Q, w));
        // Independent 2x2 arithmetic on mpq.
        const mpq_class a11 = (1 + z * z) / w, a12 = z, a21 = z, a22 = w;
        const mpq_class b11 = (1 + w * w) / z, b12 = -w, b21 = -w, b22 = z;
        const mpq_class b = 2 * (1 + z * z + w * w) / (z * w);
        const mpq_class da = a11 * a22 - a12 * a21, db = b11 * b22 - b12 * b21;
        // [α, β] = α β α^-1 β^-1 with inverses of determinant-one matrices.
        const mpq_class ab11 = a11 * b11 + a12 * b21, ab12 = a11 * b12 + a12 * b22;
        const mpq_class ab21 = a21 * b11 + a22 * b21, ab22 = a21 * b12 + a22 * b22;
        const mpq_class ai11 = a22, ai12 = -a12, ai21 = -a21, ai22 = a11;
        const mpq_class bi11 = b22, bi12 = -b12, bi21 = -b21, bi22 = b11;
        const mpq_class x11 = ab11 * ai11 + ab12 * ai21, x12 = ab11 * ai12 + ab12 * ai22;
        const mpq_class x21 = ab21 * ai11 + ab22 * ai21, x22 = ab21 * ai12 + ab22 * ai22;
        const mpq_class c11 = x11 * bi11 + x12 * bi21, c12 = x11 * bi12 + x12 * bi22;
        const mpq_class c21 = x21 * bi11 + x22 * bi21, c22 = x21 * bi12 + x22 * bi22;
        const bool hand = da == 1 && db == 1 && c11 == -1 && c12 == -b && c21 == 0 && c22 == -1;
        if (hand && verify_lemma61(p).ok() && p.b == Scalar::from_rational(Q, b)) ++good;
    }
    std::ostringstream d;
    d << "symbolic " << (sym.ok() ? "holds" : "fails") << ", " << good << "/100 rational spot checks";
    return {sym.ok() && good == 100, d.str()};
}

Outcome criterion7() {
    const CommutatorIdentityResult id = case2_commutator(case2_symbolic_unknowns());
    const bool identity = id.identity_holds() && id.a21_matches() && id.diagonal_blocks_ok();
    const Case2Sweep s = case2_sweep(9, 8);
    // |k| odd <= 9: 10 values; |l| even nonzero <= 8: 8 values; 3 lambdas; 2 blocks M.
    const bool sweep = s.failures == 0 && s.rows.size() == 10 * 8 * 3 * 2;
    std::ostringstream d;
    d << "trace identity " << (identity ? "holds" : "fails") << " in ten unknowns; " << s.rows.size() - s.failures << "/"
      << s.rows.size() << " powering checks";
    return {identity && sweep, d.str()};
}

Outcome criterion8() {
    const Scalar one = Scalar::one(Q), b = Scalar::from_int(Q, 1);
    const std::vector<Scalar> values = {Scalar::zero(Q), Scalar::from_int(Q, 2), Scalar::from_int(Q, -3)};
    const SupportPattern expected = case1_expected_pattern();
    const bool family = case1_family_pattern(one, b, 1, values) == expected;
    const ExactMatrix t =
        case1_T_matrix(one, b, 1, {Scalar::from_int(Q, 2), Scalar::zero(Q), Scalar::from_int(Q, 5)});
    const bool member = forced_zero_pattern(t) == expected;

    const CentralizerReport c = centralizer_basis(t);
    std::mt19937 rng(8);
    auto element = [&] {
        ExactMatrix m = zero_matrix(Q, 4, 4);
        for (const auto& e : c.basis) m = m + scaled(e, Scalar::from_rational(Q, random_nonzero(rng)));
        return m;
    };
    std::size_t mult = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix x = element(), y = element();
        if (x * t == t * x && four_corners(x * y) == four_corners(x) * four_corners(y)) ++mult;
    }
    std::ostringstream d;
    d << "pattern " << (member && family ? "matches" : "differs") << "; four corners multiplicative on " << mult
      << "/100 products";
    return {family && member && mult == 100, d.str()};
}

Outcome criterion9() {
    std::mt19937 rng(51);
    std::size_t tested = 0, good = 0;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const Field f(FieldDescriptor::prime(p));
        std::uniform_int_distribution<long long> any(0, static_cast<long long>(p) - 1), unit(1, static_cast<long long>(p) - 1);
        for (std::size_t n = 1; n <= 4; ++n) {
            std::uint64_t pk = 1;
            while (pk < n) pk *= p;  // p^ceil(log_p n)
            for (int trial = 0; trial < 500; ++trial) {
                std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
                std::uint64_t big_n = 1;
                for (std::size_t r = 0; r < n; ++r) {
                    rows[r][r] = unit(rng);
                    // Order of the diagonal entry by repeated multiplication mod p.
                    std::uint64_t o = 1;
                    for (long long v = rows[r][r]; v % static_cast<long long>(p) != 1; v = v * rows[r][r] % static_cast<long long>(p)) ++o;
                    big_n = std::lcm(big_n, o);
                    for (std::size_t c = r + 1; c < n; ++c) rows[r][c] = any(rng);
                }
                const ExactMatrix x = int_matrix(f, rows);
                const std::uint64_t bound = big_n * pk;
                const auto order = multiplicative_order(x, bound);
                ++tested;
                if (order && bound % *order == 0 && is_identity(matrix_pow(x, static_cast<long long>(bound)))) ++good;
            }
        }
    }
    std::ostringstream d;
    d << good << "/" << tested << " orders divide N p^ceil(log_p n)";
    return {good == tested && tested == 3 * 4 * 500, d.str()};
}

Outcome criterion10() {
    std::size_t built = 0, certified = 0;
    const std::vector<GluingData> gl = {validate_gluing(2, 1, 3, 2), validate_gluing(2, 3, 1, 2), validate_gluing(-2, 1, 1, -1)};
    for (std::size_t n = 3; n <= 4; ++n) {
        for (const auto& pair : enumerate_partition_pairs(n)) {
            const BlockSystem sys = build_block_system(pair.s, pair.t);
            for (const auto& g : gl) {
                const TorsionSolution sol = adjugate_solution(sys, g, sys.size() - 1);
                if (sol.modulus > 60) continue;
                const Representation rho =
                    torsion_representation(pair.s, pair.t, g, sol.x, static_cast<unsigned>(sol.modulus.get_ui()));
                ++built;
                if (!check_representation(rho, g).ok()) continue;
                const Certificate c = unfaithfulness_certificate(rho, g);
                if (!c.found) continue;
                const ExactMatrix image = evaluate_word(rho, GroupWord::parse(std::string(1, c.element)));
                if (is_identity(matrix_pow(image, static_cast<long long>(c.exponent)))) ++certified;
            }
        }
    }
    const Certificate trivial = unfaithfulness_certificate(trivial_representation(Q, 3), validate_gluing(2, 1, 1, 1));
    const bool trivial_ok = trivial.found && trivial.text == "S ∈ kernel";
    std::ostringstream d;
    d << certified << "/" << built << " torsion representations certified; trivial: \"" << trivial.text << "\"";
    return {built >= 10 && certified == built && trivial_ok, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"dimension 3 sweep", criterion1},
        {"dimension 4 sweep and case determinants", criterion2},
        {"dimension 5 determinants", criterion3},
        {"reduced systems have kernels", criterion4},
        {"4x4 centralizer lists", criterion5},
        {"commutator pair identity", criterion6},
        {"case 2 identities", criterion7},
        {"case 1 pattern", criterion8},
        {"finite-field orders", criterion9},
        {"amalgam pipeline", criterion10},
    };
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << c + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[c].first << " - "
                  << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
