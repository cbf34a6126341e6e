#ifndef LINOBS_LEMMA61LAB_HPP
#define LINOBS_LEMMA61LAB_HPP

#include "linobs/matrixcore.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace linobs {

// Exact checks of the characteristic-zero 4x4 case analysis. Inputs are
// scalars of any field, so the same code runs on rationals and on
// rational functions in symbolic unknowns.

/// alpha = [[(1+z^2)/w, z], [z, w]], beta = [[(1+w^2)/z, -w], [-w, z]].
struct Lemma61Pair {
    ExactMatrix alpha, beta, commutator;
    Scalar b;  // 2(1 + z^2 + w^2) / (zw)
};

/// Throws std::invalid_argument when z or w is zero.
Lemma61Pair lemma61_pair(const Scalar& z, const Scalar& w);

struct Lemma61Check {
    bool det_alpha_one = false;
    bool det_beta_one = false;
    bool commutator_form = false;  // [alpha, beta] == [[-1, -b], [0, -1]]
    bool ok() const { return det_alpha_one && det_beta_one && commutator_form; }
};

Lemma61Check verify_lemma61(const Lemma61Pair& p);

/// Rational functions in the given names.
Field symbolic_field(std::vector<std::string> names);

/// [[P, Q], [0, P]] from 2x2 blocks.
ExactMatrix block_upper(const ExactMatrix& p, const ExactMatrix& q);

struct Case2Unknowns {
    Scalar z, w;
    std::array<Scalar, 4> x, y;  // (1,1), (1,2), (2,1), (2,2) of the top-right blocks
};

/// z, w, x11..x22, y11..y22 as variables of one rational-function field.
Case2Unknowns case2_symbolic_unknowns();

struct CommutatorIdentityResult {
    ExactMatrix x, y, a;  // a = X Y X^-1 Y^-1
    Scalar a21;           // entry (2,1) of the top-right block of a
    Scalar trace_sum;     // a11 + a22 of that block
    Scalar b;
    Scalar linear_form;   // -x12 w - x21 w + 2 y22 w + 2 x22 z + y12 z + y21 z

    bool a21_matches() const { return a21 == linear_form; }
    bool identity_holds() const { return trace_sum == b * a21; }
    /// Diagonal blocks of a equal [[-1, -b], [0, -1]].
    bool diagonal_blocks_ok() const;
};

/// X = [[alpha, x], [0, alpha]], Y = [[beta, y], [0, beta]].
CommutatorIdentityResult case2_commutator(const Case2Unknowns& u);

struct Case2TEntries {
    ExactMatrix t;  // A^k S^l
    Scalar t21;     // entry (2,1) of the top-right block
    Scalar trace;   // t11 + t22 of that block
};

/// T = A^k S^l with A = [[Abar, M], [0, Abar]], Abar = [[-1, -b], [0, -1]]
/// and S = [[lambda I, I], [0, lambda I]], by exact powering. Throws
/// std::invalid_argument for lambda = 0, even k or l = 0.
Case2TEntries case2_T_entries(const Scalar& b, const ExactMatrix& m, const Scalar& lambda, long long k, long long l);

/// k lambda^l a21
Scalar case2_t21_closed_form(const Scalar& a21, const Scalar& lambda, long long k, long long l);
/// -2 l lambda^(l-1)
Scalar case2_trace_closed_form(const Scalar& lambda, long long l);

struct Case2SweepRow {
    long long k = 0, l = 0;
    std::string lambda;
    bool generic = true;  // false: a21 = a11 + a22 = 0
    std::string t21, trace;
    bool ok = false;
};

struct Case2Sweep {
    std::vector<Case2SweepRow> rows;
    std::size_t failures = 0;
};

/// All odd |k| <= kmax, even nonzero |l| <= lmax and lambda in {1, -1, i}
/// over cyclotomic(4), for a generic M (a21 != 0: t21 must equal its
/// closed form and be nonzero) and a traceless M with a21 = 0 (t21 = 0 and
/// the trace equals its closed form).
Case2Sweep case2_sweep(long long kmax, long long lmax);

/// Boolean support grid.
struct SupportPattern {
    std::vector<std::vector<bool>> support;

    std::size_t size() const { return support.size(); }
    /// 1-based (row, col) positions outside the support.
    std::vector<std::pair<std::size_t, std::size_t>> forced_zeros() const;
    /// Rows of '?' and '0' separated by spaces, one row per line.
    std::string to_string() const;
    /// Every supported position is also supported in other.
    bool within(const SupportPattern& other) const;
    friend bool operator==(const SupportPattern&, const SupportPattern&) = default;
};

/// Union of the supports of a centralizer basis of m.
SupportPattern forced_zero_pattern(const ExactMatrix& m);

/// T = [[L, 0, p, q], [0, -L, -k b L, r], [0, 0, -L, 0], [0, 0, 0, L]] with
/// L = lambda^l and free entries (p, q, r).
ExactMatrix case1_T_matrix(const Scalar& lambda_l, const Scalar& b, long long k, const std::array<Scalar, 3>& free);

/// Union of forced_zero_pattern over case1_T_matrix with each free entry
/// ranging over values. A nonzero (1,4) entry makes the lambda^l part a
/// single Jordan block and shrinks the centralizer, so the full shape only
/// appears as a union over the family.
SupportPattern case1_family_pattern(const Scalar& lambda_l, const Scalar& b, long long k,
                                    const std::vector<Scalar>& values);

/// Shape of every matrix commuting with a Case 1 T:
///   ? 0 ? ?
///   ? ? ? ?
///   0 0 ? 0
///   ? 0 ? ?
SupportPattern case1_expected_pattern();

/// Entries (1,1), (1,4), (4,1), (4,4) as a 2x2 matrix.
ExactMatrix four_corners(const ExactMatrix& m);

enum class Case3Outcome { small, swap };
const char* to_string(Case3Outcome o);

/// small when -lambda^l != mu^l, swap otherwise. Throws
/// std::invalid_argument when lambda = mu or either is not a root of unity.
Case3Outcome case3_eigenvalue_split(const Scalar& lambda, const Scalar& mu, long long l);

/// [[-lambda^l, x, 0, 0], [0, -lambda^l, 0, 0], [0, 0, mu^l, y], [0, 0, 0, mu^l]].
ExactMatrix case3_T_matrix(const Scalar& lambda, const Scalar& mu, long long l, const Scalar& x, const Scalar& y);

struct UnipotentCheck {
    ExactMatrix commutator;
    Scalar b;
    bool common_e1 = false;  // alpha e1 and beta e1 both multiples of e1
};

/// Throws std::invalid_argument unless [alpha, beta] = [[1, b], [0, 1]]
/// with b != 0.
UnipotentCheck unipotent_commutator_triangular_check(const ExactMatrix& alpha, const ExactMatrix& beta);

struct UnipotentSearch {
    std::size_t tried = 0;
    std::size_t qualifying = 0;  // commutator of the required form
    std::size_t anomalies = 0;   // qualifying without a common e1
};

/// Random integer pairs with entries in [-bound, bound].
UnipotentSearch unipotent_search(std::uint64_t seed, std::size_t trials, long long bound);

}  // namespace linobs

#endif  // LINOBS_LEMMA61LAB_HPP
