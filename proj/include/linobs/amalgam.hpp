#ifndef LINOBS_AMALGAM_HPP
#define LINOBS_AMALGAM_HPP

#include "linobs/gluing.hpp"
#include "linobs/matrixcore.hpp"
#include "linobs/obstruction.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

// Words in (F(X,Y) x <S>) * (F(U,V) x <T>) amalgamated along
// <A,S> = <B,T>, where A = X Y X^-1 Y^-1 and B = U V U^-1 V^-1.

enum class Side { left, right };

struct Letter {
    char gen;        // X, Y on the left; U, V on the right
    long long exp;   // nonzero
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// One factor's worth of a word: a free-group word times a power of the
/// central generator (S on the left, T on the right).
struct Syllable {
    Side side = Side::left;
    std::vector<Letter> free_part;
    long long central = 0;

    bool is_identity() const { return free_part.empty() && central == 0; }
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct GroupWord {
    std::vector<Syllable> syllables;

    /// Parses "X Y^-1 S^3 | U T^2". Tokens are generator letters with an
    /// optional integer exponent; A and B expand to their commutators.
    /// Every '|'-separated segment must use a single side's generators;
    /// "1" stands for the identity.
    /// Throws std::invalid_argument.
    static GroupWord parse(std::string_view text);

    /// Syllables joined by " | ", central power last in each syllable;
    /// "1" for the empty word.
    std::string to_string() const;

    GroupWord inverse() const;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// Free reduction inside each syllable, identity syllables dropped and
/// adjacent syllables on the same side merged. Idempotent.
GroupWord normal_form(const GroupWord& w);

/// Rewrites every purely peripheral syllable onto the target side:
/// B^m T^n -> A^(im+kn) S^(jm+ln) and A^m S^n -> B^(lm-kn) T^(-jm+in).
/// Other syllables are left alone. The result is in normal form.
GroupWord substitute_peripheral(const GroupWord& w, const GluingData& g, Side target);

/// Exponents (m, n) when the syllable is A^m S^n (left) or B^m T^n (right).
std::optional<std::pair<long long, long long>> peripheral_exponents(const Syllable& s);

struct Representation {
    Field field;
    std::size_t dim = 0;
    std::map<char, ExactMatrix> images;  // keys X Y S U V T

    const ExactMatrix& operator[](char gen) const;
};

/// Checks that all six images exist, are square of size dim over field and
/// are invertible. Throws std::invalid_argument.
void validate_representation(const Representation& rho);

Representation trivial_representation(const Field& f, std::size_t dim);

/// Image of the word.
ExactMatrix evaluate_word(const Representation& rho, const GroupWord& w);

struct RelationReport {
    std::vector<std::string> checked;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// The six defining relations: S commutes with X and Y, T commutes with
/// U and V, B = A^i S^j and T = A^k S^l.
RelationReport check_representation(const Representation& rho, const GluingData& g);

struct Certificate {
    bool found = false;
    char element = 0;       // 'S' or 'A'
    std::uint64_t exponent = 0;
    std::string text;       // "S ∈ kernel", "A^6 ∈ kernel" or "inconclusive: ..."
};

/// A power of S or A (both of infinite order in the group) mapped to the
/// identity. In characteristic p the order is searched among divisors of
/// lcm(p^d - 1, d <= n) times the unipotent exponent; in characteristic 0
/// diagonal images are read off their torsion entries and other images
/// get a short bounded search. Throws std::invalid_argument when the
/// relations fail.
Certificate unfaithfulness_certificate(const Representation& rho, const GluingData& g);

struct TorsionSolution {
    std::vector<mpz_class> x;
    mpz_class modulus;  // |det| of the system at the gluing
};

/// Column col of the adjugate of the evaluated system, which solves the
/// system mod |det|. Throws std::invalid_argument when det = 0 or col is
/// out of range.
TorsionSolution adjugate_solution(const BlockSystem& sys, const GluingData& g, std::size_t col);

/// Diagonal-type representation over cyclotomic(m) built from an integer
/// solution x = (a, s, t) of the block system taken mod m. S and T are the
/// diagonal matrices zeta^s, zeta^t; X, Y (and U, V) are a cyclic shift and
/// a diagonal matrix on each S-block (T-block) whose commutator is zeta^a
/// (zeta^(ia + js)). Throws std::invalid_argument when x does not solve the
/// system mod m.
Representation torsion_representation(const BlockPattern& ps, const BlockPattern& pt, const GluingData& g,
                                      const std::vector<mpz_class>& x, unsigned m);

}  // namespace linobs

#endif  // LINOBS_AMALGAM_HPP
