#ifndef LINOBS_JORDANLAB_HPP
#define LINOBS_JORDANLAB_HPP

#include "linobs/matrixcore.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

struct JordanGroup {
    Scalar eigenvalue;
    std::vector<unsigned> partition;  // nonincreasing
};

/// Jordan type: one partition per distinct eigenvalue.
struct JordanType {
    std::vector<JordanGroup> groups;

    std::size_t dimension() const;
    /// "eig=1:2,1,1;eig=-1:1"
    std::string to_string() const;
};

/// Parses `eig=<scalar>:<parts>` groups joined by ';' ("λ=" is accepted in
/// place of "eig="). Throws std::invalid_argument on malformed text,
/// repeated eigenvalues or an empty partition.
JordanType parse_jordan_type(const Field& f, std::string_view text);

/// Throws std::invalid_argument unless every partition is nonempty,
/// positive and nonincreasing and the eigenvalues are distinct.
void validate(const JordanType& t);

/// Jordan type of M. `eigenvalues` lists the characteristic roots with
/// multiplicity; throws std::invalid_argument when they do not account for
/// the whole space.
JordanType jordan_type_of(const ExactMatrix& m, const std::vector<Scalar>& eigenvalues);

/// A canonical matrix together with the basis indices of every Jordan
/// block, listed along the chain: M e_{b[0]} = λ e_{b[0]} and
/// M e_{b[r]} = λ e_{b[r]} + e_{b[r-1]}.
struct CanonicalForm {
    ExactMatrix matrix;
    std::vector<std::vector<std::vector<std::size_t>>> blocks;  // [group][part] -> indices
    bool beyond_four = false;  // dimension > 4: standard form only
};

/// Standard Jordan form, except the single-eigenvalue types (2,1,1) and
/// (2,2), which use the rearranged forms λI + E14 and λI + E13 + E24.
CanonicalForm modified_canonical_matrix(const Field& f, const JordanType& t);
CanonicalForm standard_canonical_matrix(const Field& f, const JordanType& t);

enum class CentralizerSize { small, big };

const char* to_string(CentralizerSize s);

struct CentralizerReport {
    std::vector<ExactMatrix> basis;
    std::size_t dimension = 0;
    std::optional<CentralizerSize> classification;
    std::optional<std::array<ExactMatrix, 4>> witness;  // E11, E12, E21, E22
};

/// Basis of {X : XM = MX} from the kernel of the commutation map on the
/// n^2 entries (row-major coordinates).
CentralizerReport centralizer_basis(const ExactMatrix& m);

/// Σ over eigenvalues of Σ_{a,b} min(μ_a, μ_b).
std::size_t centralizer_dimension_formula(const JordanType& t);

/// Big iff some partition has a repeated part. Big types carry matrix
/// units on the first two equal-size blocks of the modified form.
CentralizerReport classify_centralizer(const Field& f, const JordanType& t);

/// A basis order under which every matrix of the family is upper
/// triangular, found by topologically sorting the union of supports;
/// nullopt when the supports contain a cycle.
std::optional<std::vector<std::size_t>> triangularizing_order(const std::vector<ExactMatrix>& family);

/// True when the centralizer of the modified form is triangularized by a
/// basis permutation (the certificate used for Small types).
bool small_certificate(const Field& f, const JordanType& t);

/// Subspaces are given by consecutive column ranges of `basis`.
struct Decomposition {
    ExactMatrix basis;
    std::vector<std::vector<std::size_t>> index_sets;
    std::vector<std::vector<Scalar>> labels;  // eigenvalue(s) attached to each subspace

    std::size_t size() const { return index_sets.size(); }
    ExactMatrix subspace(std::size_t k) const;
};

/// Generalized eigenspaces ker (X - λI)^n for the distinct supplied
/// eigenvalues, each with a canonical (reduced) basis. Throws
/// std::invalid_argument when they do not span the space.
Decomposition generalized_eigenspace_decomposition(const ExactMatrix& x, const std::vector<Scalar>& eigenvalues);

/// Nonzero pairwise intersections U_a ∩ V_b, a-major. Throws
/// std::invalid_argument if they fail to span the space.
Decomposition common_refinement(const Decomposition& ds, const Decomposition& dt);

/// Whether every subspace of d is mapped into itself by y.
bool preserves_decomposition(const Decomposition& d, const ExactMatrix& y);

/// Matrix of m restricted to the column span of b (b has independent
/// columns); throws std::invalid_argument if the span is not invariant.
ExactMatrix restrict_to(const ExactMatrix& m, const ExactMatrix& b);

/// Basis P with P^-1 M P upper triangular for every M. The space is first
/// split into joint generalized eigenspaces; inside each, common
/// eigenvectors are peeled off one at a time. spectra[i] lists the
/// eigenvalues of ms[i]. Throws std::invalid_argument for non-commuting
/// input or an incomplete spectrum.
ExactMatrix simultaneous_triangularize(const std::vector<ExactMatrix>& ms,
                                       const std::vector<std::vector<Scalar>>& spectra);

/// All Jordan types of the given dimension with a single eigenvalue.
std::vector<JordanType> single_eigenvalue_types(const Scalar& lambda, unsigned n);

}  // namespace linobs

#endif  // LINOBS_JORDANLAB_HPP
