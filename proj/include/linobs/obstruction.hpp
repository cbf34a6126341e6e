#ifndef LINOBS_OBSTRUCTION_HPP
#define LINOBS_OBSTRUCTION_HPP

#include "linobs/gluing.hpp"
#include "linobs/matrixcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

/// Set partition of {0..n-1}. Blocks are sorted and ordered by their
/// smallest element. Text form is 1-based: "1,2|3,4".
class BlockPattern {
public:
    BlockPattern() = default;
    /// Validates that the blocks are nonempty, disjoint and cover {0..n-1}.
    BlockPattern(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

    /// Block index of each element (a restricted growth string).
    static BlockPattern from_labels(const std::vector<std::size_t>& labels);
    /// Parses "1,2|3"; n defaults to the largest element.
    static BlockPattern parse(std::string_view text, std::size_t n = 0);

    std::size_t n() const { return n_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& labels() const { return labels_; }
    std::vector<std::size_t> block_sizes() const;

    /// Image under c -> perm[c].
    BlockPattern permuted(const std::vector<std::size_t>& perm) const;
    /// Removes element c and renumbers the rest.
    BlockPattern without(std::size_t c) const;
    bool refines(const BlockPattern& coarser) const;

    std::string to_string() const;
    friend bool operator==(const BlockPattern& a, const BlockPattern& b) { return a.labels_ == b.labels_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> labels_;
};

/// All set partitions of {0..n-1} in increasing label order.
std::vector<BlockPattern> enumerate_set_partitions(std::size_t n);

struct PatternPair {
    BlockPattern s, t;
};

/// Concatenated labels of s and t; canonical pairs minimize this over all
/// simultaneous relabelings.
std::vector<std::size_t> pair_key(const PatternPair& p);

/// Canonical representative of the relabeling orbit of p.
PatternPair canonical_pair(const PatternPair& p);

/// One canonical representative per orbit of pairs of set partitions under
/// simultaneous relabeling, sorted by pair_key. Throws std::out_of_range
/// unless 2 <= n <= 7.
std::vector<PatternPair> enumerate_partition_pairs(std::size_t n);

struct PairRelation {
    enum class Kind { equal, t_refines_s, s_refines_t, transverse };
    Kind kind = Kind::transverse;
    bool s_scalar = false;          // d = 1
    bool s_distinct = false;        // d = n
    bool shared_singleton = false;  // a size-1 block present in both

    std::string kind_name() const;
    std::vector<std::string> flags() const;
};

PairRelation classify_pair(const BlockPattern& ps, const BlockPattern& pt);

/// Exponent system over unknowns a_1..a_n, s_1..s_d, t_1..t_d' with
/// entries in Z[i,j,k,l]. Rows: k a_c + l s_σ(c) - t_π(c) for each c,
/// then Σ_{c in S-block} a_c, then Σ_{c in T-block} (i a_c + j s_σ(c)).
struct BlockSystem {
    std::size_t n = 0, d = 0, dprime = 0;
    PolyMatrix rows;
    std::vector<std::string> unknowns;
    std::vector<std::size_t> sigma, pi;  // block index of each c under S, T

    std::size_t size() const { return rows.rows(); }
};

/// Variable list i, j, k, l shared by every block system.
const MultiPoly::VarList& gluing_variables();

BlockSystem build_block_system(const BlockPattern& ps, const BlockPattern& pt);

/// The system with the d S-block determinant rows removed.
BlockSystem without_s_determinant_rows(const BlockSystem& sys);

/// Rational matrix of the system at the gluing.
QMatrix evaluate_system(const BlockSystem& sys, const GluingData& g);

struct Verdict {
    bool torsion_only = false;
    std::optional<mpz_class> determinant;        // square systems only
    std::vector<std::vector<mpz_class>> kernel;  // primitive integer vectors
};

/// torsion_only iff the kernel over Q is trivial. For square systems the
/// determinant is computed first and the kernel only when it vanishes,
/// unless full_kernel is set.
Verdict torsion_only_verdict(const BlockSystem& sys, const GluingData& g, bool full_kernel = false);

MultiPoly symbolic_determinant(const BlockSystem& sys);

struct ReducedInstance {
    std::size_t removed = 0;  // 0-based element deleted
    BlockPattern s, t;
    BlockSystem system;
};

/// Deletes the smallest shared singleton. Throws std::invalid_argument if
/// there is none.
ReducedInstance reduce_shared_singleton(const BlockPattern& ps, const BlockPattern& pt);

}  // namespace linobs

#endif  // LINOBS_OBSTRUCTION_HPP
