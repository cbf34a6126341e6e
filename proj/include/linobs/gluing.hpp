#ifndef LINOBS_GLUING_HPP
#define LINOBS_GLUING_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

/// Torus gluing B = A^i S^j, T = A^k S^l, normalized to il - jk = 1.
struct GluingData {
    long long i = 1, j = 0, k = 0, l = 1;
    bool parity_ok = false;    // j, k odd and i, l nonzero even
    bool all_nonzero = false;
    bool flipped = false;      // input had determinant -1

    std::array<long long, 4> values() const { return {i, j, k, l}; }
    /// "i,j,k,l"
    std::string to_string() const;
    friend bool operator==(const GluingData& a, const GluingData& b) { return a.values() == b.values(); }
};

/// Accepts il - jk = ±1; determinant -1 is normalized by (k,l) -> (-k,-l),
/// i.e. T -> T^-1. Throws std::invalid_argument otherwise.
GluingData validate_gluing(long long i, long long j, long long k, long long l);

/// Parses "i,j,k,l".
GluingData parse_gluing(std::string_view text);

/// Gluing matrix inverse [[l,-j],[-k,i]] (swapping the two sides).
GluingData inverse_gluing(const GluingData& g);

struct GluingGenerator {
    unsigned max_length = 6;  // words in the elementary matrices and inverses
    bool nonzero = true;      // keep only gluings with every entry nonzero
    bool parity = false;      // keep only j, k odd and i, l even
    std::size_t limit = 0;    // 0 = no limit

    /// "len=6", optionally followed by ",nonzero", ",parity", ",limit=100",
    /// ",any" (drop the nonzero filter).
    static GluingGenerator parse(std::string_view text);
    std::string to_string() const;
};

/// Distinct products of [[1,1],[0,1]], [[1,0],[1,1]] and their inverses of
/// length <= max_length, in breadth-first order (generators multiplied on
/// the right in that order), then filtered.
std::vector<GluingData> generate_gluings(const GluingGenerator& gen);

}  // namespace linobs

#endif  // LINOBS_GLUING_HPP
