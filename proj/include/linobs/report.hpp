#ifndef LINOBS_REPORT_HPP
#define LINOBS_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

struct GlueVerdict {
    std::array<long long, 4> glue{};
    bool torsion_only = false;
    std::string determinant;                       // empty when not computed
    std::vector<std::vector<std::string>> kernel;  // integer entries as text

    friend bool operator==(const GlueVerdict&, const GlueVerdict&) = default;
};

struct PairReport {
    std::string ps, pt, relation;
    std::vector<std::string> flags;
    std::size_t d = 0, dprime = 0;
    std::optional<std::string> symbolic_determinant;
    std::vector<GlueVerdict> verdicts;

    friend bool operator==(const PairReport&, const PairReport&) = default;
};

struct Aggregate {
    std::size_t pairs = 0, instances = 0, torsion_only = 0, not_torsion_only = 0;

    friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

struct CaseReport {
    std::size_t dim = 0;
    std::string config;       // generator / options summary
    std::string config_hash;  // 16 hex digits of FNV-1a over config
    std::vector<PairReport> pairs;
    Aggregate aggregate;

    friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

enum class ReportFormat { structured, csv, table };

ReportFormat parse_report_format(std::string_view name);

/// Counts recomputed from the rows.
Aggregate recount(const CaseReport& r);

std::string config_hash(std::string_view config);

std::string serialize_report(const CaseReport& r, ReportFormat format);

/// Inverse of the structured (JSON) serialization. Throws
/// std::invalid_argument on malformed input.
CaseReport parse_structured_report(std::string_view text);

/// One CSV row: dim, ps, pt, relation, i, j, k, l, torsion_only, determinant.
struct CsvRow {
    std::size_t dim = 0;
    std::string ps, pt, relation;
    std::array<long long, 4> glue{};
    bool torsion_only = false;
    std::string determinant;

    friend auto operator<=>(const CsvRow&, const CsvRow&) = default;
};

std::vector<CsvRow> csv_rows(const CaseReport& r);
std::vector<CsvRow> parse_csv_report(std::string_view text);

}  // namespace linobs

#endif  // LINOBS_REPORT_HPP
