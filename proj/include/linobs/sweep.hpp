#ifndef LINOBS_SWEEP_HPP
#define LINOBS_SWEEP_HPP

#include "linobs/obstruction.hpp"
#include "linobs/report.hpp"

namespace linobs {

struct SweepOptions {
    unsigned threads = 0;      // 0 = hardware concurrency
    bool symbolic = false;     // attach symbolic determinants
    bool with_kernels = true;  // record kernels of non-torsion-only instances
};

/// Verdict table for every canonical pair of dimension n against every
/// gluing. Pairs are processed in parallel and merged in canonical order,
/// so the report does not depend on scheduling. Throws
/// std::invalid_argument if a gluing is not unimodular.
CaseReport sweep_report(std::size_t n, const std::vector<GluingData>& gluings, const std::string& config,
                        const SweepOptions& options = {});

/// Report rows for a single pair.
PairReport pair_report(const PatternPair& pair, const std::vector<GluingData>& gluings, const SweepOptions& options);

/// Whether a torsion-only verdict is predicted: every
/// entry of the gluing nonzero and dimension at most 5.
bool torsion_only_predicted(std::size_t n, const GluingData& g);

/// Instances in the report where the prediction holds but the verdict is
/// not torsion-only.
std::size_t count_anomalies(const CaseReport& r);

}  // namespace linobs

#endif  // LINOBS_SWEEP_HPP
