#include "linobs/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace linobs {

PairReport pair_report(const PatternPair& pair, const std::vector<GluingData>& gluings, const SweepOptions& options) {
    const PairRelation rel = classify_pair(pair.s, pair.t);
    const BlockSystem sys = build_block_system(pair.s, pair.t);
    PairReport p;
    p.ps = pair.s.to_string();
    p.pt = pair.t.to_string();
    p.relation = rel.kind_name();
    p.flags = rel.flags();
    p.d = sys.d;
    p.dprime = sys.dprime;
    if (options.symbolic) p.symbolic_determinant = symbolic_determinant(sys).to_string();
    for (const auto& g : gluings) {
        const Verdict v = torsion_only_verdict(sys, g);
        GlueVerdict gv;
        gv.glue = g.values();
        gv.torsion_only = v.torsion_only;
        if (v.determinant) gv.determinant = v.determinant->get_str();
        if (options.with_kernels) {
            for (const auto& vec : v.kernel) {
                std::vector<std::string> row;
                for (const auto& x : vec) row.push_back(x.get_str());
                gv.kernel.push_back(std::move(row));
            }
        }
        p.verdicts.push_back(std::move(gv));
    }
    return p;
}

CaseReport sweep_report(std::size_t n, const std::vector<GluingData>& gluings, const std::string& config,
                        const SweepOptions& options) {
    for (const auto& g : gluings)
        if (g.i * g.l - g.j * g.k != 1) throw std::invalid_argument("gluing " + g.to_string() + " is not unimodular");
    const auto pairs = enumerate_partition_pairs(n);
    CaseReport r;
    r.dim = n;
    r.config = config;
    r.config_hash = config_hash(config);
    r.pairs.resize(pairs.size());

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < pairs.size();) {
            try {
                r.pairs[idx] = pair_report(pairs[idx], gluings, options);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    r.aggregate = recount(r);
    return r;
}

bool torsion_only_predicted(std::size_t n, const GluingData& g) { return n <= 5 && g.all_nonzero; }

std::size_t count_anomalies(const CaseReport& r) {
    std::size_t bad = 0;
    for (const auto& p : r.pairs) {
        for (const auto& v : p.verdicts) {
            const GluingData g = validate_gluing(v.glue[0], v.glue[1], v.glue[2], v.glue[3]);
            if (torsion_only_predicted(r.dim, g) && !v.torsion_only) ++bad;
        }
    }
    return bad;
}

}  // namespace linobs
