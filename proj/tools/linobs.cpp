// linobs: command-line front end for the exponent-system sweeps, the
// centralizer lab and the representation checks.

#include "linobs/amalgam.hpp"
#include "linobs/fileio.hpp"
#include "linobs/jordanlab.hpp"
#include "linobs/lemma61lab.hpp"
#include "linobs/obstruction.hpp"
#include "linobs/report.hpp"
#include "linobs/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace linobs;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAnomaly = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-report commands produce a JSON document for the structured format and
// a flat table for csv / table.
struct Doc {
    std::string title;
    json body = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string render(const Doc& d, ReportFormat f) {
    std::ostringstream out;
    switch (f) {
        case ReportFormat::structured: out << d.body.dump(2) << '\n'; break;
        case ReportFormat::csv: {
            auto line = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
                out << '\n';
            };
            line(d.header);
            for (const auto& row : d.rows) line(row);
            break;
        }
        case ReportFormat::table: {
            std::vector<std::size_t> width(d.header.size(), 0);
            auto measure = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
            };
            measure(d.header);
            for (const auto& row : d.rows) measure(row);
            if (!d.title.empty()) out << d.title << '\n';
            auto line = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c + 1 == row.size()) out << row[c];
                    else out << std::left << std::setw(static_cast<int>(width[c] + 2)) << row[c];
                }
                out << '\n';
            };
            line(d.header);
            for (const auto& row : d.rows) line(row);
            break;
        }
    }
    return out.str();
}

const char* extension(ReportFormat f) {
    switch (f) {
        case ReportFormat::structured: return "json";
        case ReportFormat::csv: return "csv";
        case ReportFormat::table: return "txt";
    }
    return "txt";
}

struct Global {
    std::string format = "table";
    std::string out;
};

// --out wins; otherwise LINOBS_OUT_DIR/<name>.<ext>; otherwise stdout.
// Relative --out paths are resolved against LINOBS_OUT_DIR when it is set.
void emit(const Global& g, const std::string& name, const std::string& text) {
    const char* dir = std::getenv("LINOBS_OUT_DIR");
    std::filesystem::path path;
    if (!g.out.empty()) {
        path = g.out;
        if (dir && *dir && path.is_relative()) path = std::filesystem::path(dir) / path;
    } else if (dir && *dir) {
        path = std::filesystem::path(dir) / (name + '.' + extension(parse_report_format(g.format)));
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    write_file(path.string(), text);
    std::cerr << "wrote " << path.string() << '\n';
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

json matrix_json(const ExactMatrix& m) { return json::parse(write_matrix(m)); }

// Gluing options shared by the obstruct commands.
struct GlueArgs {
    std::vector<std::string> explicit_glue;
    std::string generator;
    bool nonzero = false, any = false, parity = false;
    std::size_t limit = 0;

    void add(CLI::App* app) {
        app->add_option("--glue", explicit_glue, "gluing i,j,k,l (repeatable)");
        app->add_option("--glue-gen", generator, "generator, e.g. len=6");
        app->add_flag("--nonzero", nonzero, "keep gluings with every entry nonzero (default)");
        app->add_flag("--any", any, "keep gluings with zero entries too");
        app->add_flag("--parity", parity, "keep gluings with j, k odd and i, l even");
        app->add_option("--limit", limit, "at most this many generated gluings");
    }

    std::pair<std::vector<GluingData>, std::string> resolve(bool default_generator) const {
        if (!explicit_glue.empty() && !generator.empty()) throw UsageError("--glue and --glue-gen are exclusive");
        if (nonzero && any) throw UsageError("--nonzero and --any are exclusive");
        std::vector<GluingData> out;
        std::string config;
        if (!explicit_glue.empty()) {
            for (const auto& text : explicit_glue) {
                out.push_back(parse_gluing(text));
                config += (config.empty() ? "glue=" : ";") + out.back().to_string();
            }
            return {out, config};
        }
        if (generator.empty() && !default_generator) throw UsageError("no gluing given (use --glue or --glue-gen)");
        GluingGenerator gen = generator.empty() ? GluingGenerator{} : GluingGenerator::parse(generator);
        if (any) gen.nonzero = false;
        if (nonzero) gen.nonzero = true;
        if (parity) gen.parity = true;
        if (limit) gen.limit = limit;
        return {generate_gluings(gen), gen.to_string()};
    }
};

void check_dim(std::size_t dim) {
    if (dim < 2 || dim > 7) throw UsageError("--dim must be in [2, 7]");
}

int cmd_enumerate(const Global& g, std::size_t dim, bool symbolic) {
    check_dim(dim);
    Doc d;
    d.title = "canonical pairs, dimension " + std::to_string(dim);
    d.header = {"ps", "pt", "relation", "flags", "d", "dprime"};
    if (symbolic) d.header.push_back("symbolic_determinant");
    d.body["dim"] = dim;
    d.body["pairs"] = json::array();
    for (const auto& p : enumerate_partition_pairs(dim)) {
        const PairRelation rel = classify_pair(p.s, p.t);
        std::string flags;
        for (const auto& f : rel.flags()) flags += (flags.empty() ? "" : " ") + f;
        std::vector<std::string> row = {p.s.to_string(), p.t.to_string(), rel.kind_name(), flags,
                                        std::to_string(p.s.block_count()), std::to_string(p.t.block_count())};
        json item = {{"ps", row[0]}, {"pt", row[1]}, {"relation", row[2]}, {"flags", rel.flags()},
                     {"d", p.s.block_count()}, {"dprime", p.t.block_count()}};
        if (symbolic) {
            const std::string det = symbolic_determinant(build_block_system(p.s, p.t)).to_string();
            row.push_back(det);
            item["symbolic_determinant"] = det;
        }
        d.rows.push_back(std::move(row));
        d.body["pairs"].push_back(std::move(item));
    }
    d.body["count"] = d.rows.size();
    emit(g, "obstruct-enumerate", render(d, parse_report_format(g.format)));
    return kOk;
}

std::string verdict_table(const CaseReport& r) {
    std::ostringstream out;
    const PairReport& p = r.pairs.front();
    out << "dimension " << r.dim << "  S " << p.ps << "  T " << p.pt << "  (" << p.relation << ")\n";
    if (p.symbolic_determinant) out << "symbolic determinant " << *p.symbolic_determinant << '\n';
    for (const auto& v : p.verdicts) {
        out << "glue " << v.glue[0] << ',' << v.glue[1] << ',' << v.glue[2] << ',' << v.glue[3]
            << "  torsion_only=" << yes_no(v.torsion_only);
        if (!v.determinant.empty()) out << "  det=" << v.determinant;
        for (const auto& k : v.kernel) {
            out << "  kernel=(";
            for (std::size_t c = 0; c < k.size(); ++c) out << (c ? "," : "") << k[c];
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

int cmd_verdict(const Global& g, std::size_t dim, const std::string& ps_text, const std::string& pt_text,
                const GlueArgs& ga, bool symbolic) {
    check_dim(dim);
    const BlockPattern ps = BlockPattern::parse(ps_text, dim), pt = BlockPattern::parse(pt_text, dim);
    if (ps.n() != dim || pt.n() != dim) throw UsageError("patterns do not match --dim");
    const auto [gluings, config] = ga.resolve(false);
    SweepOptions opt;
    opt.symbolic = symbolic;
    CaseReport r;
    r.dim = dim;
    r.config = config + (symbolic ? ";symbolic" : "");
    r.config_hash = config_hash(r.config);
    r.pairs.push_back(pair_report(PatternPair{ps, pt}, gluings, opt));
    r.aggregate = recount(r);
    const ReportFormat f = parse_report_format(g.format);
    emit(g, "obstruct-verdict", f == ReportFormat::table ? verdict_table(r) : serialize_report(r, f));
    return count_anomalies(r) ? kAnomaly : kOk;
}

int cmd_sweep(const Global& g, std::size_t dim, const GlueArgs& ga, unsigned threads, bool symbolic) {
    check_dim(dim);
    const auto [gluings, config] = ga.resolve(true);
    SweepOptions opt;
    opt.threads = threads;
    opt.symbolic = symbolic;
    const CaseReport r = sweep_report(dim, gluings, config + (symbolic ? ";symbolic" : ""), opt);
    emit(g, "obstruct-sweep", serialize_report(r, parse_report_format(g.format)));
    const std::size_t anomalies = count_anomalies(r);
    if (anomalies) std::cerr << anomalies << " instance(s) disagree with the predicted torsion-only verdict\n";
    return anomalies ? kAnomaly : kOk;
}

Field field_from(const std::string& text) { return field_make(FieldDescriptor::parse(text)); }

int cmd_jordan_classify(const Global& g, const std::string& type_text, const std::string& field_text) {
    const Field f = field_from(field_text);
    const JordanType t = parse_jordan_type(f, type_text);
    const CentralizerReport rep = classify_centralizer(f, t);
    const CanonicalForm form = modified_canonical_matrix(f, t);
    Doc d;
    d.title = "jordan type " + t.to_string();
    d.header = {"field", "value"};
    const std::string cls = rep.classification ? to_string(*rep.classification) : "n/a";
    d.rows = {{"type", t.to_string()},
              {"dimension", std::to_string(t.dimension())},
              {"classification", cls},
              {"centralizer_dimension", std::to_string(rep.dimension)},
              {"formula_dimension", std::to_string(centralizer_dimension_formula(t))}};
    d.body = {{"type", t.to_string()}, {"dimension", t.dimension()}, {"classification", cls},
              {"centralizer_dimension", rep.dimension}, {"formula_dimension", centralizer_dimension_formula(t)},
              {"canonical_matrix", matrix_json(form.matrix)}};
    if (t.dimension() <= 4) {
        const bool cert = small_certificate(f, t);
        d.rows.push_back({"triangular_certificate", yes_no(cert)});
        d.body["triangular_certificate"] = cert;
    }
    if (rep.witness) {
        json w = json::array();
        for (const auto& e : *rep.witness) w.push_back(matrix_json(e));
        d.body["witness"] = std::move(w);
        d.rows.push_back({"witness", "E11 E12 E21 E22"});
    }
    emit(g, "jordan-classify", render(d, parse_report_format(g.format)));
    return kOk;
}

int cmd_jordan_centralizer(const Global& g, const std::string& file) {
    const ExactMatrix m = read_matrix(read_file(file));
    const CentralizerReport rep = centralizer_basis(m);
    const SupportPattern pat = forced_zero_pattern(m);
    Doc d;
    d.title = "centralizer of " + file + ", dimension " + std::to_string(rep.dimension);
    d.header = {"row", "pattern"};
    std::istringstream lines(pat.to_string());
    std::string line;
    for (std::size_t r = 1; std::getline(lines, line); ++r) d.rows.push_back({std::to_string(r), line});
    json basis = json::array();
    for (const auto& b : rep.basis) basis.push_back(matrix_json(b));
    d.body = {{"dimension", rep.dimension}, {"pattern", pat.to_string()}, {"basis", std::move(basis)}};
    emit(g, "jordan-centralizer", render(d, parse_report_format(g.format)));
    return kOk;
}

int cmd_charp_order(const Global& g, const std::string& file, std::uint64_t bound) {
    const ExactMatrix m = read_matrix(read_file(file));
    if (!m.is_square()) throw UsageError("matrix is not square");
    const Field& f = m.zero().field();
    std::optional<std::uint64_t> order;
    std::string method;
    if (f.characteristic()) {
        order = charp_order(m);
        method = "divisor search";
    } else {
        order = multiplicative_order(m, bound);
        method = "power search up to " + std::to_string(bound);
    }
    const std::string shown = order ? std::to_string(*order) : (f.characteristic() ? "singular" : "exceeds bound");
    Doc d;
    d.title = "order of " + file + " over " + f.descriptor().to_string();
    d.header = {"field", "n", "order", "method"};
    d.rows = {{f.descriptor().to_string(), std::to_string(m.rows()), shown, method}};
    d.body = {{"field", f.descriptor().to_string()}, {"n", m.rows()}, {"order", order ? json(*order) : json(shown)},
              {"method", method}};
    emit(g, "charp-order", render(d, parse_report_format(g.format)));
    return kOk;
}

int cmd_lemma61(const Global& g, const std::string& z, const std::string& w, bool symbolic) {
    if (symbolic == (!z.empty() || !w.empty())) throw UsageError("give either --z and --w or --symbolic");
    if (!symbolic && (z.empty() || w.empty())) throw UsageError("--z and --w go together");
    const Field f = symbolic ? symbolic_field({"z", "w"}) : Field{};
    const Scalar zs = symbolic ? Scalar::variable(f, "z") : parse_scalar(f, z);
    const Scalar ws = symbolic ? Scalar::variable(f, "w") : parse_scalar(f, w);
    const Lemma61Pair p = lemma61_pair(zs, ws);
    const Lemma61Check c = verify_lemma61(p);
    Doc d;
    d.title = symbolic ? "alpha, beta as rational functions of z, w" : "alpha, beta at z=" + z + ", w=" + w;
    d.header = {"check", "result"};
    d.rows = {{"det alpha = 1", yes_no(c.det_alpha_one)},
              {"det beta = 1", yes_no(c.det_beta_one)},
              {"[alpha, beta] = [[-1, -b], [0, -1]]", yes_no(c.commutator_form)},
              {"b", p.b.to_string()}};
    d.body = {{"symbolic", symbolic}, {"b", p.b.to_string()}, {"det_alpha_one", c.det_alpha_one},
              {"det_beta_one", c.det_beta_one}, {"commutator_form", c.commutator_form},
              {"alpha", matrix_json(p.alpha)}, {"beta", matrix_json(p.beta)}, {"commutator", matrix_json(p.commutator)}};
    emit(g, "lemma61-verify", render(d, parse_report_format(g.format)));
    return c.ok() ? kOk : kAnomaly;
}

int cmd_case2(const Global& g, long long kmax, long long lmax, bool identity) {
    if (kmax < 1 || lmax < 2) throw UsageError("need --kmax >= 1 and --lmax >= 2");
    const Case2Sweep s = case2_sweep(kmax, lmax);
    Doc d;
    d.title = "case 2 sweep, |k| <= " + std::to_string(kmax) + ", |l| <= " + std::to_string(lmax);
    d.header = {"k", "l", "lambda", "M", "t21", "trace", "ok"};
    json rows = json::array();
    for (const auto& r : s.rows) {
        d.rows.push_back({std::to_string(r.k), std::to_string(r.l), r.lambda, r.generic ? "generic" : "traceless",
                          r.t21, r.trace, yes_no(r.ok)});
        rows.push_back({{"k", r.k}, {"l", r.l}, {"lambda", r.lambda}, {"generic", r.generic}, {"t21", r.t21},
                        {"trace", r.trace}, {"ok", r.ok}});
    }
    d.body = {{"kmax", kmax}, {"lmax", lmax}, {"rows", std::move(rows)}, {"failures", s.failures}};
    bool identity_ok = true;
    if (identity) {
        const CommutatorIdentityResult r = case2_commutator(case2_symbolic_unknowns());
        identity_ok = r.a21_matches() && r.identity_holds() && r.diagonal_blocks_ok();
        d.body["symbolic_identity"] = {{"a21_matches", r.a21_matches()},
                                       {"trace_sum_equals_b_a21", r.identity_holds()},
                                       {"diagonal_blocks", r.diagonal_blocks_ok()}};
        d.title += identity_ok ? "; symbolic trace identity holds" : "; symbolic trace identity FAILS";
    }
    emit(g, "case2-sweep", render(d, parse_report_format(g.format)));
    if (s.failures) std::cerr << s.failures << " sweep row(s) disagree with the closed forms\n";
    return s.failures || !identity_ok ? kAnomaly : kOk;
}

int cmd_case1(const Global& g, const std::string& file) {
    const ExactMatrix t = read_matrix(read_file(file));
    if (t.rows() != 4 || t.cols() != 4) throw UsageError("case 1 pattern needs a 4x4 matrix");
    const SupportPattern pat = forced_zero_pattern(t);
    const SupportPattern expected = case1_expected_pattern();
    Doc d;
    d.title = "centralizer support of " + file;
    d.header = {"row", "pattern", "expected"};
    std::istringstream a(pat.to_string()), b(expected.to_string());
    std::string la, lb;
    for (std::size_t r = 1; std::getline(a, la) && std::getline(b, lb); ++r) d.rows.push_back({std::to_string(r), la, lb});
    json zeros = json::array();
    for (const auto& [r, c] : pat.forced_zeros()) zeros.push_back({r, c});
    d.body = {{"pattern", pat.to_string()}, {"forced_zeros", std::move(zeros)},
              {"matches_expected", pat == expected}, {"within_expected", pat.within(expected)}};
    emit(g, "case1-pattern", render(d, parse_report_format(g.format)));
    return kOk;
}

// cyclotomic(lcm of d) for every ζd / zetad in the texts, rational otherwise.
Field infer_field(const std::vector<std::string>& texts) {
    static const std::regex root(R"((?:ζ|zeta)(\d+))");
    unsigned m = 0;
    for (const auto& t : texts)
        for (std::sregex_iterator it(t.begin(), t.end(), root), end; it != end; ++it) {
            const unsigned d = static_cast<unsigned>(std::stoul((*it)[1]));
            m = m ? std::lcm(m, d) : d;
        }
    return m ? field_make(FieldDescriptor::cyclotomic(m)) : Field{};
}

int cmd_case3(const Global& g, const std::string& lambda, const std::string& mu, long long l, const std::string& field_text) {
    const Field f = field_text.empty() ? infer_field({lambda, mu}) : field_from(field_text);
    const Scalar ls = parse_scalar(f, lambda), ms = parse_scalar(f, mu);
    const Case3Outcome o = case3_eigenvalue_split(ls, ms, l);
    Doc d;
    d.title = "case 3 split over " + f.descriptor().to_string();
    d.header = {"lambda", "mu", "l", "-lambda^l", "mu^l", "outcome"};
    const std::string a = (-ls.pow(l)).to_string(), b = ms.pow(l).to_string();
    d.rows = {{ls.to_string(), ms.to_string(), std::to_string(l), a, b, to_string(o)}};
    d.body = {{"field", f.descriptor().to_string()}, {"lambda", ls.to_string()}, {"mu", ms.to_string()}, {"l", l},
              {"minus_lambda_l", a}, {"mu_l", b}, {"outcome", to_string(o)}};
    emit(g, "case3-split", render(d, parse_report_format(g.format)));
    return kOk;
}

int cmd_check_rep(const Global& g, const std::string& file, const std::vector<std::string>& words) {
    const RepresentationFile rf = read_representation(read_file(file));
    const RelationReport rel = check_representation(rf.rho, rf.gluing);
    Doc d;
    d.title = "representation " + file + " (dim " + std::to_string(rf.rho.dim) + ", glue " + rf.gluing.to_string() + ")";
    d.header = {"item", "result"};
    for (const auto& name : rel.checked) {
        const bool bad = std::find(rel.violations.begin(), rel.violations.end(), name) != rel.violations.end();
        d.rows.push_back({name, bad ? "violated" : "holds"});
    }
    d.body = {{"field", rf.rho.field.descriptor().to_string()}, {"dim", rf.rho.dim},
              {"gluing", rf.gluing.values()}, {"relations_ok", rel.ok()}, {"violations", rel.violations}};
    int status = kOk;
    if (rel.ok()) {
        const Certificate c = unfaithfulness_certificate(rf.rho, rf.gluing);
        d.rows.push_back({"certificate", c.text});
        d.body["certificate"] = {{"found", c.found}, {"text", c.text}};
        if (c.found) d.body["certificate"]["element"] = std::string(1, c.element), d.body["certificate"]["exponent"] = c.exponent;
        // Every representation over a finite field has torsion images.
        if (!c.found && rf.rho.field.characteristic()) status = kAnomaly;
    } else {
        std::cerr << "representation violates " << rel.violations.size() << " relation(s)\n";
        status = kUsage;
    }
    json evaluated = json::array();
    for (const auto& text : words) {
        const GroupWord w = GroupWord::parse(text);
        const ExactMatrix img = evaluate_word(rf.rho, w);
        d.rows.push_back({"word " + normal_form(w).to_string(), is_identity(img) ? "identity" : "nontrivial"});
        evaluated.push_back({{"word", text}, {"normal_form", normal_form(w).to_string()}, {"image", matrix_json(img)}});
    }
    if (!words.empty()) d.body["words"] = std::move(evaluated);
    emit(g, "amalgam-check-rep", render(d, parse_report_format(g.format)));
    return status;
}

int cmd_torsion_rep(const Global& g, std::size_t dim, const std::string& ps_text, const std::string& pt_text,
                    const std::string& glue, std::size_t column) {
    check_dim(dim);
    const BlockPattern ps = BlockPattern::parse(ps_text, dim), pt = BlockPattern::parse(pt_text, dim);
    const GluingData gl = parse_gluing(glue);
    const TorsionSolution sol = adjugate_solution(build_block_system(ps, pt), gl, column);
    if (!sol.modulus.fits_uint_p()) throw UsageError("determinant too large for a cyclotomic field");
    const Representation rho = torsion_representation(ps, pt, gl, sol.x, static_cast<unsigned>(sol.modulus.get_ui()));
    emit(g, "amalgam-torsion-rep", write_representation(rho, gl));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linobs: exact checks for linear representations of graph-manifold groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file; subcommand keys as obstruct.sweep.dim=5 or [obstruct.sweep]");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Global g;
    app.add_option("--format", g.format, "structured | csv | table")
        ->check(CLI::IsMember({"structured", "json", "csv", "table"}));
    app.add_option("--out", g.out, "output file (default: stdout, or $LINOBS_OUT_DIR/<command>.<ext>)");

    std::size_t dim = 3;
    bool symbolic = false;
    unsigned threads = 0;
    std::string ps, pt, type, field = "rational", file, z, w, lambda, mu, glue_one;
    long long kmax = 9, lmax = 8, l = 1;
    bool identity = false;
    std::uint64_t bound = 1000;
    std::size_t column = 0;
    std::vector<std::string> words;
    GlueArgs ga;
    std::function<int()> run;

    auto* obstruct = app.add_subcommand("obstruct", "exponent systems for pairs of block patterns")->require_subcommand(1);
    auto* enumerate = obstruct->add_subcommand("enumerate", "list canonical pattern pairs");
    enumerate->add_option("--dim", dim)->required();
    enumerate->add_flag("--symbolic", symbolic, "attach symbolic determinants");
    enumerate->callback([&] { run = [&] { return cmd_enumerate(g, dim, symbolic); }; });

    auto* verdict = obstruct->add_subcommand("verdict", "torsion-only verdict for one pair");
    verdict->add_option("--dim", dim)->required();
    verdict->add_option("--ps", ps, "S blocks, e.g. 1,2|3")->required();
    verdict->add_option("--pt", pt, "T blocks")->required();
    verdict->add_flag("--symbolic", symbolic);
    ga.add(verdict);
    verdict->callback([&] { run = [&] { return cmd_verdict(g, dim, ps, pt, ga, symbolic); }; });

    auto* sweep = obstruct->add_subcommand("sweep", "all canonical pairs against a gluing set");
    sweep->add_option("--dim", dim)->required();
    sweep->add_option("--threads", threads, "0 = hardware concurrency");
    sweep->add_flag("--symbolic", symbolic);
    ga.add(sweep);
    sweep->callback([&] { run = [&] { return cmd_sweep(g, dim, ga, threads, symbolic); }; });

    auto* jordan = app.add_subcommand("jordan", "Jordan types and centralizers")->require_subcommand(1);
    auto* classify = jordan->add_subcommand("classify", "Small / Big centralizer");
    classify->add_option("--type", type, "eig=1:2,2")->required();
    classify->add_option("--field", field, "rational, fp:7, cyclotomic:12");
    classify->callback([&] { run = [&] { return cmd_jordan_classify(g, type, field); }; });
    auto* centralizer = jordan->add_subcommand("centralizer", "centralizer basis of a matrix file");
    centralizer->add_option("--file", file)->required();
    centralizer->callback([&] { run = [&] { return cmd_jordan_centralizer(g, file); }; });

    auto* charp = app.add_subcommand("charp", "matrices over finite fields")->require_subcommand(1);
    auto* order = charp->add_subcommand("order", "multiplicative order of a matrix file");
    order->add_option("--file", file)->required();
    order->add_option("--bound", bound, "search bound in characteristic 0");
    order->callback([&] { run = [&] { return cmd_charp_order(g, file, bound); }; });

    auto* lemma61 = app.add_subcommand("lemma61", "the alpha, beta commutator pair")->require_subcommand(1);
    auto* verify = lemma61->add_subcommand("verify", "determinants and commutator");
    verify->add_option("--z", z);
    verify->add_option("--w", w);
    verify->add_flag("--symbolic", symbolic);
    verify->callback([&] { run = [&] { return cmd_lemma61(g, z, w, symbolic); }; });

    auto* case2 = app.add_subcommand("case2", "block powers of A^k S^l")->require_subcommand(1);
    auto* case2_sweep_cmd = case2->add_subcommand("sweep", "closed forms against direct powering");
    case2_sweep_cmd->add_option("--kmax", kmax);
    case2_sweep_cmd->add_option("--lmax", lmax);
    case2_sweep_cmd->add_flag("--identity", identity, "also check the symbolic trace identity");
    case2_sweep_cmd->callback([&] { run = [&] { return cmd_case2(g, kmax, lmax, identity); }; });

    auto* case1 = app.add_subcommand("case1", "forced zeros of a centralizer")->require_subcommand(1);
    auto* pattern = case1->add_subcommand("pattern", "support of the centralizer of a 4x4 matrix file");
    pattern->add_option("--file", file)->required();
    pattern->callback([&] { run = [&] { return cmd_case1(g, file); }; });

    auto* case3 = app.add_subcommand("case3", "eigenvalue split")->require_subcommand(1);
    auto* split = case3->add_subcommand("split", "Small or Swap");
    split->add_option("--lambda", lambda)->required();
    split->add_option("--mu", mu)->required();
    split->add_option("--l", l)->required();
    split->add_option("--field", field, "default: cyclotomic field of the roots named");
    split->callback([&] {
        const bool field_given = split->count("--field") > 0;
        run = [&, field_given] { return cmd_case3(g, lambda, mu, l, field_given ? field : ""); };
    });

    auto* amalgam = app.add_subcommand("amalgam", "representations of the amalgam")->require_subcommand(1);
    auto* check = amalgam->add_subcommand("check-rep", "relations and unfaithfulness certificate");
    check->add_option("--file", file)->required();
    check->add_option("--word", words, "word to evaluate (repeatable)");
    check->callback([&] { run = [&] { return cmd_check_rep(g, file, words); }; });
    auto* torsion = amalgam->add_subcommand("torsion-rep", "representation file from a block-system solution");
    torsion->add_option("--dim", dim)->required();
    torsion->add_option("--ps", ps)->required();
    torsion->add_option("--pt", pt)->required();
    torsion->add_option("--glue", glue_one)->required();
    torsion->add_option("--column", column, "adjugate column (0-based)");
    torsion->callback([&] { run = [&] { return cmd_torsion_rep(g, dim, ps, pt, glue_one, column); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
