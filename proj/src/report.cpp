#include "linobs/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace linobs {

namespace {

using ojson = nlohmann::ordered_json;

const char* const kCsvHeader = "dim,ps,pt,relation,i,j,k,l,torsion_only,determinant";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t p = 0; p < line.size(); ++p) {
        const char c = line[p];
        if (quoted) {
            if (c == '"' && p + 1 < line.size() && line[p + 1] == '"') {
                cur += '"';
                ++p;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    fields.push_back(std::move(cur));
    return fields;
}

ojson to_json(const CaseReport& r) {
    ojson pairs = ojson::array();
    for (const auto& p : r.pairs) {
        ojson pj;
        pj["ps"] = p.ps;
        pj["pt"] = p.pt;
        pj["relation"] = p.relation;
        pj["flags"] = p.flags;
        pj["d"] = p.d;
        pj["dprime"] = p.dprime;
        if (p.symbolic_determinant) pj["symbolic_determinant"] = *p.symbolic_determinant;
        ojson verdicts = ojson::array();
        for (const auto& v : p.verdicts) {
            ojson vj;
            vj["glue"] = v.glue;
            vj["torsion_only"] = v.torsion_only;
            if (!v.determinant.empty()) vj["determinant"] = v.determinant;
            if (!v.kernel.empty()) vj["kernel"] = v.kernel;
            verdicts.push_back(std::move(vj));
        }
        pj["verdicts"] = std::move(verdicts);
        pairs.push_back(std::move(pj));
    }
    ojson j;
    j["dim"] = r.dim;
    j["config"] = r.config;
    j["config_hash"] = r.config_hash;
    j["pairs"] = std::move(pairs);
    j["aggregate"] = {{"pairs", r.aggregate.pairs},
                      {"instances", r.aggregate.instances},
                      {"torsion_only", r.aggregate.torsion_only},
                      {"not_torsion_only", r.aggregate.not_torsion_only}};
    return j;
}

std::string table(const CaseReport& r) {
    std::ostringstream out;
    out << "dimension " << r.dim << "  config " << r.config << "  [" << r.config_hash << "]\n";
    out << std::left << std::setw(20) << "S blocks" << std::setw(20) << "T blocks" << std::setw(14) << "relation"
        << std::right << std::setw(10) << "gluings" << std::setw(14) << "torsion-only" << '\n';
    for (const auto& p : r.pairs) {
        std::size_t ok = 0;
        for (const auto& v : p.verdicts) ok += v.torsion_only ? 1 : 0;
        out << std::left << std::setw(20) << p.ps << std::setw(20) << p.pt << std::setw(14) << p.relation
            << std::right << std::setw(10) << p.verdicts.size() << std::setw(14) << ok << '\n';
    }
    out << "pairs " << r.aggregate.pairs << ", instances " << r.aggregate.instances << ", torsion-only "
        << r.aggregate.torsion_only << ", not torsion-only " << r.aggregate.not_torsion_only << '\n';
    return out.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "structured" || name == "json") return ReportFormat::structured;
    if (name == "csv") return ReportFormat::csv;
    if (name == "table") return ReportFormat::table;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

Aggregate recount(const CaseReport& r) {
    Aggregate a;
    a.pairs = r.pairs.size();
    for (const auto& p : r.pairs) {
        for (const auto& v : p.verdicts) {
            ++a.instances;
            ++(v.torsion_only ? a.torsion_only : a.not_torsion_only);
        }
    }
    return a;
}

std::string config_hash(std::string_view config) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : config) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string serialize_report(const CaseReport& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::structured: return to_json(r).dump(2) + '\n';
        case ReportFormat::table: return table(r);
        case ReportFormat::csv: {
            std::string out = std::string(kCsvHeader) + '\n';
            for (const auto& row : csv_rows(r)) {
                out += std::to_string(row.dim) + ',' + csv_field(row.ps) + ',' + csv_field(row.pt) + ',' +
                       csv_field(row.relation);
                for (auto g : row.glue) out += ',' + std::to_string(g);
                out += std::string(",") + (row.torsion_only ? "true" : "false") + ',' + row.determinant + '\n';
            }
            return out;
        }
    }
    return {};
}

CaseReport parse_structured_report(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
        CaseReport r;
        r.dim = j.at("dim").get<std::size_t>();
        r.config = j.at("config").get<std::string>();
        r.config_hash = j.at("config_hash").get<std::string>();
        for (const auto& pj : j.at("pairs")) {
            PairReport p;
            p.ps = pj.at("ps").get<std::string>();
            p.pt = pj.at("pt").get<std::string>();
            p.relation = pj.at("relation").get<std::string>();
            p.flags = pj.at("flags").get<std::vector<std::string>>();
            p.d = pj.at("d").get<std::size_t>();
            p.dprime = pj.at("dprime").get<std::size_t>();
            if (pj.contains("symbolic_determinant")) p.symbolic_determinant = pj["symbolic_determinant"].get<std::string>();
            for (const auto& vj : pj.at("verdicts")) {
                GlueVerdict v;
                v.glue = vj.at("glue").get<std::array<long long, 4>>();
                v.torsion_only = vj.at("torsion_only").get<bool>();
                if (vj.contains("determinant")) v.determinant = vj["determinant"].get<std::string>();
                if (vj.contains("kernel")) v.kernel = vj["kernel"].get<std::vector<std::vector<std::string>>>();
                p.verdicts.push_back(std::move(v));
            }
            r.pairs.push_back(std::move(p));
        }
        const auto& a = j.at("aggregate");
        r.aggregate = {a.at("pairs").get<std::size_t>(), a.at("instances").get<std::size_t>(),
                       a.at("torsion_only").get<std::size_t>(), a.at("not_torsion_only").get<std::size_t>()};
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::vector<CsvRow> csv_rows(const CaseReport& r) {
    std::vector<CsvRow> rows;
    for (const auto& p : r.pairs)
        for (const auto& v : p.verdicts) rows.push_back({r.dim, p.ps, p.pt, p.relation, v.glue, v.torsion_only, v.determinant});
    return rows;
}

std::vector<CsvRow> parse_csv_report(std::string_view text) {
    std::vector<CsvRow> rows;
    bool header = true;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            if (line != kCsvHeader) throw std::invalid_argument("unexpected CSV header");
            header = false;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 10) throw std::invalid_argument("CSV row needs 10 fields");
        CsvRow row;
        try {
            row.dim = std::stoul(f[0]);
            row.ps = f[1];
            row.pt = f[2];
            row.relation = f[3];
            for (std::size_t g = 0; g < 4; ++g) row.glue[g] = std::stoll(f[4 + g]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in CSV row");
        }
        if (f[8] != "true" && f[8] != "false") throw std::invalid_argument("torsion_only must be true or false");
        row.torsion_only = f[8] == "true";
        row.determinant = f[9];
        rows.push_back(std::move(row));
    }
    if (header) throw std::invalid_argument("missing CSV header");
    return rows;
}

}  // namespace linobs
