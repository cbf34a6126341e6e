#include "linobs/fileio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linobs {

namespace {

using ojson = nlohmann::ordered_json;

ojson matrix_rows(const ExactMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix parse_rows(const Field& f, const ojson& rows, std::size_t n, const std::string& what) {
    if (!rows.is_array() || rows.size() != n) throw std::invalid_argument(what + " needs " + std::to_string(n) + " rows");
    ExactMatrix m = zero_matrix(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument(what + " row " + std::to_string(r + 1) + " needs " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            const auto& e = row[c];
            if (e.is_string()) m(r, c) = parse_scalar(f, e.get<std::string>());
            else if (e.is_number_integer()) m(r, c) = Scalar::from_int(f, e.get<long long>());
            else throw std::invalid_argument(what + " entries must be strings or integers");
        }
    }
    return m;
}

ojson parse_json(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto wrap(F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

}  // namespace

std::string write_matrix(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("matrix files hold square matrices");
    ojson j;
    j["field"] = m.zero().field().descriptor().to_string();
    j["n"] = m.rows();
    j["entries"] = matrix_rows(m);
    return j.dump(2) + '\n';
}

ExactMatrix read_matrix(std::string_view text) {
    const ojson j = parse_json(text);
    return wrap([&] {
        const Field f(FieldDescriptor::parse(j.at("field").get<std::string>()));
        const auto n = j.at("n").get<std::size_t>();
        if (n == 0) throw std::invalid_argument("matrix size must be positive");
        return parse_rows(f, j.at("entries"), n, "matrix");
    });
}

std::string write_representation(const Representation& rho, const GluingData& g) {
    ojson j;
    j["field"] = rho.field.descriptor().to_string();
    j["dim"] = rho.dim;
    j["gluing"] = g.values();
    for (char gen : std::string("XYSUVT")) j[std::string(1, gen)] = matrix_rows(rho[gen]);
    return j.dump(2) + '\n';
}

RepresentationFile read_representation(std::string_view text) {
    const ojson j = parse_json(text);
    return wrap([&] {
        RepresentationFile out;
        out.rho.field = Field(FieldDescriptor::parse(j.at("field").get<std::string>()));
        out.rho.dim = j.at("dim").get<std::size_t>();
        if (out.rho.dim == 0) throw std::invalid_argument("representation dimension must be positive");
        const auto g = j.at("gluing").get<std::vector<long long>>();
        if (g.size() != 4) throw std::invalid_argument("gluing needs four integers");
        out.gluing = validate_gluing(g[0], g[1], g[2], g[3]);
        for (char gen : std::string("XYSUVT"))
            out.rho.images.emplace(gen, parse_rows(out.rho.field, j.at(std::string(1, gen)), out.rho.dim,
                                                   std::string("image of ") + gen));
        validate_representation(out.rho);
        return out;
    });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace linobs
