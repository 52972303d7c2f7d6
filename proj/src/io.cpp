#include "tricochain/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace tricochain {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kTableNames[] = {"prec", "succ", "dot"};

std::size_t read_index(const json& v, const std::string& where, std::size_t dim) {
    if (!v.is_number_integer()) throw AlgebraParseError(where, "expected a non-negative integer index");
    const auto i = v.get<std::int64_t>();
    if (i < 0 || static_cast<std::size_t>(i) >= dim)
        throw AlgebraParseError(where, "index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
    return static_cast<std::size_t>(i);
}

Rational read_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw AlgebraParseError(where, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw AlgebraParseError(where, e.what());
    }
}

void read_table(const json& doc, const char* name, StructureTable& table) {
    if (!doc.contains(name)) return;
    const json& entries = doc.at(name);
    if (!entries.is_array()) throw AlgebraParseError(name, "expected an array of [i, j, k, \"p/q\"] entries");

    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string where = std::string(name) + "[" + std::to_string(e) + "]";
        const json& entry = entries[e];
        if (!entry.is_array() || entry.size() != 4)
            throw AlgebraParseError(where, "expected [i, j, k, \"p/q\"]");
        const std::size_t i = read_index(entry[0], where + "[0]", table.dim());
        const std::size_t j = read_index(entry[1], where + "[1]", table.dim());
        const std::size_t k = read_index(entry[2], where + "[2]", table.dim());
        if (!seen.emplace(i, j, k).second)
            throw AlgebraParseError(where, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) +
                                               ", " + std::to_string(k) + ")");
        table.at(i, j, k) = read_rational(entry[3], where + "[3]");
    }
}

ordered_json table_to_json(const StructureTable& t) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero()) entries.push_back({i, j, k, t.at(i, j, k).str()});
    return entries;
}

}  // namespace

TriDendAlgebra parse_algebra(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann's message already carries "at line L, column C".
        throw AlgebraParseError("", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw AlgebraParseError("", "top level must be an object");

    TriDendAlgebra alg;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw AlgebraParseError("name", "expected a string");
        alg.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("dim")) throw AlgebraParseError("dim", "missing");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 0)
        throw AlgebraParseError("dim", "expected a non-negative integer");
    alg.dim = doc["dim"].get<std::size_t>();

    alg.prec = StructureTable(alg.dim);
    alg.succ = StructureTable(alg.dim);
    alg.dot = StructureTable(alg.dim);
    read_table(doc, kTableNames[0], alg.prec);
    read_table(doc, kTableNames[1], alg.succ);
    read_table(doc, kTableNames[2], alg.dot);

    for (const auto& [key, value] : doc.items()) {
        if (key != "name" && key != "dim" && key != "prec" && key != "succ" && key != "dot")
            throw AlgebraParseError(key, "unknown field");
    }
    return alg;
}

TriDendAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AlgebraParseError("", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

ordered_json algebra_to_json(const TriDendAlgebra& alg) {
    ordered_json doc;
    doc["name"] = alg.name;
    doc["dim"] = alg.dim;
    doc["prec"] = table_to_json(alg.prec);
    doc["succ"] = table_to_json(alg.succ);
    doc["dot"] = table_to_json(alg.dot);
    return doc;
}

std::string serialize_algebra(const TriDendAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

ordered_json rational_vector_to_json(const QVector& v) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : v) out.push_back(x.str());
    return out;
}

ordered_json cochain_to_json(const TriCochain& g) {
    const CochainBasis& layout = g.layout();
    ordered_json cells = ordered_json::array();
    for (std::size_t s = 0; s < layout.subsets().size(); ++s) {
        for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
            const BElement v = g.value(s, t);
            if (v.is_zero()) continue;
            cells.push_back({layout.subsets()[s], layout.tuple_at(t), rational_vector_to_json(v.coeffs())});
        }
    }
    return cells;
}

TriCochain cochain_from_json(const json& cells, unsigned degree, std::size_t dim) {
    if (!cells.is_array()) throw std::invalid_argument("cochain: expected an array of cells");
    TriCochain g(degree, dim);
    const CochainBasis& layout = g.layout();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const json& cell : cells) {
        if (!cell.is_array() || cell.size() != 3) throw std::invalid_argument("cochain: cell must be [subset, tuple, values]");
        const auto subset = cell[0].get<IndexList>();
        const auto tuple = cell[1].get<std::vector<std::size_t>>();
        const std::size_t s = layout.subset_position(subset);
        const std::size_t t = layout.tuple_index(tuple);
        if (!seen.emplace(s, t).second) throw std::invalid_argument("cochain: duplicate cell");
        if (!cell[2].is_array() || cell[2].size() != dim) throw std::invalid_argument("cochain: value length must equal dim");
        BElement v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = Rational::parse(cell[2][k].get<std::string>());
        g.set_value(s, t, v);
    }
    return g;
}

ordered_json axiom_report_to_json(const AxiomReport& report) {
    ordered_json out;
    out["passed"] = report.passed();
    out["checks"] = report.checks;
    if (report.max_degree) out["max_degree"] = report.max_degree;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : report.violations) {
        ordered_json item;
        item["axiom"] = v.axiom;
        item["witness"] = v.witness;
        item["lhs"] = v.lhs;
        item["rhs"] = v.rhs;
        violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
    return out;
}

ordered_json cohomology_report_to_json(const CohomologyReport& report) {
    ordered_json out;
    out["algebra_dim"] = report.algebra_dim;
    out["max_degree"] = report.max_degree;
    out["route"] = report.route == DeltaRoute::Explicit ? "explicit" : "extraction";
    out["delta_squared_zero"] = report.delta_squared_zero;
    ordered_json degrees = ordered_json::array();
    for (const DegreeSummary& s : report.degrees) {
        ordered_json d;
        d["degree"] = s.degree;
        d["dim_cochains"] = s.dim_cochains;
        d["rank_delta"] = s.rank_delta;
        d["dim_cocycles"] = s.dim_cocycles;
        d["dim_coboundaries"] = s.dim_coboundaries;
        if (s.dim_cohomology) d["dim_cohomology"] = *s.dim_cohomology;
        else d["dim_cohomology"] = nullptr;
        d["dim_generator_slice"] = s.dim_generator_slice;
        d["dim_quotient_slice"] = s.dim_quotient_slice;
        if (s.cocycles) {
            ordered_json cocycles = ordered_json::array();
            for (const QVector& v : *s.cocycles) {
                ordered_json c;
                c["vector"] = rational_vector_to_json(v);
                c["cochain"] = cochain_to_json(TriCochain(s.degree, report.algebra_dim, v));
                cocycles.push_back(std::move(c));
            }
            d["cocycles"] = std::move(cocycles);
        }
        degrees.push_back(std::move(d));
    }
    out["degrees"] = std::move(degrees);
    return out;
}

}  // namespace tricochain
