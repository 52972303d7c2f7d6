#pragma once

#include "tricochain/algebra.hpp"
#include "tricochain/cochain.hpp"
#include "tricochain/cohomology.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricochain {

/// Malformed algebra file. `location` is "line L, column C" for syntax errors
/// and a field path such as "prec[2][3]" for content errors.
class AlgebraParseError : public std::runtime_error {
public:
    AlgebraParseError(std::string location, const std::string& what)
        : std::runtime_error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
    [[nodiscard]] const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// Algebra file format:
///   {"name": "...", "dim": d,
///    "prec": [[i, j, k, "p/q"], ...], "succ": [...], "dot": [...]}
/// Indices are zero-based; unlisted entries are zero; an (i, j, k) may be
/// listed at most once per table.
TriDendAlgebra parse_algebra(std::string_view text);
TriDendAlgebra load_algebra(const std::filesystem::path& path);

/// Canonical form: nonzero entries only, sorted by (i, j, k), rationals in
/// lowest terms.
nlohmann::ordered_json algebra_to_json(const TriDendAlgebra& alg);
std::string serialize_algebra(const TriDendAlgebra& alg);

/// Cochains as an array of [subset, tuple, values] triples, one per
/// (subset, tuple) whose value is nonzero. Subsets are 1-based, tuples are
/// zero-based basis indices, values are "p/q" strings of length dim.
nlohmann::ordered_json cochain_to_json(const TriCochain& g);
/// Throws std::invalid_argument on malformed input.
TriCochain cochain_from_json(const nlohmann::json& cells, unsigned degree, std::size_t dim);

nlohmann::ordered_json rational_vector_to_json(const QVector& v);
nlohmann::ordered_json axiom_report_to_json(const AxiomReport& report);
nlohmann::ordered_json cohomology_report_to_json(const CohomologyReport& report);

}  // namespace tricochain
