#ifndef TANPOLY_FORMAT_HPP
#define TANPOLY_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tanpoly/symbolic.hpp"
#include "tanpoly/triangles.hpp"

namespace tanpoly {

enum class OutputFormat { table, bfile, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

// Exact serialization: [[exponent, "coefficient"], ...] ascending in exponent,
// and [[y_exp, z_exp, "coefficient"], ...] ascending in y then z.
nlohmann::json to_json(const YPoly& p);
nlohmann::json to_json(const YZPoly& p);
YPoly ypoly_from_json(const nlohmann::json& j);

/// Ascending powers with caret exponents: "3y + 7y^3 + 4y^5". Zero renders as "0".
std::string render_poly_table(const YPoly& p);

/// table: one row per line, entries separated by one space.
/// bfile: "index value" per line, index from 1, rows read left to right.
/// csv:   one row per line, entries separated by commas.
/// json:  {"name", "first_row", "rows": [["1"], ...]} with decimal strings.
/// Every line, including the last, ends in '\n'.
std::string render_triangle(Family family, const std::vector<TriangleRow>& rows, OutputFormat format);

/// table, csv ("exponent,coefficient" lines) or json. bfile has no
/// polynomial layout and yields nullopt.
std::optional<std::string> render_poly(const YPoly& p, OutputFormat format);

/// Values of a b-file in index order. Throws std::invalid_argument on
/// malformed lines or indices that are not 1, 2, 3, ...
std::vector<Int> parse_bfile(std::string_view text);

/// Splits a flat sequence into consecutive rows of the given lengths.
/// Throws std::invalid_argument if the lengths do not cover the sequence exactly.
std::vector<std::vector<Int>> chunk_rows(const std::vector<Int>& values, const std::vector<std::size_t>& lengths);

}  // namespace tanpoly

#endif
