#include "tanpoly/format.hpp"

#include <sstream>
#include <stdexcept>

namespace tanpoly {

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "table")
        return OutputFormat::table;
    if (name == "bfile")
        return OutputFormat::bfile;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    return std::nullopt;
}

nlohmann::json to_json(const YPoly& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({e, c.str()});
    return out;
}

nlohmann::json to_json(const YZPoly& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({m.y, m.z, c.str()});
    return out;
}

YPoly ypoly_from_json(const nlohmann::json& j)
{
    YPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("expected [exponent, \"coefficient\"]");
        p.add_term(term[0].get<unsigned>(), Int(term[1].get<std::string>()));
    }
    return p;
}

std::string render_poly_table(const YPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int magnitude = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (e == 0 || magnitude != 1)
            os << magnitude;
        if (e >= 1)
            os << 'y';
        if (e >= 2)
            os << '^' << e;
    }
    return os.str();
}

std::string render_triangle(Family family, const std::vector<TriangleRow>& rows, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::table:
    case OutputFormat::csv: {
        const char sep = format == OutputFormat::table ? ' ' : ',';
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < row.entries.size(); ++k)
                os << (k ? std::string(1, sep) : "") << row.entries[k];
            os << '\n';
        }
        break;
    }
    case OutputFormat::bfile: {
        std::size_t index = 1;
        for (const auto& row : rows)
            for (const auto& v : row.entries)
                os << index++ << ' ' << v << '\n';
        break;
    }
    case OutputFormat::json: {
        nlohmann::json j;
        j["name"] = family_name(family);
        j["first_row"] = first_row(family);
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& v : row.entries)
                entries.push_back(v.str());
            j["rows"].push_back(std::move(entries));
        }
        os << j.dump() << '\n';
        break;
    }
    }
    return os.str();
}

std::optional<std::string> render_poly(const YPoly& p, OutputFormat format)
{
    switch (format) {
    case OutputFormat::table:
        return render_poly_table(p) + "\n";
    case OutputFormat::csv: {
        std::ostringstream os;
        for (const auto& [e, c] : p.terms())
            os << e << ',' << c << '\n';
        return os.str();
    }
    case OutputFormat::json:
        return to_json(p).dump() + "\n";
    case OutputFormat::bfile:
        break;
    }
    return std::nullopt;
}

std::vector<Int> parse_bfile(std::string_view text)
{
    std::vector<Int> values;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        const auto space = line.find(' ');
        if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
            throw std::invalid_argument("malformed b-file line: " + line);
        const std::string index = line.substr(0, space);
        const std::string value = line.substr(space + 1);
        if (index != std::to_string(values.size() + 1))
            throw std::invalid_argument("unexpected b-file index: " + index);
        try {
            values.emplace_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed b-file value: " + value);
        }
    }
    return values;
}

std::vector<std::vector<Int>> chunk_rows(const std::vector<Int>& values, const std::vector<std::size_t>& lengths)
{
    std::vector<std::vector<Int>> rows;
    std::size_t pos = 0;
    for (std::size_t len : lengths) {
        if (pos + len > values.size())
            throw std::invalid_argument("row lengths exceed the sequence");
        rows.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(pos),
                          values.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
    if (pos != values.size())
        throw std::invalid_argument("row lengths do not cover the sequence");
    return rows;
}

}  // namespace tanpoly
