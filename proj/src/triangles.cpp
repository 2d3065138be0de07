#include "tanpoly/triangles.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "tanpoly/symbolic.hpp"

namespace tanpoly {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::R, "R"},
    {Family::T, "T"},
    {Family::M, "M"},
    {Family::N, "N"},
    {Family::Rtilde, "Rtilde"},
    {Family::Ttilde, "Ttilde"},
}};

std::string str(long v)
{
    return std::to_string(v);
}

}  // namespace

std::string_view family_name(Family family)
{
    for (const auto& [f, name] : kFamilyNames)
        if (f == family)
            return name;
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto& [f, n] : kFamilyNames)
        if (n == name)
            return f;
    return std::nullopt;
}

Int binom(unsigned n, long k)
{
    if (k < 0 || k > static_cast<long>(n))
        return 0;
    const unsigned kk = static_cast<unsigned>(std::min<long>(k, n - k));
    Int result = 1;
    // result stays equal to C(n - kk + i, i) after step i, so each division is exact
    for (unsigned i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

Int R_coef(unsigned n, long k)
{
    return k < 0 ? Int(0) : binom(n, 2 * k + 1);
}

Int T_coef(unsigned n, long k)
{
    return k < 0 ? Int(0) : binom(n, 2 * k);
}

long max_index(Family family, unsigned n)
{
    const long ln = static_cast<long>(n);
    switch (family) {
    case Family::R:
        return n == 0 ? -1 : (ln - 1) / 2;
    case Family::T:
    case Family::M:
        return ln / 2;
    case Family::N:
        return (ln + 1) / 2;
    case Family::Rtilde:
    case Family::Ttilde:
        return ln;
    }
    return -1;
}

std::size_t row_length(Family family, unsigned n)
{
    switch (family) {
    case Family::Rtilde:
    case Family::Ttilde:
        return n;
    default:
        return static_cast<std::size_t>(max_index(family, n) + 1);
    }
}

unsigned first_row(Family family)
{
    return family == Family::Rtilde || family == Family::Ttilde ? 1 : 0;
}

namespace {

// Rows 0..max_n of a triangle obeying
// X(n+1,k) = (n + 2k + a) X(n,k) + (n - 2k + b) X(n,k-1), X(0,0) = 1.
std::vector<TriangleRow> recurrence_rows(Family family, unsigned max_n, long a, long b)
{
    std::vector<TriangleRow> rows;
    rows.reserve(max_n + 1);
    rows.push_back({0, {Int(1)}});
    for (unsigned n = 0; n < max_n; ++n) {
        const TriangleRow& prev = rows.back();
        auto at = [&](long k) -> Int {
            return k < 0 || k >= static_cast<long>(prev.entries.size()) ? Int(0) : prev.entries[k];
        };
        TriangleRow next{n + 1, {}};
        const long ln = static_cast<long>(n);
        for (long k = 0; k <= max_index(family, n + 1); ++k)
            next.entries.push_back((ln + 2 * k + a) * at(k) + (ln - 2 * k + b) * at(k - 1));
        rows.push_back(std::move(next));
    }
    return rows;
}

Int entry(const std::vector<TriangleRow>& rows, unsigned n, long k)
{
    const auto& entries = rows[n].entries;
    return k < 0 || k >= static_cast<long>(entries.size()) ? Int(0) : entries[k];
}

}  // namespace

std::vector<TriangleRow> M_rows(unsigned max_n)
{
    return recurrence_rows(Family::M, max_n, 2, 2);
}

std::vector<TriangleRow> N_rows(unsigned max_n)
{
    return recurrence_rows(Family::N, max_n, 1, 3);
}

Int M_rec(unsigned n, long k)
{
    if (k < 0 || k > max_index(Family::M, n))
        return 0;
    return entry(M_rows(n), n, k);
}

Int N_rec(unsigned n, long k)
{
    if (k < 0 || k > max_index(Family::N, n))
        return 0;
    return entry(N_rows(n), n, k);
}

Int M_closed(unsigned n, long k)
{
    return factorial(n) * R_coef(n + 1, k);
}

Int N_closed(unsigned n, long k)
{
    return factorial(n) * T_coef(n + 1, k);
}

namespace {

// Reads coefficients of y^(2k + offset), k = 0..n-1, and insists that no other
// exponent is present.
TriangleRow read_row(unsigned n, const YPoly& poly, unsigned offset)
{
    TriangleRow row{n, {}};
    row.entries.reserve(n);
    for (unsigned k = 0; k < n; ++k)
        row.entries.push_back(poly.coefficient(2 * k + offset));
    for (const auto& [e, c] : poly.terms())
        if (e < offset || (e - offset) % 2 != 0 || (e - offset) / 2 >= n)
            throw internal_inconsistency("tilde row " + std::to_string(n) + ": unexpected term y^" +
                                         std::to_string(e));
    return row;
}

void require_tilde_index(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("tilde triangles start at row 1");
}

}  // namespace

TriangleRow tilde_R_row(unsigned n)
{
    require_tilde_index(n);
    return read_row(n, n % 2 == 0 ? T_poly_dz(n) : R_poly_dz(n), 0);
}

TriangleRow tilde_T_row(unsigned n)
{
    require_tilde_index(n);
    return read_row(n, n % 2 == 0 ? R_poly_dz(n) : T_poly_dz(n), 1);
}

TriangleRow triangle_row(Family family, unsigned n)
{
    switch (family) {
    case Family::Rtilde:
        return tilde_R_row(n);
    case Family::Ttilde:
        return tilde_T_row(n);
    case Family::M:
        return M_rows(n)[n];
    case Family::N:
        return N_rows(n)[n];
    case Family::R:
    case Family::T: {
        TriangleRow row{n, {}};
        for (long k = 0; k <= max_index(family, n); ++k)
            row.entries.push_back(family == Family::R ? R_coef(n, k) : T_coef(n, k));
        return row;
    }
    }
    throw std::invalid_argument("unknown triangle family");
}

std::vector<TriangleRow> triangle_rows(Family family, unsigned count)
{
    if (count == 0)
        return {};
    const unsigned first = first_row(family);
    if (family == Family::M || family == Family::N) {
        auto rows = family == Family::M ? M_rows(count - 1) : N_rows(count - 1);
        return rows;
    }
    std::vector<TriangleRow> rows;
    rows.reserve(count);
    for (unsigned i = 0; i < count; ++i)
        rows.push_back(triangle_row(family, first + i));
    return rows;
}

VerifyReport verify_RT_recurrences(unsigned max_n)
{
    VerifyReport report{"rt-recurrences"};
    for (unsigned n = 1; n <= max_n; ++n) {
        const long ln = static_cast<long>(n);
        for (long k = 0; k <= ln / 2 + 1; ++k) {
            Int lhs = ln * R_coef(n + 1, k);
            Int rhs = (ln + 2 * k + 1) * R_coef(n, k) + (ln - 2 * k + 1) * R_coef(n, k - 1);
            report.expect(lhs == rhs, {"R recurrence", {{"n", str(ln)}, {"k", str(k)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}}});

            lhs = ln * T_coef(n + 1, k);
            rhs = (ln + 2 * k) * T_coef(n, k) + (ln - 2 * k + 2) * T_coef(n, k - 1);
            report.expect(lhs == rhs, {"T recurrence", {{"n", str(ln)}, {"k", str(k)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}}});
        }
    }
    return report;
}

VerifyReport verify_corollary(unsigned max_n)
{
    VerifyReport report{"corollary"};
    const auto m = M_rows(max_n);
    const auto n_rows = N_rows(max_n);
    std::size_t wide_entries = 0;
    for (unsigned n = 0; n <= max_n; ++n) {
        for (long k = 0; k <= max_index(Family::M, n); ++k) {
            const Int closed = M_closed(n, k);
            report.expect(m[n].entries[k] == closed,
                          {"M(n,k) = n! R(n+1,k)", {{"n", str(n)}, {"k", str(k)}, {"recurrence", m[n].entries[k].str()}, {"closed", closed.str()}}});
        }
        for (long k = 0; k <= max_index(Family::N, n); ++k) {
            const Int closed = N_closed(n, k);
            report.expect(n_rows[n].entries[k] == closed,
                          {"N(n,k) = n! T(n+1,k)", {{"n", str(n)}, {"k", str(k)}, {"recurrence", n_rows[n].entries[k].str()}, {"closed", closed.str()}}});
            if (k > static_cast<long>(n) / 2)
                ++wide_entries;
        }
    }
    report.notes.push_back("N was checked for 0 <= k <= floor((n+1)/2), the range of its defining expansion; " +
                           std::to_string(wide_entries) +
                           " of those entries (odd n, k = (n+1)/2) lie beyond the stated range 0 <= k <= floor(n/2)");
    return report;
}

}  // namespace tanpoly
