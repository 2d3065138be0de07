// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tanpoly/cli.hpp"
#include "tanpoly/format.hpp"
#include "tanpoly/multiangle.hpp"
#include "tanpoly/symbolic.hpp"
#include "tanpoly/triangles.hpp"
#include "tanpoly/verify.hpp"

using namespace tanpoly;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<bool(std::string&)> check;  // fills a short detail string
};

YPoly dense(std::initializer_list<long> coefficients, unsigned first_exponent)
{
    YPoly p;
    unsigned e = first_exponent;
    for (long c : coefficients) {
        p.add_term(e, c);
        e += 2;
    }
    return p;
}

bool golden_tables(std::string& detail)
{
    std::size_t rows = 0;
    for (unsigned n = 1; n <= 5; ++n) {
        const auto& gr = golden_tilde_R()[n - 1];
        const auto& gt = golden_tilde_T()[n - 1];
        if (tilde_R_row(n).entries != std::vector<Int>(gr.begin(), gr.end()))
            return detail = "Rtilde row " + std::to_string(n) + " differs", false;
        if (tilde_T_row(n).entries != std::vector<Int>(gt.begin(), gt.end()))
            return detail = "Ttilde row " + std::to_string(n) + " differs", false;
        rows += 2;
    }
    detail = std::to_string(rows) + " rows";
    return true;
}

bool listed_polynomials(std::string& detail)
{
    const std::vector<YPoly> R{dense({1}, 0), dense({2, 2}, 1), dense({1, 5, 4}, 0), dense({4, 16, 20, 8}, 1)};
    const std::vector<YPoly> T{dense({1}, 1), dense({1, 2}, 0), dense({3, 7, 4}, 1), dense({1, 9, 16, 8}, 0)};
    for (unsigned n = 1; n <= 4; ++n) {
        if (R_poly_closed(n) != R[n - 1] || R_poly_dz(n) != R[n - 1])
            return detail = "R_" + std::to_string(n), false;
        if (T_poly_closed(n) != T[n - 1] || T_poly_dz(n) != T[n - 1])
            return detail = "T_" + std::to_string(n), false;
    }
    detail = "16 polynomial comparisons";
    return true;
}

bool corollary(std::string& detail)
{
    const auto report = verify_corollary(25);
    detail = std::to_string(report.checked) + " entries";
    return report.pass();
}

bool expansion(std::string& detail)
{
    const auto report = verify_dz_expansion(15);
    detail = std::to_string(report.checked) + " checks";
    return report.pass();
}

bool hoffman(std::string& detail)
{
    YZPoly dy = YZPoly::y(), dzz = YZPoly::z();
    for (unsigned n = 0; n <= 15; ++n) {
        if (reduce_z(dy) != ReducedPair{hoffman_P(n), {}} || reduce_z(dzz) != ReducedPair{{}, hoffman_Q(n)})
            return detail = "n = " + std::to_string(n), false;
        dy = diff(dy);
        dzz = diff(dzz);
    }
    detail = "n = 0..15";
    return true;
}

bool quotient(std::string& detail)
{
    const auto report = verify_quotient(200, 20130617);
    detail = std::to_string(report.checked) + " random inputs";
    return report.pass() && report.checked == 200;
}

bool triple_agreement(std::string& detail)
{
    std::size_t checked = 0, poles = 0;
    for (unsigned n = 0; n <= 20; ++n)
        for (const Rational& t : rational_grid()) {
            const TanValue b = tan_beeler(n, t);
            if (b != tan_addition_oracle(n, t) || b != tan_gaussian_oracle(n, t))
                return detail = "n = " + std::to_string(n) + ", t = " + t.str(), false;
            ++checked;
            poles += b.is_pole();
        }
    detail = std::to_string(checked) + " points, " + std::to_string(poles) + " poles";
    return checked == 21 * 13;
}

bool rt_recurrences(std::string& detail)
{
    const auto report = verify_RT_recurrences(25);
    detail = std::to_string(report.checked) + " checks";
    return report.pass();
}

bool float_sanity(std::string& detail)
{
    double worst = 0;
    for (unsigned n : {2u, 3u, 5u, 7u})
        for (const Rational& t : {Rational(1, 3), Rational(1, 7), Rational(2, 9)}) {
            const auto diff = tan_float_check(n, t);
            if (!diff || !(*diff < 1e-9))
                return detail = "n = " + std::to_string(n) + ", t = " + t.str(), false;
            worst = std::max(worst, *diff);
        }
    std::ostringstream os;
    os << "max |diff| = " << worst;
    detail = os.str();
    return true;
}

bool cli_contract(std::string& detail)
{
    std::ostringstream out, err;
    const int code = run_cli({"tanpoly", "verify", "--suite", "all", "--max-n", "12"}, out, err);
    if (code != 0)
        return detail = "verify all exited " + std::to_string(code), false;

    for (Family f : {Family::R, Family::T, Family::M, Family::N, Family::Rtilde, Family::Ttilde}) {
        std::ostringstream bout, berr;
        const std::string name(family_name(f));
        if (run_cli({"tanpoly", "triangle", "--name", name, "--rows", "10", "--format", "bfile"}, bout, berr) != 0)
            return detail = "triangle " + name + " failed", false;
        const auto rows = triangle_rows(f, 10);
        std::vector<std::size_t> lengths;
        for (const auto& row : rows)
            lengths.push_back(row_length(f, row.n));
        const auto chunks = chunk_rows(parse_bfile(bout.str()), lengths);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (chunks[i] != rows[i].entries)
                return detail = name + " row " + std::to_string(rows[i].n) + " differs", false;
    }
    detail = "verify all exit 0, 6 triangles round-trip";
    return true;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "golden tilde tables, rows 1-5", 1, golden_tables},
        {2, "listed R_1..R_4, T_1..T_4 (closed form and Dz extraction)", 1, listed_polynomials},
        {3, "M(n,k) = n! C(n+1,2k+1), N(n,k) = n! C(n+1,2k), n <= 25", 1, corollary},
        {4, "(Dz)^n(z), (Dz)^n(y) monomial structure, n <= 15", 5, expansion},
        {5, "Hoffman P_n, Q_n consistency, n <= 15", 5, hoffman},
        {6, "quotient-ring well-definedness, 200 random inputs", 1, quotient},
        {7, "tan triple agreement, n <= 20 on 13-point grid", 1, triple_agreement},
        {8, "R/T binomial recurrences, n <= 25", 1, rt_recurrences},
        {9, "double-precision sanity < 1e-9", 1, float_sanity},
        {10, "CLI verify all exit 0 and b-file round trip", 10, cli_contract},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed >= c.time_limit_s) {
            ok = false;
            detail += " (too slow)";
        }
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " -- " << detail << " ("
                  << elapsed << " s)\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
