#include "tanpoly/cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "tanpoly/format.hpp"
#include "tanpoly/multiangle.hpp"
#include "tanpoly/symbolic.hpp"
#include "tanpoly/triangles.hpp"
#include "tanpoly/verify.hpp"

namespace tanpoly {

namespace {

constexpr unsigned kMaxFactorialRows = 60;

struct TriangleArgs {
    std::string name;
    unsigned rows = 0;
    std::string format = "table";
};

struct PolyArgs {
    std::string family;
    unsigned n = 0;
    std::string format = "table";
};

struct TanArgs {
    unsigned n = 0;
    std::string t;
    std::string method = "beeler";
    bool float_check = false;
};

struct VerifyArgs {
    std::string suite;
    unsigned max_n = 0;
    bool json = false;
};

int cmd_triangle(const TriangleArgs& args, std::ostream& out, std::ostream& err)
{
    const auto family = parse_family(args.name);
    const auto format = parse_format(args.format);
    if (!family || !format) {
        err << "triangle: unknown name or format\n";
        return exit_usage;
    }
    if (args.rows < 1 || ((*family == Family::M || *family == Family::N) && args.rows > kMaxFactorialRows)) {
        err << "triangle: --rows out of range\n";
        return exit_usage;
    }
    out << render_triangle(*family, triangle_rows(*family, args.rows), *format);
    return exit_ok;
}

int cmd_poly(const PolyArgs& args, std::ostream& out, std::ostream& err)
{
    const auto format = parse_format(args.format);
    if (!format) {
        err << "poly: unknown format\n";
        return exit_usage;
    }
    YPoly p;
    if (args.family == "P") {
        p = hoffman_P(args.n);
    } else if (args.family == "Q") {
        p = hoffman_Q(args.n);
    } else if (args.family == "R" || args.family == "T") {
        if (args.n < 1) {
            err << "poly: R and T are defined for n >= 1\n";
            return exit_usage;
        }
        p = args.family == "R" ? R_poly_dz(args.n) : T_poly_dz(args.n);
    } else {
        err << "poly: unknown family '" << args.family << "'\n";
        return exit_usage;
    }
    const auto text = render_poly(p, *format);
    if (!text) {
        err << "poly: format '" << args.format << "' is not available for polynomials\n";
        return exit_usage;
    }
    out << *text;
    return exit_ok;
}

int cmd_tan(const TanArgs& args, std::ostream& out, std::ostream& err)
{
    const auto t = Rational::parse(args.t);
    if (!t) {
        err << "tan: cannot parse '" << args.t << "' as p/q\n";
        return exit_usage;
    }
    int code = exit_ok;
    if (args.method == "beeler") {
        out << tan_beeler(args.n, *t).str() << '\n';
    } else if (args.method == "addition") {
        out << tan_addition_oracle(args.n, *t).str() << '\n';
    } else if (args.method == "gaussian") {
        out << tan_gaussian_oracle(args.n, *t).str() << '\n';
    } else if (args.method == "all") {
        const TanValue b = tan_beeler(args.n, *t);
        const TanValue a = tan_addition_oracle(args.n, *t);
        const TanValue g = tan_gaussian_oracle(args.n, *t);
        const bool agree = b == a && b == g;
        out << "beeler " << b.str() << '\n'
            << "addition " << a.str() << '\n'
            << "gaussian " << g.str() << '\n'
            << "agree " << (agree ? "true" : "false") << '\n';
        code = agree ? exit_ok : exit_disagreement;
    } else {
        err << "tan: unknown method '" << args.method << "'\n";
        return exit_usage;
    }
    if (args.float_check) {
        if (args.n == 0) {
            out << "float-check n/a\n";
        } else {
            const auto diff = tan_float_check(args.n, *t);
            std::ostringstream os;
            if (diff)
                os << std::scientific << std::setprecision(3) << *diff;
            else
                os << "n/a";
            out << "float-check " << os.str() << '\n';
        }
    }
    return code;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.max_n < 1) {
        err << "verify: --max-n must be at least 1\n";
        return exit_usage;
    }
    std::vector<VerifyReport> reports;
    if (args.suite == "all") {
        for (const auto& name : suite_names())
            reports.push_back(*run_suite(name, args.max_n));
    } else if (auto report = run_suite(args.suite, args.max_n)) {
        reports.push_back(std::move(*report));
    } else {
        err << "verify: unknown suite '" << args.suite << "'\n";
        return exit_usage;
    }

    bool pass = true;
    std::size_t checked = 0;
    for (const auto& r : reports) {
        pass = pass && r.pass();
        checked += r.checked;
    }

    if (args.json) {
        nlohmann::json j;
        if (args.suite == "all") {
            j["suite"] = "all";
            j["pass"] = pass;
            j["checked"] = checked;
            j["suites"] = nlohmann::json::array();
            for (const auto& r : reports)
                j["suites"].push_back(to_json(r));
        } else {
            j = to_json(reports.front());
        }
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            out << render_text(r);
        if (args.suite == "all")
            out << "all: " << (pass ? "PASS" : "FAIL") << " (" << checked << " checks)\n";
    }
    return pass ? exit_ok : exit_disagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tangent multiple-angle triangles, derivative polynomials and identity checks", "tanpoly"};
    app.require_subcommand(1);

    TriangleArgs triangle;
    auto* triangle_cmd = app.add_subcommand("triangle", "Print rows of a coefficient triangle");
    triangle_cmd->add_option("--name", triangle.name, "R, T, M, N, Rtilde or Ttilde")->required();
    triangle_cmd->add_option("--rows", triangle.rows, "Number of rows")->required();
    triangle_cmd->add_option("--format", triangle.format, "table, bfile, csv or json");

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Print a derivative polynomial");
    poly_cmd->add_option("--family", poly.family, "R, T, P or Q")->required();
    poly_cmd->add_option("--n", poly.n, "Polynomial index")->required();
    poly_cmd->add_option("--format", poly.format, "table, csv or json");

    TanArgs tan;
    auto* tan_cmd = app.add_subcommand("tan", "Evaluate tan(n arctan t) exactly");
    tan_cmd->add_option("--n", tan.n, "Multiple n >= 0")->required();
    tan_cmd->add_option("--t", tan.t, "Rational t as p/q")->required();
    tan_cmd->add_option("--method", tan.method, "beeler, addition, gaussian or all");
    tan_cmd->add_flag("--float-check", tan.float_check, "Also print the double-precision deviation");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
    verify_cmd->add_option("--suite", verify.suite,
                           "rt-recurrences, corollary, dz-expansion, hoffman, theorem2, tables, beeler or all")
        ->required();
    verify_cmd->add_option("--max-n", verify.max_n, "Largest index to check")->required();
    verify_cmd->add_flag("--json", verify.json, "Emit the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        if (*triangle_cmd)
            return cmd_triangle(triangle, out, err);
        if (*poly_cmd)
            return cmd_poly(poly, out, err);
        if (*tan_cmd)
            return cmd_tan(tan, out, err);
        return cmd_verify(verify, out, err);
    } catch (const internal_inconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return exit_disagreement;
    }
}

}  // namespace tanpoly
