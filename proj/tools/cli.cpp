#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "umbral/apostol.hpp"
#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/expr.hpp"
#include "umbral/identities.hpp"

namespace umbral::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const MathError&) {
        throw UsageError("--" + flag + ": '" + text + "' is not an exact rational p/q");
    }
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::vector<std::string>& items)
{
    std::vector<Rational> out;
    for (const auto& s : items)
        out.push_back(parse_rational_flag(flag, s));
    return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    std::string list;
    for (const char* a : allowed)
        list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format must be one of: " + list);
}

// --- compute ----------------------------------------------------------------

struct ComputeOptions {
    unsigned k = 1;
    unsigned v = 1;
    std::string lambda = "1";
    std::string alpha = "1";
    unsigned n_max = 10;
    std::string at;
    std::string format = "text";
    std::size_t precision = 0;
};

int run_compute(const ComputeOptions& o, std::ostream& out)
{
    require_format(o.format, {"json", "csv", "latex", "text"});
    UnifiedParams params{o.k, o.v, parse_rational_flag("lambda", o.lambda), parse_rational_flag("alpha", o.alpha)};
    params.validate();
    std::optional<Rational> at;
    if (!o.at.empty())
        at = parse_rational_flag("at", o.at);
    if (o.precision > 0 && o.precision < o.n_max)
        throw UsageError("--precision must be at least --n-max");

    const auto ys = unified_y(params, o.n_max);
    std::vector<std::string> text;
    std::vector<std::string> latex;
    for (const auto& y : ys) {
        if (at) {
            const Rational value = y(*at);
            text.push_back(value.to_string());
            latex.push_back(to_latex(value));
        } else {
            text.push_back(to_string(y));
            latex.push_back(to_latex(y));
        }
    }

    if (o.format == "text") {
        for (const auto& row : text)
            out << row << '\n';
    } else if (o.format == "csv") {
        out << "n,value\n";
        for (std::size_t n = 0; n < text.size(); ++n)
            out << n << ',' << text[n] << '\n';
    } else if (o.format == "latex") {
        out << "\\begin{tabular}{rl}\n";
        out << "$n$ & " << (at ? "$Y_n(" + to_latex(*at) + ")$" : std::string("$Y_n(x)$")) << " \\\\\n\\hline\n";
        for (std::size_t n = 0; n < latex.size(); ++n)
            out << n << " & $" << latex[n] << "$ \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        ordered_json doc;
        doc["params"] = {{"k", params.k}, {"v", params.v}, {"lambda", params.lambda.to_string()},
                         {"alpha", params.alpha.to_string()}};
        doc["at"] = at ? ordered_json(at->to_string()) : ordered_json(nullptr);
        ordered_json rows = ordered_json::array();
        for (std::size_t n = 0; n < text.size(); ++n)
            rows.push_back({{"n", n}, {"value", text[n]}});
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    }
    return exit_ok;
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> suite{"all"};
    std::string format = "text";
    unsigned jobs = 1;
    std::vector<std::string> lambdas;
    std::vector<std::string> alphas;
    std::vector<unsigned> ks;
    std::vector<unsigned> vs;
    std::optional<unsigned> n_max;
    std::vector<unsigned> js;
    std::vector<unsigned> ms;
    std::vector<std::string> cs;
    bool list = false;
};

int run_verify(const VerifyOptions& o, std::ostream& out)
{
    require_format(o.format, {"json", "text"});
    if (o.list) {
        for (const auto& info : check_catalog())
            out << info.id << ": " << info.description << '\n';
        return exit_ok;
    }
    std::vector<std::string> selection;
    try {
        selection = resolve_selection(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    ParameterGrid grid = ParameterGrid::default_grid();
    if (!o.lambdas.empty())
        grid.lambdas = parse_rational_list("lambda", o.lambdas);
    if (!o.alphas.empty())
        grid.alphas = parse_rational_list("alpha", o.alphas);
    if (!o.cs.empty())
        grid.cs = parse_rational_list("c", o.cs);
    if (!o.ks.empty())
        grid.ks = o.ks;
    if (!o.vs.empty())
        grid.vs = o.vs;
    if (!o.js.empty())
        grid.js = o.js;
    if (!o.ms.empty())
        grid.ms = o.ms;
    if (o.n_max)
        grid.n_max = *o.n_max;

    const auto reports = run_suite(grid, selection, std::max(1U, o.jobs));
    const SuiteSummary summary = summarize(reports);
    if (o.format == "json") {
        out << to_json_document(reports);
    } else {
        for (const auto& r : reports)
            out << to_text(r) << '\n';
        out << to_text(summary) << '\n';
        for (const auto& f : summary.findings)
            out << "discrepancy: " << f << '\n';
    }
    return summary.all_passed() ? exit_ok : exit_check_failed;
}

// --- stirling ---------------------------------------------------------------

int run_stirling(unsigned kind, unsigned n_max, const std::string& format, std::ostream& out)
{
    require_format(format, {"json", "csv", "latex", "text"});
    if (kind != 1 && kind != 2)
        throw UsageError("--kind must be 1 or 2");
    const StirlingTable table(kind == 1 ? StirlingKind::FirstSigned : StirlingKind::Second, n_max);

    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<std::string> row;
        for (const auto& value : table.row(n)) {
            row.push_back(value.get_str());
            width = std::max(width, row.back().size());
        }
        rows.push_back(std::move(row));
    }

    if (format == "csv") {
        for (unsigned m = 0; m <= n_max; ++m)
            out << (m ? "," : "") << 'm' << m;
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << '\n';
        }
    } else if (format == "text") {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? " " : "") << std::setw(static_cast<int>(width)) << row[i];
            out << '\n';
        }
    } else if (format == "latex") {
        out << "\\begin{tabular}{" << std::string(n_max + 2, 'r') << "}\n";
        out << "$n$";
        for (unsigned m = 0; m <= n_max; ++m)
            out << " & $" << m << "$";
        out << " \\\\\n\\hline\n";
        for (unsigned n = 0; n <= n_max; ++n) {
            out << n;
            for (const auto& cell : rows[n])
                out << " & " << cell;
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
    } else {
        ordered_json doc;
        doc["kind"] = kind;
        doc["n_max"] = n_max;
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    }
    return exit_ok;
}

// --- eval -------------------------------------------------------------------

std::string_view value_type(const expr::Value& v)
{
    if (std::holds_alternative<Rational>(v))
        return "rational";
    if (std::holds_alternative<Polynomial>(v))
        return "polynomial";
    return "series";
}

void point_at(std::ostream& err, const std::string& input, std::size_t offset, std::size_t length)
{
    err << "  " << input << '\n' << "  " << std::string(offset, ' ') << std::string(std::max<std::size_t>(length, 1), '^')
        << '\n';
}

int run_eval(const std::string& input, std::size_t precision, const std::string& format, std::ostream& out,
             std::ostream& err)
{
    require_format(format, {"json", "csv", "latex", "text"});
    expr::ExprPtr ast;
    try {
        ast = expr::parse(input);
    } catch (const expr::ParseError& e) {
        err << "error: " << e.what() << '\n';
        point_at(err, input, e.offset(), 1);
        return exit_usage;
    }
    expr::Value value;
    try {
        value = expr::evaluate(*ast, precision);
    } catch (const expr::EvalError& e) {
        err << "error: " << e.what() << " (offset " << e.offset() << ")\n";
        point_at(err, input, e.offset(), e.end() - e.offset());
        return exit_usage;
    }
    const std::string text = expr::to_string(value);
    if (format == "text") {
        out << text << '\n';
    } else if (format == "latex") {
        out << expr::to_latex(value) << '\n';
    } else if (format == "csv") {
        out << "type,value\n" << value_type(value) << ',' << text << '\n';
    } else {
        ordered_json doc{{"expression", input}, {"type", value_type(value)}, {"value", text}};
        out << doc.dump(2) << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Apostol-type polynomial tables, umbral brackets and identity checks", "umbral"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Table of Y_n(x) for n = 0..n-max");
    compute_cmd->add_option("--k", compute.k, "Power of t in the numerator")->capture_default_str();
    compute_cmd->add_option("--v", compute.v, "Order")->capture_default_str();
    compute_cmd->add_option("--lambda", compute.lambda, "lambda = beta^b as p/q")->capture_default_str();
    compute_cmd->add_option("--alpha", compute.alpha, "alpha = a^b as p/q")->capture_default_str();
    compute_cmd->add_option("--n-max", compute.n_max, "Last index")->capture_default_str();
    compute_cmd->add_option("--at", compute.at, "Evaluate at this rational instead of printing polynomials");
    compute_cmd->add_option("--format", compute.format, "json, csv, latex or text")->capture_default_str();
    compute_cmd->add_option("--precision", compute.precision,
                            "Minimum series precision (results are exact; must be >= n-max when given)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks over a parameter grid");
    verify_cmd->add_option("--suite", verify.suite, "all or comma-separated check ids")->delimiter(',');
    verify_cmd->add_option("--format", verify.format, "json or text")->capture_default_str();
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--lambda", verify.lambdas, "lambda values (comma-separated p/q)")->delimiter(',');
    verify_cmd->add_option("--alpha", verify.alphas, "alpha values")->delimiter(',');
    verify_cmd->add_option("--k", verify.ks, "k values")->delimiter(',');
    verify_cmd->add_option("--v", verify.vs, "order values")->delimiter(',');
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n");
    verify_cmd->add_option("--j", verify.js, "j values for bracket checks")->delimiter(',');
    verify_cmd->add_option("--m", verify.ms, "m values for the multiplication formula")->delimiter(',');
    verify_cmd->add_option("--c", verify.cs, "c values for the integral formula")->delimiter(',');
    verify_cmd->add_flag("--list", verify.list, "List check ids and what they compare");

    unsigned kind = 2;
    unsigned stirling_n = 10;
    std::string stirling_format = "csv";
    auto* stirling_cmd = app.add_subcommand("stirling", "Stirling number triangle");
    stirling_cmd->add_option("--kind", kind, "1 (signed first kind) or 2 (second kind)")->capture_default_str();
    stirling_cmd->add_option("--n-max", stirling_n, "Last row")->capture_default_str();
    stirling_cmd->add_option("--format", stirling_format, "json, csv, latex or text")->capture_default_str();

    std::string expression;
    std::size_t precision = expr::default_precision;
    std::string eval_format = "text";
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression such as \"<t^2 | x^2>\"");
    eval_cmd->add_option("expression", expression, "Expression")->required();
    eval_cmd->add_option("--precision", precision, "Series precision")->capture_default_str();
    eval_cmd->add_option("--format", eval_format, "json, csv, latex or text")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*compute_cmd)
            return run_compute(compute, out);
        if (*verify_cmd)
            return run_verify(verify, out);
        if (*stirling_cmd)
            return run_stirling(kind, stirling_n, stirling_format, out);
        return run_eval(expression, precision, eval_format, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

}  // namespace umbral::cli
