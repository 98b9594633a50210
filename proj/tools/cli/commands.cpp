#include "commands.hpp"

#include "format.hpp"
#include "function_spec.hpp"
#include "verify_suite.hpp"

#include "focku/focku.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace focku::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
json complex_json(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

struct ContextFlags {
    int truncation = 64;
    double alpha = 1.0;
    double op_tol = 1e-10;
    double tail_tol = 1e-12;

    FockContext context() const
    {
        FockContext ctx;
        ctx.alpha = alpha;
        ctx.trunc = truncation;
        ctx.op_tol = op_tol;
        ctx.tail_tol = tail_tol;
        ctx.validate();
        return ctx;
    }
};

void add_truncation(CLI::App* cmd, int& truncation)
{
    cmd->add_option("--truncation", truncation, "Truncation degree N")
        ->envname("FOCKU_TRUNCATION")
        ->capture_default_str();
}

void add_context_flags(CLI::App* cmd, ContextFlags& flags, bool with_alpha = true)
{
    add_truncation(cmd, flags.truncation);
    if (with_alpha)
        cmd->add_option("--alpha", flags.alpha, "Weight alpha of the Fock space")->capture_default_str();
    cmd->add_option("--tol", flags.op_tol, "Operator consistency tolerance")->capture_default_str();
    cmd->add_option("--tail-tol", flags.tail_tol, "Relative tail mass tolerance")->capture_default_str();
}

void add_format(CLI::App* cmd, std::string& format)
{
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

json context_json(const FockContext& ctx)
{
    return {{"alpha", ctx.alpha}, {"truncation", ctx.trunc}, {"headroom", ctx.headroom},
            {"tail_tol", ctx.tail_tol}, {"op_tol", ctx.op_tol}};
}

json report_json(const UncertaintyReport& r)
{
    return {{"alpha", r.alpha},
            {"norm_f", number(r.norm_f)},
            {"norm_squared", number(r.norm_f * r.norm_f)},
            {"P", number(r.P)},
            {"M", number(r.M)},
            {"ip_plus", complex_json(r.ip_plus)},
            {"ip_minus", complex_json(r.ip_minus)},
            {"a_opt", number(r.a_opt)},
            {"b_opt", number(r.b_opt)},
            {"sin_plus", number(r.sin_plus)},
            {"sin_minus", number(r.sin_minus)},
            {"dist_plus", number(r.dist_plus)},
            {"dist_minus", number(r.dist_minus)},
            {"margin_thm4", number(r.margin_thm4)},
            {"margin_cor5", number(r.margin_cor5)},
            {"margin_cor6", number(r.margin_cor6)},
            {"margin_cor8", number(r.margin_cor8)},
            {"margin_cor9", number(r.margin_cor9)},
            {"margin_cor10", number(r.margin_cor10)},
            {"derivative_norm", number(r.derivative_norm)},
            {"zf_norm", number(r.zf_norm)}};
}

// Flattens a JSON object into "field,value" CSV rows; nested arrays become
// field_re/field_im or field_0, field_1, ...
void flatten(const json& v, const std::string& key, std::ostringstream& out)
{
    if (v.is_object()) {
        for (const auto& [k, child] : v.items())
            flatten(child, key.empty() ? k : key + "." + k, out);
    } else if (v.is_array()) {
        if (v.size() == 2 && (v[0].is_number() || v[0].is_null()) && (v[1].is_number() || v[1].is_null())) {
            flatten(v[0], key + "_re", out);
            flatten(v[1], key + "_im", out);
        } else {
            for (std::size_t i = 0; i < v.size(); ++i)
                flatten(v[i], key + "_" + std::to_string(i), out);
        }
    } else if (v.is_number_float()) {
        out << key << ',' << csv_number(v.get<double>()) << '\n';
    } else if (v.is_null()) {
        out << key << ",nan\n";
    } else if (v.is_string()) {
        out << key << ',' << v.get<std::string>() << '\n';
    } else {
        out << key << ',' << v.dump() << '\n';
    }
}

std::string record_csv(const json& doc)
{
    std::ostringstream out;
    out << "field,value\n";
    flatten(doc, "", out);
    return out.str();
}

struct AnalyzeArgs {
    std::string input;
    ContextFlags ctx;
    std::string format = "json";
    std::vector<double> sigmas;
};

std::string cmd_analyze(const AnalyzeArgs& args)
{
    for (const double sigma : args.sigmas) {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw InputError("--sigma values must be positive");
    }
    const auto spec = load_function_spec(args.input);
    const auto f = materialize(spec, args.ctx.context());
    const auto report = uncertainty_report(f);

    json cor7 = json::array();
    for (const double sigma : args.sigmas)
        cor7.push_back({{"sigma", sigma}, {"value", number(cor7_value(f, sigma))}});
    const double best = optimal_sigma(f);

    json doc;
    doc["schema"] = 1;
    doc["command"] = "analyze";
    doc["input"] = to_json(spec);
    doc["context"] = context_json(f.context());
    doc["report"] = report_json(report);
    doc["cor7"] = std::move(cor7);
    doc["optimal_sigma"] = {{"sigma", number(best)}, {"value", number(cor7_value(f, best))}};
    return args.format == "json" ? dump(doc) : record_csv(doc);
}

struct VerifyArgs {
    VerifyOptions options;
    std::string format = "json";
    bool timing = false;
};

std::string cmd_verify(const VerifyArgs& args, bool& passed)
{
    if (args.options.cases < 0)
        throw InputError("--cases must be nonnegative");
    if (args.options.alphas.empty())
        throw InputError("--alpha needs at least one value");
    for (const double alpha : args.options.alphas) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw InputError("--alpha values must be positive");
    }
    FockContext probe;
    probe.trunc = args.options.truncation;
    probe.validate();

    const auto result = run_verify_suite(args.options);
    passed = result.passed();
    return args.format == "json" ? dump(suite_to_json(result, args.options, args.timing))
                                 : suite_to_csv(result, args.timing);
}

struct ExtremalArgs {
    double c = 1.0;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> C{1.0, 0.0};
    ContextFlags ctx;
    std::string format = "json";
};

std::string cmd_extremal(const ExtremalArgs& args)
{
    if (args.C.empty() || args.C.size() > 2)
        throw InputError("--C takes a real part and an optional imaginary part");
    const Complex C{args.C[0], args.C.size() == 2 ? args.C[1] : 0.0};
    const auto base = args.ctx.context();
    const auto params = extremal_function({args.c, args.a, args.b, C}, base.alpha);
    const auto f = gaussian_coeffs_adaptive(params, base);
    const auto shifts = optimal_shifts(f);
    const auto rec = recover_c(f);

    json doc;
    doc["schema"] = 1;
    doc["command"] = "extremal";
    doc["family"] = {{"c", args.c}, {"a", args.a}, {"b", args.b}, {"C", complex_json(C)}};
    doc["params"] = {{"C", complex_json(params.C)}, {"r", complex_json(params.r)}, {"s", complex_json(params.s)}};
    doc["context"] = context_json(f.context());
    doc["norm_squared"] = number(f.norm_squared());
    doc["eq6_residual"] = number(eq6_residual(f, args.c, args.a, args.b));
    doc["recovered_c"] = {{"c", number(rec.c)}, {"residual", number(rec.residual)}, {"determined", rec.determined}};
    doc["optimal_shifts"] = {{"a", number(shifts.a)}, {"b", number(shifts.b)}};
    doc["theorem4_margin"] = number(theorem4_margin(f, shifts.a, shifts.b));
    return args.format == "json" ? dump(doc) : record_csv(doc);
}

struct SweepArgs {
    std::string input;
    double min = 0.1;
    double max = 10.0;
    int steps = 101;
    ContextFlags ctx;
    std::string format = "csv";
};

std::string cmd_sweep_sigma(const SweepArgs& args)
{
    if (!(args.min > 0.0) || !(args.max > args.min) || !std::isfinite(args.max))
        throw InputError("sigma range needs 0 < --min < --max");
    if (args.steps < 2)
        throw InputError("--steps must be at least 2");
    const auto spec = load_function_spec(args.input);
    const auto f = materialize(spec, args.ctx.context());

    // Geometric grid: sigma_k = min (max/min)^(k/(steps-1)).
    std::vector<std::pair<double, double>> rows;
    const double ratio = std::log(args.max / args.min);
    for (int k = 0; k < args.steps; ++k) {
        const double sigma = k + 1 == args.steps ? args.max : args.min * std::exp(ratio * k / (args.steps - 1));
        rows.emplace_back(sigma, cor7_value(f, sigma));
    }
    const double best = optimal_sigma(f);
    const double best_value = cor7_value(f, best);

    if (args.format == "csv") {
        std::ostringstream out;
        out << "kind,sigma,cor7_value\n";
        for (const auto& [sigma, value] : rows)
            out << "grid," << csv_number(sigma) << ',' << csv_number(value) << '\n';
        out << "optimal," << csv_number(best) << ',' << csv_number(best_value) << '\n';
        return out.str();
    }
    json points = json::array();
    for (const auto& [sigma, value] : rows)
        points.push_back({{"sigma", sigma}, {"value", number(value)}});
    json doc;
    doc["schema"] = 1;
    doc["command"] = "sweep-sigma";
    doc["input"] = to_json(spec);
    doc["context"] = context_json(f.context());
    doc["points"] = std::move(points);
    doc["optimal"] = {{"sigma", number(best)}, {"value", number(best_value)}};
    return dump(doc);
}

struct BargmannArgs {
    std::string input;
    ContextFlags ctx;
    std::string format = "json";
};

std::string cmd_bargmann_check(const BargmannArgs& args)
{
    const auto spec = load_function_spec(args.input);
    const auto f = materialize(spec, args.ctx.context());
    const auto dim = static_cast<Eigen::Index>(f.size());
    const auto classical = BargmannBridge(dim).classical_margin(f);
    const double via_cor7 = cor7_value(f, kPi) / (2.0 * kPi);

    json doc;
    doc["schema"] = 1;
    doc["command"] = "bargmann-check";
    doc["input"] = to_json(spec);
    doc["context"] = context_json(f.context());
    doc["norm_squared"] = number(f.norm_squared());
    doc["classical"] = {{"x_energy", number(classical.x_energy)},
                        {"d_energy", number(classical.d_energy)},
                        {"bound", number(classical.bound)},
                        {"margin", number(classical.margin)}};
    doc["cor7_over_2pi"] = number(via_cor7);
    doc["difference"] = number(classical.margin - via_cor7);
    doc["commutator_error"] = {
        {"extended", number(interior_commutator_error(dim, CommutatorPrecision::Extended))},
        {"double", number(interior_commutator_error(dim, CommutatorPrecision::Double))}};
    return args.format == "json" ? dump(doc) : record_csv(doc);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numerical uncertainty inequalities on the Fock space", "focku"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "focku 0.1.0");

    AnalyzeArgs analyze;
    auto* a = app.add_subcommand("analyze", "Report every uncertainty quantity for one function");
    a->add_option("input", analyze.input, "Function spec JSON file ('-' for stdin)")->required();
    add_context_flags(a, analyze.ctx);
    add_format(a, analyze.format);
    a->add_option("--sigma", analyze.sigmas, "Evaluate cor7_value at this sigma (repeatable)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run the seeded property suite");
    v->add_option("--seed", verify.options.seed, "Suite seed")->capture_default_str();
    v->add_option("--cases", verify.options.cases, "Random cases per sampled check")->capture_default_str();
    add_truncation(v, verify.options.truncation);
    v->add_option("--alpha", verify.options.alphas, "Comma-separated weights")->delimiter(',')->capture_default_str();
    add_format(v, verify.format);
    v->add_flag("--timing", verify.timing, "Include wall time per check (not reproducible)");

    ExtremalArgs extremal;
    auto* e = app.add_subcommand("extremal", "Build and check a member of the equality family");
    e->add_option("--c", extremal.c, "Ratio c > 0")->required();
    e->add_option("--a", extremal.a, "Real shift a")->capture_default_str();
    e->add_option("--b", extremal.b, "Real shift b")->capture_default_str();
    e->add_option("--C", extremal.C, "Scale: real part and optional imaginary part")->expected(1, 2);
    add_context_flags(e, extremal.ctx);
    add_format(e, extremal.format);

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep-sigma", "Tabulate cor7_value on a geometric sigma grid");
    s->add_option("--input", sweep.input, "Function spec JSON file ('-' for stdin)")->required();
    s->add_option("--min", sweep.min, "Smallest sigma")->capture_default_str();
    s->add_option("--max", sweep.max, "Largest sigma")->capture_default_str();
    s->add_option("--steps", sweep.steps, "Grid points")->capture_default_str();
    add_context_flags(s, sweep.ctx);
    add_format(s, sweep.format);

    BargmannArgs bargmann;
    auto* b = app.add_subcommand("bargmann-check", "Compare the classical margin with cor7_value at sigma = pi");
    b->add_option("--input", bargmann.input, "Function spec JSON file ('-' for stdin)")->required();
    add_context_flags(b, bargmann.ctx, false);
    add_format(b, bargmann.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& ver) {
        out << ver.what() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& pe) {
        err << "focku: " << pe.what() << '\n';
        return kExitUsage;
    }

    try {
        std::string text;
        int code = kExitOk;
        if (a->parsed()) {
            text = cmd_analyze(analyze);
        } else if (v->parsed()) {
            bool passed = false;
            text = cmd_verify(verify, passed);
            code = passed ? kExitOk : kExitSuiteFailure;
        } else if (e->parsed()) {
            text = cmd_extremal(extremal);
        } else if (s->parsed()) {
            text = cmd_sweep_sigma(sweep);
        } else {
            text = cmd_bargmann_check(bargmann);
        }
        out << text;
        out.flush();
        if (code == kExitSuiteFailure)
            err << "focku: verification suite reported failures\n";
        return code;
    } catch (const InputError& ie) {
        err << "focku: " << ie.what() << '\n';
        return kExitUsage;
    } catch (const Error& fe) {
        err << "focku: " << to_string(fe.code()) << ": " << fe.what() << '\n';
        return is_precondition_failure(fe.code()) ? kExitPrecondition : kExitUsage;
    }
}

} // namespace focku::cli
