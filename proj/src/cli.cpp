#include "rieszlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rieszlab/arithmetic.hpp"
#include "rieszlab/mobius_tail.hpp"
#include "rieszlab/report.hpp"
#include "rieszlab/series.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/verify.hpp"
#include "rieszlab/zeros.hpp"

namespace rieszlab {

int exit_code_for(ErrorKind kind)
{
    return kind == ErrorKind::config ? kExitUsage : kExitError;
}

namespace {

struct Options
{
    std::string sieve_limit = "1e6";
    std::optional<double> tol;
    std::string zeros;
    std::string json_path;
    std::string csv_path;
    std::size_t budget = kDefaultQuadBudget;
    unsigned threads = 0;

    // eval / scan
    std::string target;
    std::map<std::string, double> args;
    std::vector<double> geometric, linear;

    // verify
    std::vector<std::string> ids;
    std::vector<std::string> sets;
};

struct Env
{
    SeriesConfig cfg;
    std::string zeros_path;
    std::shared_ptr<const std::vector<ZetaZero>> zeros;
    std::uint64_t sieve_limit = 0;

    const std::vector<ZetaZero>& load_zeros_once()
    {
        if (!zeros)
            zeros = std::make_shared<const std::vector<ZetaZero>>(load_zeros(zeros_path));
        return *zeros;
    }
};

std::uint64_t parse_sieve_limit(const std::string& text)
{
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw ConfigError("--sieve-limit: not a number: '" + text + "'");
    }
    if (!(v >= static_cast<double>(kMinSieveLimit) && v <= static_cast<double>(kMaxSieveLimit)) ||
        v != std::floor(v))
        throw ConfigError("--sieve-limit must be an integer in [2, 1e8], got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

Env make_env(const Options& o)
{
    Env env;
    env.sieve_limit = parse_sieve_limit(o.sieve_limit);
    if (o.budget == 0)
        throw ConfigError("--budget must be positive");
    env.cfg = make_series_config(make_shared_sieve(env.sieve_limit), o.tol.value_or(1e-12));
    env.zeros_path = resolve_zeros_path(o.zeros);
    return env;
}

RunManifest make_manifest(const Options& o, const Env& env, int argc, const char* const* argv)
{
    RunManifest m;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            m.command += ' ';
        m.command += argv[i];
    }
    if (o.tol)
        m.tol_overrides.emplace_back("series_tol", *o.tol);
    m.sieve_limit = env.sieve_limit;
    m.zeros_path = env.zeros_path;
    m.budget = o.budget;
    return m;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("cannot open '" + path + "' for writing");
    f << content;
    if (!f)
        throw ConfigError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------- functions

struct Value
{
    double value = 0.0;
    double error_bound = std::nan("");
    double terms = std::nan("");
};

Value from(const SeriesValue& v)
{
    return {v.value, v.error_bound, static_cast<double>(v.terms)};
}

Value exact(double v)
{
    return {v, std::nan(""), std::nan("")};
}

struct FunctionSpec
{
    std::string name;
    std::vector<std::string> args;  // the first one is the scan variable
    std::map<std::string, double> defaults;
    std::function<Value(const std::map<std::string, double>&, Env&)> eval;
};

int as_int(double v, const char* what)
{
    if (v != std::floor(v) || std::abs(v) > 1e9)
        throw DomainError(std::string(what) + " must be an integer");
    return static_cast<int>(v);
}

const std::vector<FunctionSpec>& functions()
{
    using A = const std::map<std::string, double>&;
    static const std::vector<FunctionSpec> fns = {
        {"dawson", {"x"}, {}, [](A a, Env&) { return exact(dawson(a.at("x"))); }},
        {"delta_exp", {"x", "a"}, {{"a", 1.0}},
         [](A a, Env& e) { return from(delta_exp(a.at("x"), a.at("a"), e.cfg)); }},
        {"ei_neg", {"x"}, {}, [](A a, Env&) { return exact(expint_ei_neg(a.at("x"))); }},
        {"erf", {"x"}, {}, [](A a, Env&) { return exact(erf(a.at("x"))); }},
        {"erfcx", {"x"}, {}, [](A a, Env&) { return exact(erfcx(a.at("x"))); }},
        {"gram_H", {"x"}, {}, [](A a, Env& e) { return from(gram_H(a.at("x"), e.cfg)); }},
        {"gram_H_double", {"x"}, {}, [](A a, Env& e) { return from(gram_H_double(a.at("x"), e.cfg)); }},
        {"hprime", {"x"}, {}, [](A a, Env& e) { return from(hprime(a.at("x"), e.cfg)); }},
        {"incgamma_diagonal", {"s"}, {},
         [](A a, Env& e) { return from(incgamma_diagonal(a.at("s"), e.cfg)); }},
        {"incgamma_series", {"s"}, {}, [](A a, Env& e) { return from(incgamma_series(a.at("s"), e.cfg)); }},
        {"kummer_1f1_half", {"z"}, {}, [](A a, Env&) { return exact(kummer_1f1_half(a.at("z"))); }},
        {"laplace_truncated", {"x", "r"}, {},
         [](A a, Env& e) { return from(laplace_truncated(a.at("x"), a.at("r"), e.cfg)); }},
        {"lorentz_sum", {"a", "w"}, {},
         [](A a, Env& e) { return from(lorentz_sum(a.at("a"), a.at("w"), e.cfg)); }},
        {"mobius", {"n"}, {},
         [](A a, Env& e) {
             const int n = as_int(a.at("n"), "n");
             if (n < 1)
                 throw DomainError("mobius: n must be positive");
             if (static_cast<std::uint64_t>(n) > e.cfg.tables().limit())
                 throw RangeError("mobius: n exceeds the sieve limit");
             return exact(e.cfg.tables().mu(static_cast<std::uint64_t>(n)));
         }},
        {"mobius_power_sum", {"x"}, {}, [](A a, Env& e) { return from(mobius_power_sum(a.at("x"), e.cfg)); }},
        {"mobius_reciprocal_constant", {}, {},
         [](A, Env& e) { return from(mobius_reciprocal_constant(e.cfg)); }},
        {"omega_small", {"s"}, {}, [](A a, Env& e) { return from(omega_small(a.at("s"), e.cfg)); }},
        {"prime_count", {"x"}, {},
         [](A a, Env& e) { return exact(static_cast<double>(prime_count(a.at("x"), e.cfg.tables()))); }},
        {"prime_sum_plogp", {"x"}, {},
         [](A a, Env& e) { return exact(prime_sum_plogp(a.at("x"), e.cfg.tables())); }},
        {"prime_zeta", {"s"}, {}, [](A a, Env& e) { return from(prime_zeta(a.at("s"), e.cfg)); }},
        {"riemann_j", {"x"}, {}, [](A a, Env& e) { return exact(riemann_j(a.at("x"), e.cfg.tables())); }},
        {"riesz_core", {"x"}, {}, [](A a, Env& e) { return from(riesz_core(a.at("x"), e.cfg)); }},
        {"upper_incomplete_gamma", {"n", "x"}, {},
         [](A a, Env&) { return exact(upper_incomplete_gamma_int(as_int(a.at("n"), "n"), a.at("x"))); }},
        {"zero_sum_f", {"x"}, {},
         [](A a, Env& e) {
             const ZeroSum z = zero_sum_f(a.at("x"), e.load_zeros_once(), e.cfg);
             return Value{z.value, z.error_bound, static_cast<double>(z.terms)};
         }},
        {"zeta", {"s"}, {}, [](A a, Env&) { return exact(zeta_real(a.at("s"))); }},
    };
    return fns;
}

const FunctionSpec* find_function(const std::string& name)
{
    for (const auto& f : functions())
        if (f.name == name)
            return &f;
    return nullptr;
}

std::map<std::string, double> bind_args(const FunctionSpec& fn, const std::map<std::string, double>& given,
                                        const std::string& skip = "")
{
    std::map<std::string, double> bound = fn.defaults;
    for (const auto& [k, v] : given) {
        if (std::find(fn.args.begin(), fn.args.end(), k) == fn.args.end() || k == skip)
            throw ConfigError(fn.name + " does not take --" + k);
        bound[k] = v;
    }
    for (const auto& a : fn.args)
        if (a != skip && !bound.count(a))
            throw ConfigError(fn.name + " needs --" + a);
    return bound;
}

std::string function_list()
{
    std::string s;
    for (const auto& f : functions()) {
        s += "  " + f.name;
        for (const auto& a : f.args)
            s += " --" + a;
        s += "\n";
    }
    return s;
}

// ---------------------------------------------------------------- commands

int cmd_eval(const Options& o, std::ostream& out)
{
    const FunctionSpec* fn = find_function(o.target);
    if (!fn)
        throw ConfigError("unknown function '" + o.target + "'; known functions:\n" + function_list());
    const auto args = bind_args(*fn, o.args);
    Env env = make_env(o);
    const Value v = fn->eval(args, env);
    out << fn->name;
    for (const auto& [k, x] : args)
        out << ' ' << k << '=' << format_number(x);
    out << "\nvalue        " << format_number(v.value) << '\n';
    if (!std::isnan(v.error_bound))
        out << "error_bound  " << format_number(v.error_bound) << '\n';
    if (!std::isnan(v.terms))
        out << "terms        " << format_number(v.terms) << '\n';
    return kExitOk;
}

bool needs_zeros(const std::vector<std::string>& ids)
{
    const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
    for (const auto& spec : check_registry()) {
        if (!all && std::find(ids.begin(), ids.end(), spec.id) == ids.end())
            continue;
        for (const auto* deps : {&spec.lhs_deps, &spec.rhs_deps})
            if (std::find(deps->begin(), deps->end(), "zero_sum_f") != deps->end())
                return true;
    }
    return false;
}

unsigned thread_count(const Options& o)
{
    if (o.threads > 0)
        return o.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

VerifyContext make_context(Env& env, const Options& o, const std::vector<std::string>& ids)
{
    VerifyContext ctx;
    ctx.cfg = env.cfg;
    ctx.budget = o.budget;
    if (needs_zeros(ids)) {
        env.load_zeros_once();
        ctx.zeros = env.zeros;
    }
    return ctx;
}

int status_exit(std::span<const CheckResult> results)
{
    return summarize(results).fail > 0 ? kExitFail : kExitOk;
}

void print_text_summary(std::ostream& os, std::span<const CheckResult> results)
{
    for (const auto& r : results) {
        std::string status(to_string(r.status));
        status.resize(13, ' ');
        os << status << r.id;
        if (r.params.size() > 6) {
            os << ' ' << r.params.front().first << '=' << format_number(r.params.front().second) << ".."
               << format_number(r.params.back().second) << " (" << r.params.size() << " points)";
        } else {
            for (const auto& [k, v] : r.params)
                os << ' ' << k << '=' << format_number(v);
        }
        os << '\n';
    }
    const Summary s = summarize(results);
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive, "
       << s.report_only << " report-only\n";
}

int cmd_verify(const Options& o, int argc, const char* const* argv, std::ostream& out)
{
    std::vector<std::string> ids = o.ids.empty() ? std::vector<std::string>{"all"} : o.ids;
    for (const auto& id : ids)
        if (id != "all")
            find_check(id);
    PointOverrides overrides;
    for (const auto& s : o.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects id=points, got '" + s + "'");
        overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }

    Env env = make_env(o);
    const VerifyContext ctx = make_context(env, o, ids);
    const auto results = run_all(ids, ctx, overrides, thread_count(o));

    RunManifest m = make_manifest(o, env, argc, argv);
    std::string joined;
    for (const auto& id : ids)
        joined += (joined.empty() ? "" : ",") + id;
    m.params.emplace_back("ids", joined);
    for (const auto& [id, text] : overrides)
        m.params.emplace_back("points." + id, text);
    const std::string json = render_json(m, results, utc_timestamp());

    if (o.json_path.empty()) {
        out << json;
    } else {
        write_file(o.json_path, json);
        print_text_summary(out, results);
    }
    if (!o.csv_path.empty()) {
        std::ostringstream csv;
        write_results_csv(csv, results);
        write_file(o.csv_path, csv.str());
    }
    return status_exit(results);
}

std::vector<double> scan_grid(const Options& o, std::vector<double> fallback)
{
    if (!o.geometric.empty() && !o.linear.empty())
        throw ConfigError("give either --geometric or --linear, not both");
    const std::vector<double>& spec = !o.geometric.empty() ? o.geometric : o.linear;
    if (spec.empty()) {
        if (fallback.empty())
            throw ConfigError("scan needs --geometric START STOP POINTS or --linear START STOP POINTS");
        return fallback;
    }
    const double a = spec[0], b = spec[1], pts = spec[2];
    if (pts < 1 || pts != std::floor(pts) || pts > 1e6)
        throw ConfigError("POINTS must be a positive integer");
    const auto n = static_cast<std::size_t>(pts);
    const bool geo = !o.geometric.empty();
    if (geo && !(a > 0.0 && b > 0.0))
        throw ConfigError("--geometric needs positive START and STOP");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        g[i] = geo ? a * std::pow(b / a, t) : a + (b - a) * t;
    }
    g.front() = a;
    if (n > 1)
        g.back() = b;
    return g;
}

void emit_csv(const Options& o, std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows)
{
    std::ostringstream csv;
    write_csv(csv, header, rows);
    if (o.csv_path.empty())
        out << csv.str();
    else
        write_file(o.csv_path, csv.str());
}

// "ratio@1000" on the row for x = 1000 becomes column "ratio".
std::string column_name(const std::string& key, double x)
{
    const std::string suffix = "@" + format_number(x);
    const std::string alt = "@" + [&] {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return std::string(buf);
    }();
    for (const auto& s : {suffix, alt})
        if (key.size() > s.size() && key.compare(key.size() - s.size(), s.size(), s) == 0)
            return key.substr(0, key.size() - s.size());
    return key;
}

int scan_check(const Options& o, const CheckSpec& spec, std::ostream& out)
{
    if (!spec.grid && spec.param_names.size() != 1)
        throw ConfigError(spec.id + " has " + std::to_string(spec.param_names.size()) +
                          " parameters; scan takes one-parameter checks (use verify --set for others)");
    if (!o.args.empty())
        throw ConfigError("scan of a check takes no --" + o.args.begin()->first);
    const auto grid = scan_grid(o, {});
    Env env = make_env(o);
    const VerifyContext ctx = make_context(env, o, {spec.id});

    // One point per row, also for grid checks.
    std::vector<CheckResult> results;
    for (double x : grid) {
        auto r = run_all({spec.id}, ctx, {{spec.id, format_number(x)}}, 1);
        results.push_back(std::move(r.front()));
    }

    std::vector<std::string> header = {"x", "lhs", "rhs", "abs_resid", "rel_resid", "status"};
    const std::size_t fixed = header.size();
    std::vector<std::map<std::string, std::string>> extra(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (const auto& [k, v] : results[i].diagnostics) {
            const std::string col = column_name(k, grid[i]);
            if (std::find(header.begin() + fixed, header.end(), col) == header.end())
                header.push_back(col);
            extra[i][col] = format_number(v);
        }
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        std::vector<std::string> row = {format_number(grid[i]),      format_number(r.lhs),
                                        format_number(r.rhs),        format_number(r.abs_resid),
                                        format_number(r.rel_resid), std::string(to_string(r.status))};
        for (std::size_t c = fixed; c < header.size(); ++c) {
            const auto it = extra[i].find(header[c]);
            row.push_back(it == extra[i].end() ? "" : it->second);
        }
        rows.push_back(std::move(row));
    }
    emit_csv(o, out, header, rows);
    return status_exit(results);
}

int scan_function(const Options& o, const FunctionSpec& fn, std::ostream& out)
{
    if (fn.args.empty())
        throw ConfigError(fn.name + " takes no arguments; use eval");
    const std::string var = fn.args.front();
    auto args = bind_args(fn, o.args, var);
    const auto grid = scan_grid(o, {});
    Env env = make_env(o);
    std::vector<std::vector<std::string>> rows;
    for (double x : grid) {
        args[var] = x;
        const Value v = fn.eval(args, env);
        rows.push_back({format_number(x), format_number(v.value), format_number(v.error_bound),
                        format_number(v.terms)});
    }
    emit_csv(o, out, {var, "value", "error_bound", "terms"}, rows);
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out)
{
    if (const FunctionSpec* fn = find_function(o.target))
        return scan_function(o, *fn, out);
    for (const auto& spec : check_registry())
        if (spec.id == o.target)
            return scan_check(o, spec, out);
    throw ConfigError("unknown function or check '" + o.target + "'");
}

int cmd_decay(const Options& o, int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    const auto& spec = find_check("riesz_decay");
    const auto grid = scan_grid(o, spec.default_points.front());
    Env env = make_env(o);

    std::vector<std::vector<std::string>> rows;
    std::string points;
    for (double x : grid) {
        const SeriesValue v = riesz_core(x, env.cfg);
        rows.push_back({format_number(x), format_number(v.value), format_number(v.error_bound)});
        points += (points.empty() ? "" : ":") + format_number(x);
    }
    emit_csv(o, out, {"x", "riesz_core", "error_bound"}, rows);

    VerifyContext ctx;
    ctx.cfg = env.cfg;
    ctx.budget = o.budget;
    const auto results = run_all({"riesz_decay"}, ctx, {{"riesz_decay", points}}, 1);
    std::ostream& side = o.csv_path.empty() ? err : out;
    for (const auto& [k, v] : results.front().diagnostics)
        if (k.rfind("R@", 0) != 0)
            side << k << ' ' << format_number(v) << '\n';
    if (!o.json_path.empty()) {
        RunManifest m = make_manifest(o, env, argc, argv);
        m.params.emplace_back("points.riesz_decay", points);
        write_file(o.json_path, render_json(m, results, utc_timestamp()));
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Numerical checks around the Riesz function, the Gram series and Mobius sums", "rieszlab"};
    app.set_version_flag("--version", library_version());
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--sieve-limit", o.sieve_limit, "Mobius/prime sieve limit, up to 1e8")->capture_default_str();
    app.add_option("--tol", o.tol, "Series truncation tolerance (default 1e-12)")->check(CLI::PositiveNumber);
    app.add_option("--zeros", o.zeros, "Zeta zeros file (else $RIESZLAB_ZEROS, else the bundled table)");
    app.add_option("--json", o.json_path, "Write the JSON report here instead of stdout");
    app.add_option("--csv", o.csv_path, "Write CSV here instead of stdout");
    app.add_option("--budget", o.budget, "Integrand evaluations per quadrature")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads for verify (default: all cores)");

    auto add_args = [&o](CLI::App* sub) {
        for (const char* name : {"x", "a", "w", "s", "r", "n", "z"}) {
            sub->add_option_function<double>(
                std::string("--") + name, [&o, name](double v) { o.args[name] = v; },
                std::string("Argument ") + name);
        }
    };
    auto add_grid = [&o](CLI::App* sub) {
        sub->add_option("--geometric", o.geometric, "START STOP POINTS, geometric spacing")->expected(3);
        sub->add_option("--linear", o.linear, "START STOP POINTS, linear spacing")->expected(3);
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function");
    eval->add_option("function", o.target, "Function name")->required();
    add_args(eval);
    eval->footer("Functions:\n" + function_list());

    CLI::App* verify = app.add_subcommand("verify", "Run checks (ids or 'all') and report JSON");
    verify->add_option("ids", o.ids, "Check ids, or all");
    verify->add_option("--set", o.sets, "Override points: id=p1,p2 with ':' between values of a point");

    CLI::App* scan = app.add_subcommand("scan", "Tabulate a function or a check over a grid as CSV");
    scan->add_option("target", o.target, "Function or check id")->required();
    add_args(scan);
    add_grid(scan);

    CLI::App* decay = app.add_subcommand("decay", "Tabulate riesz_core and fit its decay");
    add_grid(decay);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? kExitOk : kExitUsage;
        }
        if (eval->parsed())
            return cmd_eval(o, out);
        if (verify->parsed())
            return cmd_verify(o, argc, argv, out);
        if (scan->parsed())
            return cmd_scan(o, out);
        return cmd_decay(o, argc, argv, out, err);
    } catch (const Error& e) {
        err << "rieszlab: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "rieszlab: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace rieszlab
