#include "rieszlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

#include "rieszlab/errors.hpp"
#include "check_util.hpp"

namespace rieszlab {

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
    case CheckStatus::report_only: return "REPORT_ONLY";
    }
    return "?";
}

std::string_view to_string(TolKind k)
{
    switch (k) {
    case TolKind::abs: return "abs";
    case TolKind::rel: return "rel";
    case TolKind::none: return "none";
    }
    return "?";
}

namespace {

using Runner = std::function<CheckResult(std::span<const double>, const VerifyContext&)>;

Runner point1(CheckResult (*fn)(double, const VerifyContext&))
{
    return [fn](std::span<const double> p, const VerifyContext& ctx) { return fn(p[0], ctx); };
}

Runner point2(CheckResult (*fn)(double, double, const VerifyContext&))
{
    return [fn](std::span<const double> p, const VerifyContext& ctx) { return fn(p[0], p[1], ctx); };
}

Runner grid(CheckResult (*fn)(std::span<const double>, const VerifyContext&))
{
    return [fn](std::span<const double> p, const VerifyContext& ctx) { return fn(p, ctx); };
}

std::vector<std::vector<double>> singles(std::initializer_list<double> xs)
{
    std::vector<std::vector<double>> out;
    for (double x : xs)
        out.push_back({x});
    return out;
}

std::vector<double> geometric(double start, double stop, int points)
{
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = start * std::pow(stop / start, static_cast<double>(i) / (points - 1));
    g.front() = start;
    g.back() = stop;
    return g;
}

std::vector<CheckSpec> build_registry()
{
    const double e = std::numbers::e;
    const std::vector<std::vector<double>> aw = {{1, 1}, {2, 0.5}, {0.2, 5}, {3, 1}, {1, 3}};
    std::vector<CheckSpec> r;
    r.push_back({"eq_1_3", "prime sum p log p vs Mobius power series (approximation)", {"X"}, false,
                 singles({10, 100, 1e3, 1e4, 1e5, 1e6}), {"prime_sum_plogp"}, {"mobius_power_sum"}, "",
                 point1(check_eq_1_3)});
    r.push_back({"eq_1_4", "Titchmarsh: log zeta(s)/s - omega(s) = P(s)/s", {"s"}, false,
                 singles({1.5, 2, 3, 5, 10}), {"zeta_real", "omega_small"}, {"prime_zeta"}, "",
                 point1(check_eq_1_4)});
    r.push_back({"eq_1_5", "P(s)/s vs incomplete-gamma series within 10|Ei(-(s-1/2)log 2)|", {"s"}, false,
                 singles({2, 3, 4, 5}), {"prime_zeta"}, {"incgamma_series", "expint_ei_neg"}, "",
                 point1(check_eq_1_5)});
    r.push_back({"eq_1_5_trend", "|D(s)| of eq_1_5 decreasing in s", {"s_grid"}, true, {{2, 3, 4, 5}},
                 {"prime_zeta"}, {"incgamma_series"}, "", grid(check_eq_1_5_trend)});
    r.push_back({"eq_1_6", "finite-sum vs Gamma(n+1,x) form of the incomplete-gamma series", {"s"}, false,
                 singles({1.5, 2, 5}), {"incgamma_finite_sum"},
                 {"incgamma_gamma_form", "upper_incomplete_gamma_int"}, "", point1(check_eq_1_6)});
    r.push_back({"eq_2_2", "cosine transform of Delta vs Lorentzian Mobius sum", {"a", "w"}, false, aw,
                 {"delta_exp", "oscillatory_transform"}, {"lorentz_sum"}, "", point2(check_eq_2_2)});
    r.push_back({"eq_2_3", "Laplace transform of the Riesz function vs Lorentzian Mobius sum", {"a", "w"},
                 false, aw, {"riesz_core", "integrate_semi_infinite"}, {"lorentz_sum"}, "",
                 point2(check_eq_2_3)});
    r.push_back({"gram_collapse", "double-sum form of the Gram series vs H(x)", {"x"}, false,
                 singles({2.5, 3, 10, 100, 1e6}), {"gram_H_double"}, {"gram_H"}, "",
                 point1(check_gram_collapse)});
    r.push_back({"gram_error", "|pi(x) - H(x)| <= 3 sqrt(x)/log x", {"x_grid"}, true, {{1e3, 1e4, 1e5, 1e6}},
                 {"prime_count"}, {"gram_H"}, "", grid(check_gram_error)});
    r.push_back({"j_vs_gram", "|J(x) - H(x)| scan", {"x_grid"}, true, {{1e3, 1e4, 1e5, 1e6}},
                 {"riemann_j"}, {"gram_H"}, "", grid(check_j_vs_gram)});
    r.push_back({"prime_zeta_asymptotic", "P(s) ~ 2^{-s} + s * incgamma_series(s)", {"s"}, false,
                 singles({5, 10, 20}), {"prime_zeta"}, {"incgamma_series"}, "",
                 point1(check_prime_zeta_asymptotic)});
    r.push_back({"riesz_decay", "decay of the Riesz function (fitted slope)", {"x_grid"}, true,
                 {geometric(10, 1e6, 41)}, {"riesz_core"}, {}, "", grid(check_riesz_decay)});
    r.push_back({"thm_2_1", "(pi/2) Delta(ax) vs Riesz integral with Gaussian kernel", {"x", "a"}, false,
                 {{1, 1}, {2, 1}, {1, 2}, {0.5, 3}}, {"delta_exp"}, {"riesz_core", "integrate_semi_infinite"},
                 "", point2(check_thm_2_1)});
    r.push_back({"thm_2_2", "Fredholm equation Delta = f + sine transform (conditional)", {"x", "T"}, false,
                 {{2, 50}, {5, 50}, {10, 50}}, {"delta_exp", "zero_sum_f"},
                 {"delta_exp", "oscillatory_transform"},
                 "the unknown function Delta appears on both sides of the integral equation",
                 point2(check_thm_2_2)});
    r.push_back({"thm_2_3", "Delta - f vs Riesz integral with 1F1 kernel (conditional)", {"x"}, false,
                 singles({1.5, 2, 3, 5, 10}), {"delta_exp", "zero_sum_f"},
                 {"riesz_core", "dawson", "integrate_semi_infinite"}, "", point1(check_thm_2_3)});
    r.push_back({"thm_2_4", "truncated Laplace series vs nested and closed-form Riesz integrals",
                 {"X", "r"}, false, {{e, 1}, {10, 1}, {e, 2}, {10, 2}}, {"laplace_truncated"},
                 {"riesz_core", "integrate_semi_infinite", "integrate_finite", "erfcx"}, "",
                 point2(check_thm_2_4)});
    std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    return r;
}

double parse_number(std::string_view tok)
{
    while (!tok.empty() && tok.front() == ' ')
        tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ')
        tok.remove_suffix(1);
    if (tok == "e")
        return std::numbers::e;
    if (tok == "pi")
        return std::numbers::pi;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
        throw ConfigError("not a number: '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

CheckResult inconclusive(const CheckSpec& spec, std::span<const double> point, const std::string& why)
{
    CheckResult r;
    r.id = spec.id;
    if (spec.grid) {
        for (double v : point)
            r.params.emplace_back(spec.param_names[0] == "s_grid" ? "s" : "x", v);
    } else {
        for (std::size_t i = 0; i < point.size(); ++i)
            r.params.emplace_back(spec.param_names[i], point[i]);
    }
    r.lhs = r.rhs = std::nan("");
    r.abs_resid = r.rel_resid = std::nan("");
    r.status = CheckStatus::inconclusive;
    r.notes = why;
    return r;
}

// Least-squares constant c with lhs ~ c * rhs across a check's grid.
void add_grid_fit(std::vector<CheckResult>& results, const std::string& id, const std::string& rhs_key,
                  const std::string& out_key)
{
    double num = 0.0, den = 0.0;
    std::vector<CheckResult*> members;
    for (auto& r : results) {
        if (r.id != id || r.status == CheckStatus::inconclusive)
            continue;
        double rhs = r.rhs;
        if (!rhs_key.empty()) {
            const auto it = std::find_if(r.diagnostics.begin(), r.diagnostics.end(),
                                         [&](const auto& kv) { return kv.first == rhs_key; });
            if (it == r.diagnostics.end())
                continue;
            rhs = it->second;
        }
        num += r.lhs * rhs;
        den += rhs * rhs;
        members.push_back(&r);
    }
    if (members.size() < 2 || den == 0.0)
        return;
    for (CheckResult* r : members)
        detail::diag(*r, out_key, num / den);
}

} // namespace

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

const CheckSpec& find_check(std::string_view id)
{
    for (const auto& spec : check_registry())
        if (spec.id == id)
            return spec;
    throw ConfigError("unknown check id '" + std::string(id) + "'");
}

std::vector<std::vector<double>> parse_points(const CheckSpec& spec, std::string_view text)
{
    std::vector<std::vector<double>> points;
    if (spec.grid) {
        std::vector<double> g;
        for (auto tok : split(text, ':'))
            for (auto t2 : split(tok, ','))
                g.push_back(parse_number(t2));
        points.push_back(std::move(g));
        return points;
    }
    for (auto p : split(text, ',')) {
        std::vector<double> point;
        for (auto tok : split(p, ':'))
            point.push_back(parse_number(tok));
        if (point.size() != spec.param_names.size())
            throw ConfigError(spec.id + ": each point needs " + std::to_string(spec.param_names.size()) +
                              " value(s) separated by ':'");
        points.push_back(std::move(point));
    }
    return points;
}

std::vector<CheckResult> run_all(const std::vector<std::string>& ids, const VerifyContext& ctx,
                                 const PointOverrides& overrides, unsigned threads)
{
    std::vector<const CheckSpec*> selected;
    const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
    if (all) {
        for (const auto& spec : check_registry())
            selected.push_back(&spec);
    } else {
        for (const auto& id : ids) {
            const CheckSpec* spec = &find_check(id);
            if (std::find(selected.begin(), selected.end(), spec) == selected.end())
                selected.push_back(spec);
        }
    }
    if (selected.empty())
        throw ConfigError("no checks selected");

    std::map<std::string, std::vector<std::vector<double>>> custom;
    for (const auto& [id, text] : overrides)
        custom[id] = parse_points(find_check(id), text);

    struct Task
    {
        const CheckSpec* spec;
        std::vector<double> point;
    };
    std::vector<Task> tasks;
    for (const CheckSpec* spec : selected) {
        const auto it = custom.find(spec->id);
        const auto& points = it != custom.end() ? it->second : spec->default_points;
        for (const auto& p : points)
            tasks.push_back({spec, p});
    }
    std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
        if (a.spec->id != b.spec->id)
            return a.spec->id < b.spec->id;
        return a.point < b.point;
    });

    std::vector<CheckResult> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            try {
                results[i] = t.spec->run(t.point, ctx);
            } catch (const PrecisionError& e) {
                results[i] = inconclusive(*t.spec, t.point, e.what());
            } catch (const RangeError& e) {
                results[i] = inconclusive(*t.spec, t.point, e.what());
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    add_grid_fit(results, "thm_2_2", "", "best_fit_constant_grid");
    add_grid_fit(results, "thm_2_3", "rhs_printed", "best_fit_constant_printed_grid");
    add_grid_fit(results, "thm_2_3", "rhs_rederived", "best_fit_constant_rederived_grid");
    return results;
}

Summary summarize(std::span<const CheckResult> results)
{
    Summary s;
    for (const auto& r : results) {
        switch (r.status) {
        case CheckStatus::pass: ++s.pass; break;
        case CheckStatus::fail: ++s.fail; break;
        case CheckStatus::inconclusive: ++s.inconclusive; break;
        case CheckStatus::report_only: ++s.report_only; break;
        }
    }
    return s;
}

} // namespace rieszlab
