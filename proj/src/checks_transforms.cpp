// Checks on the Riesz-function side: the Fourier/Laplace pair, the cosine
// inversion formula and the three results built on it.
//
// Kernels of the form y^{-1/2} against the Riesz function converge far too
// slowly to integrate as written (the Riesz function itself only decays like
// y^{-3/4} in its oscillating part). They are made absolutely integrable by
// subtracting the bare y^{-1/2} term, which is harmless because
// int_0^inf R(cy) y^{-1/2} dy = Gamma(1/2)/zeta(1) c^{-1/2} = 0 (the integral
// counterpart of sum mu(n)/n = 0).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rieszlab/series.hpp"
#include "rieszlab/specfun.hpp"
#include "check_util.hpp"

namespace rieszlab {

using namespace detail;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// |R(u)| <= sum e^{-u/n^2}/n^2 <= (sqrt(pi)/2 + 1/e)/sqrt(u) for u >= 1.
const double kRieszCrude = 0.5 * std::sqrt(kPi) + std::exp(-1.0);

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

double R(double u, const SeriesConfig& cfg)
{
    return riesz_core(u, cfg).value;
}

// Semi-infinite integral of a Riesz-weighted integrand R(scale*y) g(y),
// capped where riesz_core runs out of head terms. tail(Y) bounds the
// integral beyond Y from |R(u)| = O(u^{-1/2}), which is far too weak near
// the cap, so the smaller of it and the panel extrapolation is charged.
template <typename Tail>
QuadResult riesz_integral(const Integrand& f, double scale, double tol, bool sqrt_sub,
                          const VerifyContext& ctx, Tail&& tail)
{
    SemiInfiniteOptions opts;
    opts.sqrt_substitution = sqrt_sub;
    opts.upper = riesz_core_max_argument(ctx.cfg) / scale;
    opts.budget = ctx.budget;
    QuadResult q = integrate_semi_infinite(f, tol, opts);
    if (q.reached_upper) {
        q.err_estimate += std::min(tail(opts.upper), q.tail_estimate);
        q.converged = q.converged && q.err_estimate <= tol;
    }
    return q;
}

void require_zeros(const VerifyContext& ctx, const char* who)
{
    if (!ctx.zeros || ctx.zeros->empty())
        throw DataError(std::string(who) + ": no zeta zeros table loaded");
}

} // namespace

CheckResult check_eq_2_2(double a, double w, const VerifyContext& ctx)
{
    require(a >= 0.2 && a <= 5.0 && w >= 0.2 && w <= 5.0, "eq_2_2: a and w must lie in [0.2, 5]");
    constexpr double tol = 1e-6;
    CheckResult r = start("eq_2_2", {{"a", a}, {"w", w}});
    const QuadResult q = oscillatory_transform(
        [&](double x) { return delta_exp(x, a, ctx.cfg).value; }, TransformKind::cosine, w, 1e-8, {},
        ctx.budget);
    absorb(r, "transform", q);
    const SeriesValue rhs = lorentz_sum(a, w, ctx.cfg);
    set_sides(r, q.value, rhs.value);
    decide(r, tol, TolKind::abs);
    certify(r, q.err_estimate + rhs.error_bound);
    note(r, "Cosine transform of sum mu(n) e^{-ax/n}/n against sum mu(n) a/(a^2 + (wn)^2).");
    return r;
}

CheckResult check_eq_2_3(double a, double w, const VerifyContext& ctx)
{
    require(a >= 0.2 && a <= 5.0 && w >= 0.2 && w <= 5.0, "eq_2_3: a and w must lie in [0.2, 5]");
    constexpr double tol = 1e-8;
    CheckResult r = start("eq_2_3", {{"a", a}, {"w", w}});
    const double a2 = a * a;
    const double w2 = w * w;
    const QuadResult q = riesz_integral(
        [&](double y) { return R(a2 * y, ctx.cfg) * std::exp(-w2 * y); }, a2, 1e-12, false, ctx,
        [&](double Y) { return kRieszCrude / a * std::exp(-w2 * Y) / (w2 * std::sqrt(Y)); });
    absorb(r, "laplace", q);
    const SeriesValue rhs = lorentz_sum(a, w, ctx.cfg);
    set_sides(r, a * q.value, rhs.value);
    decide(r, tol, TolKind::abs);
    certify(r, a * q.err_estimate + rhs.error_bound);
    note(r, "a int_0^inf R(a^2 y) e^{-w^2 y} dy against sum mu(n) a/(a^2 + (wn)^2).");
    return r;
}

CheckResult check_thm_2_1(double x, double a, const VerifyContext& ctx)
{
    require(x >= 0.25 && x <= 5.0 && a >= 0.25 && a <= 5.0, "thm_2_1: x and a must lie in [0.25, 5]");
    constexpr double tol = 1e-7;
    CheckResult r = start("thm_2_1", {{"x", x}, {"a", a}});
    const SeriesValue d = delta_exp(x, a, ctx.cfg);
    const double lhs = 0.5 * kPi * d.value;

    const double a2 = a * a;
    const double q4 = x * x / 4.0;
    const QuadResult q = riesz_integral(
        [&](double y) { return R(a2 * y, ctx.cfg) * std::expm1(-q4 / y) / std::sqrt(y); }, a2, 1e-11,
        true, ctx, [&](double Y) { return kRieszCrude / a * q4 / Y; });
    absorb(r, "integral", q);
    const double rhs = a * 0.5 * kSqrtPi * q.value;
    set_sides(r, lhs, rhs);

    // The substitution y -> y/a^2 maps (x, a) onto (ax, 1) exactly.
    const double scaled = delta_exp(a * x, 1.0, ctx.cfg).value;
    diag(r, "scaling_diff", d.value - scaled);
    decide(r, tol, TolKind::abs);
    if (d.value != scaled) {
        r.status = CheckStatus::fail;
        note(r, "delta_exp(x, a) differs from delta_exp(ax, 1).");
    }
    certify(r, a * 0.5 * kSqrtPi * q.err_estimate + 0.5 * kPi * d.error_bound);
    note(r, "(pi/2) sum mu(n) e^{-ax/n}/n against a int R(a^2 y)(sqrt(pi)/2) y^{-1/2} e^{-x^2/(4y)} dy,"
            " kernel taken as y^{-1/2}(e^{-x^2/(4y)} - 1).");
    return r;
}

CheckResult check_thm_2_2(double x, double cutoff_T, const VerifyContext& ctx)
{
    require(x >= 2.0 && x <= 10.0, "thm_2_2: x must lie in [2, 10]");
    require(cutoff_T >= 20.0, "thm_2_2: cutoff_T must be at least 20");
    require_zeros(ctx, "thm_2_2");
    CheckResult r = start("thm_2_2", {{"x", x}, {"T", cutoff_T}});

    const double delta = delta_exp(x, 1.0, ctx.cfg).value;
    const ZeroSum f = zero_sum_f(x, *ctx.zeros, ctx.cfg);
    const Integrand g = [&](double t) { return delta_exp(2.0 * kPi * t, 1.0, ctx.cfg).value; };

    auto truncated = [&](double T) {
        CutoffPolicy p;
        p.hard_cutoff = T;
        p.max_panels = 100000;
        return oscillatory_transform(g, TransformKind::sine, x, 1e-9, p, ctx.budget);
    };
    const QuadResult iT = truncated(cutoff_T);
    absorb(r, "integral_T", iT);
    const QuadResult i2T = truncated(2.0 * cutoff_T);
    absorb(r, "integral_2T", i2T);

    const double lhs = delta - f.value;
    set_sides(r, lhs, iT.value);
    diag(r, "delta", delta);
    diag(r, "f", f.value);
    diag(r, "f_imag_residue", f.imag_residue);
    diag(r, "integral_T", iT.value);
    diag(r, "integral_2T", i2T.value);
    diag(r, "residual_T", lhs - iT.value);
    diag(r, "residual_2T", lhs - i2T.value);
    diag(r, "residual_change", (lhs - i2T.value) - (lhs - iT.value));
    diag(r, "best_fit_constant", lhs / iT.value);

    // The full integral, if Wynn acceleration settles within the range
    // delta_exp can reach.
    try {
        const QuadResult full = oscillatory_transform(g, TransformKind::sine, x, 1e-8, {}, ctx.budget);
        if (full.converged) {
            diag(r, "integral_accelerated", full.value);
            diag(r, "integral_accelerated_err", full.err_estimate);
            diag(r, "best_fit_constant_accelerated", lhs / full.value);
        } else {
            note(r, "Accelerated full integral did not converge.");
        }
    } catch (const PrecisionError&) {
        note(r, "Accelerated full integral needs delta_exp beyond the available head.");
    }
    report_only(r);
    note(r, "Delta(x) - f(x) against int_0^T sin(xt) Delta(2 pi t) dt; conditional on RH and simple "
            "zeros, so reported only. The integral comes out near Delta(x)/2.");
    return r;
}

CheckResult check_thm_2_3(double x, const VerifyContext& ctx)
{
    require(x >= 1.5 && x <= 10.0, "thm_2_3: x must lie in [1.5, 10]");
    require_zeros(ctx, "thm_2_3");
    CheckResult r = start("thm_2_3", {{"x", x}});

    const double delta = delta_exp(x, 1.0, ctx.cfg).value;
    const ZeroSum f = zero_sum_f(x, *ctx.zeros, ctx.cfg);
    const double lhs = delta - f.value;

    // x sqrt(y) 1F1(1; 3/2; -x^2 y) = D(x sqrt y); the subtracted 1/(2 x sqrt y)
    // integrates to zero against R.
    auto kernel = [x](double y) {
        const double t = x * std::sqrt(y);
        return dawson(t) - 0.5 / t;
    };
    auto tail = [x](double c) {
        return [x, c](double Y) { return kRieszCrude / std::sqrt(c) / (2.0 * x * x * x) / Y; };
    };

    // As printed: 2 pi int R(2 pi y) sqrt(pi) x y^{1/2} 1F1(1; 3/2; -y x^2) dy.
    const double c_printed = 2.0 * kPi;
    const QuadResult qp = riesz_integral(
        [&](double y) { return R(c_printed * y, ctx.cfg) * kernel(y); }, c_printed, 1e-11, true, ctx,
        tail(c_printed));
    absorb(r, "printed", qp);
    const double rhs_printed = 2.0 * kPi * kSqrtPi * qp.value;

    // Sine transform of the thm_2_1 identity at a = 2 pi:
    // 4 sqrt(pi) int R(4 pi^2 y) D(x sqrt y) dy.
    const double c_re = 4.0 * kPi * kPi;
    const QuadResult qr = riesz_integral(
        [&](double y) { return R(c_re * y, ctx.cfg) * kernel(y); }, c_re, 1e-11, true, ctx, tail(c_re));
    absorb(r, "rederived", qr);
    const double rhs_re = 4.0 * kSqrtPi * qr.value;

    set_sides(r, lhs, rhs_printed);
    diag(r, "delta", delta);
    diag(r, "f", f.value);
    diag(r, "f_imag_residue", f.imag_residue);
    diag(r, "rhs_printed", rhs_printed);
    diag(r, "rhs_rederived", rhs_re);
    diag(r, "ratio_printed", lhs / rhs_printed);
    diag(r, "ratio_rederived", lhs / rhs_re);
    report_only(r);
    note(r, "Delta(x) - f(x) against the printed right side (R(2 pi y), prefactor 2 pi sqrt(pi)) and "
            "against 4 sqrt(pi) int R(4 pi^2 y) D(x sqrt y) dy. Conditional on RH and simple zeros. "
            "The re-derived form carries the same factor 1/2 as the thm_2_2 integral.");
    return r;
}

CheckResult check_thm_2_4(double X, double r_, const VerifyContext& ctx)
{
    require(X >= 1.5 && X <= 100.0, "thm_2_4: X must lie in [1.5, 100]");
    require(r_ >= 1.0 && r_ <= 5.0, "thm_2_4: r must lie in [1, 5]");
    constexpr double tol_series = 1e-7;
    constexpr double tol_closed = 1e-9;
    const double r = r_;
    const double L = std::log(X);
    CheckResult res = start("thm_2_4", {{"X", X}, {"r", r}});

    // (i) (pi/2) sum mu(n)/n L(X, 1/n) with f(x) = e^{-rx}.
    const SeriesValue lap = laplace_truncated(X, r, ctx.cfg);
    const double lhs_series = 0.5 * kPi * lap.value;

    // (ii) nested quadrature of the cosine-formula right side.
    double inner_err = 0.0;
    std::size_t inner_evals = 0;
    bool inner_ok = true;
    const Integrand outer = [&](double x) {
        if (x == 0.0)
            return 0.0;
        const double q4 = x * x / 4.0;
        const QuadResult in = riesz_integral(
            [&](double y) { return R(y, ctx.cfg) * std::expm1(-q4 / y) / std::sqrt(y); }, 1.0, 5e-12, true,
            ctx, [&](double Yc) { return kRieszCrude * q4 / Yc; });
        inner_err = std::max(inner_err, in.err_estimate);
        inner_evals += in.evaluations;
        inner_ok = inner_ok && in.converged;
        return std::exp(-r * x) * 0.5 * kSqrtPi * in.value;
    };
    const QuadResult nested = integrate_finite(outer, 0.0, L, 1e-12, ctx.budget);
    diag(res, "nested_inner_err_max", inner_err);
    diag(res, "nested_inner_evals", static_cast<double>(inner_evals));
    if (!inner_ok)
        throw PrecisionError("thm_2_4: inner quadrature did not converge");
    absorb(res, "nested", nested);
    const double rhs_direct = nested.value;
    const double nested_err = nested.err_estimate + 0.5 * kSqrtPi * inner_err * L;

    // (iii) closed form of the inner x-integral, then one y-integral:
    // int_0^L e^{-rx}(sqrt(pi)/2) y^{-1/2} e^{-x^2/(4y)} dx
    //   = (pi/2) [erfcx(B) - erfcx(A) e^{-rL - L^2/(4y)}], B = r sqrt y, A = B + L/(2 sqrt y),
    // minus the same integral with the Gaussian factor dropped.
    const double bare = 0.5 * kSqrtPi * (-std::expm1(-r * L)) / r;
    const QuadResult closed = riesz_integral(
        [&](double y) {
            const double sy = std::sqrt(y);
            const double B = r * sy;
            const double A = B + L / (2.0 * sy);
            const double k = 0.5 * kPi * (erfcx(B) - erfcx(A) * std::exp(-r * L - L * L / (4.0 * y)));
            return R(y, ctx.cfg) * (k - bare / sy);
        },
        1.0, 5e-12, true, ctx, [&](double Yc) { return kRieszCrude * kSqrtPi / (4.0 * r * r * r * Yc); });
    absorb(res, "closed", closed);
    const double rhs_closed = closed.value;

    set_sides(res, lhs_series, rhs_direct);
    const double closed_resid = std::abs(rhs_direct - rhs_closed);
    diag(res, "lhs_series", lhs_series);
    diag(res, "rhs_direct", rhs_direct);
    diag(res, "rhs_closed", rhs_closed);
    diag(res, "closed_resid", closed_resid);
    diag(res, "closed_tol", tol_closed);
    diag(res, "lhs_series_positive", lhs_series > 0.0 ? 1.0 : 0.0);
    decide(res, tol_series, TolKind::abs);
    certify(res, nested_err + 0.5 * kPi * lap.error_bound);
    if (100.0 * (nested_err + closed.err_estimate) > tol_closed)
        throw PrecisionError("thm_2_4: quadrature errors too large to certify the closed form at 1e-9");
    if (closed_resid > tol_closed) {
        res.status = CheckStatus::fail;
        note(res, "Nested and closed-form right sides disagree beyond 1e-9.");
    }

    // The printed statement, audited rather than asserted.
    const QuadResult printed = riesz_integral(
        [&](double y) {
            const double u = 2.0 * r * y;
            const double v = u + L;
            const double g = erfcx(u) * std::exp(r * r * y - u * u) - erfcx(v) * std::exp(r * r * y - v * v);
            return R(y, ctx.cfg) * g;
        },
        1.0, 1e-12, false, ctx, [](double) { return 0.0; });
    absorb(res, "printed", printed);
    const double printed_lhs = -lhs_series / kPi;  // (1/2) sum mu(n)(X^{-(r+1/n)} - 1)/(rn + 1)
    diag(res, "printed_lhs", printed_lhs);
    diag(res, "printed_rhs_statement", printed.value);
    diag(res, "printed_rhs_proof", 0.5 * kPi * printed.value);
    diag(res, "printed_statement_minus_direct", printed.value - rhs_direct);
    diag(res, "printed_proof_minus_direct", 0.5 * kPi * printed.value - rhs_direct);
    diag(res, "printed_lhs_minus_printed_statement", printed_lhs - printed.value);
    diag(res, "printed_lhs_minus_printed_proof", printed_lhs - 0.5 * kPi * printed.value);
    diag(res, "lhs_series_over_printed_lhs", lhs_series / printed_lhs);
    note(res, "Asserted: (pi/2) sum mu(n)(1 - X^{-(r+1/n)})/(rn+1) equals the nested double integral "
              "(tol 1e-7), and the nested integral equals the closed form built on erf(r sqrt y + log X/(2 sqrt y)) "
              "- erf(r sqrt y) (tol 1e-9). Audited only: the printed form with erf(2y(r + log X/(2y))) - erf(2ry), "
              "prefactor 1/2 and (X^{-(r+1/n)} - 1) on the left; see the printed_* diagnostics.");
    return res;
}

CheckResult check_riesz_decay(std::span<const double> x_grid, const VerifyContext& ctx)
{
    if (x_grid.empty())
        throw ConfigError("riesz_decay: empty grid");
    CheckResult r = start("riesz_decay", {});
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    double envelope = 0.0;
    double prev_x = 0.0, prev_v = 0.0;
    int changes = 0;
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        require(std::isfinite(x) && x > 0.0, "riesz_decay: grid points must be positive");
        const double v = R(x, ctx.cfg);
        r.params.emplace_back("x", x);
        diag(r, key_at("R", x), v);
        if (v != 0.0) {
            const double lx = std::log(x);
            const double ly = std::log(std::abs(v));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        envelope = std::max(envelope, std::abs(v) * std::pow(x, 0.75));
        if (i > 0 && (v < 0.0) != (prev_v < 0.0)) {
            ++changes;
            // Crossing located by linear interpolation in log x.
            const double t = prev_v / (prev_v - v);
            diag(r, "sign_change_" + std::to_string(changes),
                 std::exp(std::log(prev_x) + t * (std::log(x) - std::log(prev_x))));
        }
        prev_x = x;
        prev_v = v;
    }
    const double slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    diag(r, "fitted_slope", slope);
    diag(r, "sign_changes", changes);
    diag(r, "max_abs_R_times_x^0.75", envelope);
    r.lhs = slope;
    r.rhs = -0.75;
    r.abs_resid = std::abs(slope + 0.75);
    r.rel_resid = r.abs_resid / 0.75;
    report_only(r);
    note(r, "Least-squares slope of log|R(x)| against log x; the -3/4 exponent is asymptotic and "
            "not expected at this scale.");
    return r;
}

} // namespace rieszlab
