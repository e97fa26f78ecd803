#include "rieszlab/series.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rieszlab/errors.hpp"
#include "rieszlab/mobius_tail.hpp"
#include "rieszlab/summation.hpp"
#include "format.hpp"

namespace rieszlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kZetaCacheMax = 201;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

const MobiusTail& tail_of(const SeriesConfig& cfg)
{
    if (!cfg.sieve || !cfg.tail)
        throw ConfigError("series config was not built with make_series_config");
    return *cfg.tail;
}

struct TailResult
{
    double value = 0.0;
    double moment_error = 0.0;  // propagated errors of the T_m themselves
    double remainder = 0.0;     // orders past the last one used
};

// sum_m c_m T_m(M) over m = first, first + step, ... The caller picked the
// rung so that |c_m| M^{1-m} shrinks at least geometrically with ratio 1/2,
// so twice the last bound covers everything dropped.
template <typename Coef>
TailResult tail_series(const MobiusTail& tail, std::size_t rung, int first, int step,
                       double stop_below, Coef&& next_coef)
{
    const auto& T = tail.moments(rung);
    const std::uint64_t M = tail.cutoff(rung);
    TailResult out;
    CompensatedSum sum;
    double last = 0.0;
    for (int m = first; m <= MobiusTail::kMaxOrder; m += step) {
        const double c = next_coef(m);
        sum += c * T[m].value;
        out.moment_error += std::abs(c) * T[m].error;
        last = std::abs(c) * MobiusTail::moment_bound(M, m);
        if (last < stop_below)
            break;
    }
    out.value = sum.value();
    out.moment_error += kEps * sum.magnitude();
    out.remainder = 2.0 * last;
    return out;
}

double stop_level(const SeriesConfig& cfg, double scale)
{
    return std::min(cfg.tol * 1e-3, kEps * 1e-3 * std::max(scale, 1e-300));
}

void check_truncation(double bound, const SeriesConfig& cfg, const std::string& who)
{
    if (bound > cfg.tol)
        throw PrecisionError(who + ": truncation bound " + fmt_g(bound) + " exceeds tol " +
                             fmt_g(cfg.tol));
}

// sum mu(n) expm1(-z/n)/n for real z of either sign; shared by delta_exp
// (z = ax) and hprime (z = -log x). Past the head,
// expm1(-z/n)/n = sum_{j>=1} (-z)^j/j! n^{-j-1}.
SeriesValue exp_series(double z, const SeriesConfig& cfg, const std::string& who)
{
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(std::max(8.0 * std::abs(z), 1.0), who.c_str());
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    CompensatedSum head;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double dn = static_cast<double>(n);
            head += mu[n] * std::expm1(-z / dn) / dn;
        }

    double c = 1.0;
    const TailResult t = tail_series(tail, rung, 2, 1, stop_level(cfg, head.magnitude()),
                                     [&](int m) { return c *= -z / (m - 1); });
    check_truncation(t.remainder, cfg, who);

    SeriesValue out;
    out.value = head.value() + t.value;
    out.error_bound = 3.0 * kEps * head.magnitude() + t.moment_error + t.remainder;
    out.terms = M;
    return out;
}

} // namespace

double zeta_int(int k)
{
    if (k < 2)
        throw DomainError("zeta_int: k must be at least 2");
    static const std::array<double, kZetaCacheMax + 1> table = [] {
        std::array<double, kZetaCacheMax + 1> z{};
        for (int j = 2; j <= kZetaCacheMax; ++j)
            z[j] = zeta_real(j);
        return z;
    }();
    if (k <= kZetaCacheMax)
        return table[k];
    return 1.0 + std::pow(2.0, -k);
}

SeriesValue gram_H(double x, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x >= 1.0, "gram_H: x must be >= 1");
    const double L = std::log(x);
    CompensatedSum sum;
    sum += 1.0;
    double p = 1.0;  // L^n / n!
    double term = 0.0;
    std::size_t n = 1;
    for (;; ++n) {
        if (n > cfg.max_terms)
            throw PrecisionError("gram_H: no convergence within max_terms");
        p *= L / n;
        term = p / (n * zeta_int(static_cast<int>(n + 1)));
        sum += term;
        // Past n = 2L consecutive terms shrink by at least half.
        if (n >= 2.0 * L && term < cfg.tol * 1e-2)
            break;
    }
    return {sum.value(), term + 2.0 * kEps * sum.magnitude(), n};
}

SeriesValue gram_H_double(double x, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x > 2.0, "gram_H_double: x must be > 2");
    const double a = std::numbers::ln2;
    const double b = std::log(x / 2.0);
    std::vector<double> A{1.0};  // a^k / k!
    std::vector<double> B{1.0};  // b^j / j!
    CompensatedSum sum;
    sum += 1.0;
    double term = 0.0;
    std::size_t n = 1;
    for (;; ++n) {
        if (n > cfg.max_terms)
            throw PrecisionError("gram_H_double: no convergence within max_terms");
        A.push_back(A.back() * a / n);
        B.push_back(B.back() * b / n);
        CompensatedSum inner;
        for (std::size_t k = 0; k <= n; ++k)
            inner += A[k] * B[n - k];
        term = inner.value() / (n * zeta_int(static_cast<int>(n + 1)));
        sum += term;
        if (n >= 2.0 * (a + b) && term < cfg.tol * 1e-2)
            break;
    }
    return {sum.value(), term + 4.0 * kEps * sum.magnitude(), n};
}

SeriesValue hprime(double x, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x > 1.0, "hprime: x must be > 1");
    const double L = std::log(x);
    require(L >= 1e-9, "hprime: log x below 1e-9");
    SeriesValue s = exp_series(-L, cfg, "hprime(" + fmt_g(x) + ")");
    const double scale = 1.0 / (x * L);
    return {s.value * scale, s.error_bound * scale, s.terms};
}

SeriesValue delta_exp(double x, double a, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x >= 0.0, "delta_exp: x must be >= 0");
    require(std::isfinite(a) && a > 0.0, "delta_exp: a must be > 0");
    return exp_series(a * x, cfg, "delta_exp(" + fmt_g(x) + ", " + fmt_g(a) + ")");
}

SeriesValue riesz_core(double x, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x >= 0.0, "riesz_core: x must be >= 0");
    const std::string who = "riesz_core(" + fmt_g(x) + ")";
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(std::max(8.0 * std::sqrt(x), 1.0), who.c_str());
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    CompensatedSum head;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double n2 = static_cast<double>(n) * static_cast<double>(n);
            head += mu[n] * std::exp(-x / n2) / n2;
        }

    // e^{-x/n^2}/n^2 = sum_j (-x)^j/j! n^{-2j-2}
    double c = 1.0;
    const TailResult t = tail_series(tail, rung, 2, 2, stop_level(cfg, head.magnitude()), [&](int m) {
        if (m > 2)
            c *= -x / ((m - 2) / 2);
        return c;
    });
    check_truncation(t.remainder, cfg, who);
    return {head.value() + t.value, 3.0 * kEps * head.magnitude() + t.moment_error + t.remainder, M};
}

double riesz_core_max_argument(const SeriesConfig& cfg)
{
    const double M = static_cast<double>(tail_of(cfg).max_cutoff());
    return (M / 8.0) * (M / 8.0);
}

double delta_exp_max_argument(const SeriesConfig& cfg)
{
    return static_cast<double>(tail_of(cfg).max_cutoff()) / 8.0;
}

SeriesValue lorentz_sum(double a, double w, const SeriesConfig& cfg)
{
    require(std::isfinite(a) && a > 0.0, "lorentz_sum: a must be > 0");
    require(std::isfinite(w) && w > 0.0, "lorentz_sum: w must be > 0");
    const std::string who = "lorentz_sum(" + fmt_g(a) + ", " + fmt_g(w) + ")";
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(std::max(8.0 * a / w, 1.0), who.c_str());
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    CompensatedSum head;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double wn = w * static_cast<double>(n);
            head += mu[n] * a / (a * a + wn * wn);
        }

    // a/(a^2 + w^2 n^2) = sum_j (-1)^j a^{2j+1} w^{-2j-2} n^{-2j-2}
    const double r2 = (a / w) * (a / w);
    double c = a / (w * w);
    const TailResult t = tail_series(tail, rung, 2, 2, stop_level(cfg, head.magnitude()), [&](int m) {
        if (m > 2)
            c *= -r2;
        return c;
    });
    check_truncation(t.remainder, cfg, who);
    return {head.value() + t.value, 3.0 * kEps * head.magnitude() + t.moment_error + t.remainder, M};
}

SeriesValue mobius_reciprocal_constant(const SeriesConfig& cfg)
{
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(8.0, "mobius_reciprocal_constant");
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    CompensatedSum head;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double dn = static_cast<double>(n);
            head += mu[n] / (dn * (dn + 1.0));
        }

    // 1/(n(n+1)) = sum_k (-1)^k n^{-k-2}
    double c = -1.0;
    const TailResult t = tail_series(tail, rung, 2, 1, stop_level(cfg, head.magnitude()),
                                     [&](int) { return c = -c; });
    check_truncation(t.remainder, cfg, "mobius_reciprocal_constant");
    return {-(head.value() + t.value), 2.0 * kEps * head.magnitude() + t.moment_error + t.remainder, M};
}

SeriesValue mobius_power_sum(double X, const SeriesConfig& cfg)
{
    require(std::isfinite(X) && X > 1.0, "mobius_power_sum: X must be > 1");
    const std::string who = "mobius_power_sum(" + fmt_g(X) + ")";
    const double L = std::log(X);
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(std::max(8.0 * L, 8.0), who.c_str());
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    CompensatedSum head;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double dn = static_cast<double>(n);
            head += mu[n] * std::expm1(L / dn) / (dn + 1.0);
        }

    // expm1(L/n)/(n+1) = sum_{m>=2} c_m n^{-m}, c_2 = L, c_{m+1} = L^m/m! - c_m.
    double p = L;  // L^{m-1}/(m-1)!
    double c = 0.0;
    const TailResult t = tail_series(tail, rung, 2, 1, stop_level(cfg, head.magnitude()) / X, [&](int m) {
        if (m > 2)
            p *= L / (m - 1);
        c = p - c;
        return c;
    });
    check_truncation(X * t.remainder, cfg, who);

    const SeriesValue C = mobius_reciprocal_constant(cfg);
    const double S2 = head.value() + t.value;
    SeriesValue out;
    out.value = (X - 1.0) * C.value + X * S2;
    out.error_bound = (X - 1.0) * C.error_bound +
                      X * (3.0 * kEps * head.magnitude() + t.moment_error + t.remainder) +
                      2.0 * kEps * std::abs(out.value);
    out.terms = M;
    return out;
}

SeriesValue laplace_truncated(double X, double r, const SeriesConfig& cfg)
{
    require(std::isfinite(X) && X > 1.0, "laplace_truncated: X must be > 1");
    require(std::isfinite(r) && r > 0.0, "laplace_truncated: r must be > 0");
    const std::string who = "laplace_truncated(" + fmt_g(X) + ", " + fmt_g(r) + ")";
    const double L = std::log(X);
    const MobiusTail& tail = tail_of(cfg);
    const std::size_t rung = tail.select(std::max(8.0 * L, 8.0), who.c_str());
    const std::uint64_t M = tail.cutoff(rung);
    const auto mu = cfg.tables().mu_table();

    const double base = -std::expm1(-r * L) / r;  // int_0^L e^{-rx} dx
    CompensatedSum head;
    double head_round = 0.0;
    for (std::uint64_t n = 1; n <= M; ++n)
        if (mu[n] != 0) {
            const double dn = static_cast<double>(n);
            const double A = r + 1.0 / dn;
            const double shifted = -std::expm1(-A * L) / A;
            head += mu[n] * (shifted - base) / dn;
            head_round += (std::abs(shifted) + base) / dn;
        }

    // (1/n) int_0^L e^{-rx}(e^{-x/n} - 1) dx = sum_{j>=1} (-1)^j g_j n^{-j-1} with
    // g_j = int_0^L x^j e^{-rx} dx / j! = r^{-j-1} e^{-z} sum_{k>j} z^k/k!, z = rL.
    const double z = r * L;
    auto upper_poisson = [z](int j) {
        CompensatedSum q;
        for (int k = j + 1; k < j + 400; ++k) {
            const double t = std::exp(k * std::log(z) - z - std::lgamma(k + 1.0));
            q += t;
            if (k > z && t < 1e-18 * q.value())
                break;
        }
        return q.value();
    };
    const TailResult t = tail_series(tail, rung, 2, 1, stop_level(cfg, head.magnitude()), [&](int m) {
        const int j = m - 1;
        const double g = upper_poisson(j) / std::pow(r, j + 1);
        return (j % 2 == 0 ? 1.0 : -1.0) * g;
    });
    check_truncation(t.remainder, cfg, who);
    return {head.value() + t.value, 4.0 * kEps * head_round + t.moment_error + t.remainder, M};
}

SeriesValue incgamma_series(double s, const SeriesConfig& cfg, IncGammaForm form)
{
    require(std::isfinite(s) && s > 1.0, "incgamma_series: s must be > 1");
    const double x = s * std::numbers::ln2;
    const double two_s = std::exp2(-s);
    CompensatedSum sum;
    double q = 1.0 / s;       // s^{-n-1}
    double poisson = 1.0;     // sum_{k<=n} x^k/k!
    double power = 1.0;       // x^n/n!
    double rest = 0.0;
    std::size_t n = 1;
    for (;; ++n) {
        if (n > cfg.max_terms || (form == IncGammaForm::incomplete_gamma && n > 170))
            throw PrecisionError("incgamma_series(" + fmt_g(s) + "): no convergence");
        q /= s;
        power *= x / n;
        poisson += power;
        const double z = zeta_int(static_cast<int>(n + 1));
        double term = 0.0;
        if (form == IncGammaForm::finite_sum) {
            term = q / (n * z) * (two_s * poisson);
        } else {
            const double g = upper_incomplete_gamma_int(static_cast<int>(n), x);
            term = q * g / (n * std::tgamma(n + 1.0) * z);
        }
        sum += term;
        // e^{-x} sum_{k<=m} x^k/k! <= 1, so later terms are below s^{-m-1}/m.
        rest = q / (s * (n + 1) * (1.0 - 1.0 / s));
        if (rest < cfg.tol * 1e-2)
            break;
    }
    return {sum.value(), rest + 4.0 * kEps * sum.magnitude(), n};
}

SeriesValue incgamma_diagonal(double s, const SeriesConfig& cfg)
{
    require(std::isfinite(s) && s > 1.0, "incgamma_diagonal: s must be > 1");
    const double x = s * std::numbers::ln2;
    const double two_s = std::exp2(-s);
    CompensatedSum sum;
    double q = 1.0 / s;
    double power = 1.0;
    double term = 0.0;
    std::size_t n = 1;
    for (;; ++n) {
        if (n > cfg.max_terms)
            throw PrecisionError("incgamma_diagonal(" + fmt_g(s) + "): no convergence");
        q /= s;
        power *= x / n;
        term = two_s * q * power / (n * zeta_int(static_cast<int>(n + 1)));
        sum += term;
        if (n >= 2.0 * x && term < cfg.tol * 1e-2)
            break;
    }
    return {sum.value(), term + 2.0 * kEps * sum.magnitude(), n};
}

Complex zero_sum_term(double x, Complex rho)
{
    const Complex num = std::exp(-rho * std::log(x));
    const Complex den = std::cos(std::numbers::pi * rho / 2.0) * zeta_prime(rho);
    return std::numbers::pi / 2.0 * num / den;
}

ZeroSum zero_sum_f(double x, std::span<const ZetaZero> zeros, const SeriesConfig& cfg)
{
    require(std::isfinite(x) && x > 1.0, "zero_sum_f: x must be > 1");
    if (zeros.empty())
        throw DataError("zero_sum_f: empty zeros table");
    CompensatedSum re;
    CompensatedSum im;
    double last = 0.0;
    for (const ZetaZero& z : zeros) {
        const Complex a = zero_sum_term(x, {0.5, z.t});
        const Complex b = zero_sum_term(x, {0.5, -z.t});
        re += a.real();
        re += b.real();
        im += a.imag();
        im += b.imag();
        last = std::abs(a) + std::abs(b);
    }
    ZeroSum out;
    out.value = re.value();
    out.imag_residue = im.value();
    out.error_bound = last + 1e-9 * re.magnitude();  // zeta' is good to ~1e-9 relative
    out.terms = zeros.size();
    if (!(std::abs(out.imag_residue) < 1e-13))
        throw PrecisionError("zero_sum_f: imaginary residue " + fmt_g(out.imag_residue) +
                             " after conjugate pairing");
    (void)cfg;
    return out;
}

} // namespace rieszlab
