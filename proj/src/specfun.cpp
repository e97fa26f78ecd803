#include "rieszlab/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rieszlab/errors.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k)! for k = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

int head_length(double imag)
{
    return std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(imag))));
}

// Euler-Maclaurin for zeta and, when want_derivative, zeta'. Works for any
// scalar type T in {double, Complex}.
template <typename T>
T euler_maclaurin(T s, int N, bool want_derivative)
{
    T sum{0};
    for (int n = N - 1; n >= 1; --n) {
        const double log_n = std::log(static_cast<double>(n));
        const T term = std::exp(-s * log_n);
        sum += want_derivative ? -log_n * term : term;
    }

    const double log_N = std::log(static_cast<double>(N));
    const T N_pow = std::exp(-s * log_N);  // N^{-s}
    const T one{1};
    if (!want_derivative) {
        sum += N_pow * static_cast<double>(N) / (s - one) + N_pow / 2.0;
    } else {
        const T lead = N_pow * static_cast<double>(N);  // N^{1-s}
        sum += -log_N * lead / (s - one) - lead / ((s - one) * (s - one)) - log_N * N_pow / 2.0;
    }

    // Correction terms c_k P_k(s) N^{-s-2k+1}, P_k(s) = s (s+1) ... (s+2k-2).
    T poly = s;        // P_1
    T poly_diff = one; // P_1'
    T scale = N_pow / static_cast<double>(N);
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
        const double c = kBernoulliOverFactorial[k];
        sum += want_derivative ? c * scale * (poly_diff - log_N * poly) : c * scale * poly;
        for (int j = 0; j < 2; ++j) {
            const T factor = s + static_cast<double>(2 * k + 1 + j);
            poly_diff = poly_diff * factor + poly;
            poly *= factor;
        }
        scale /= static_cast<double>(N) * N;
    }
    return sum;
}

void check_complex_domain(Complex s, const char* fn)
{
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError(std::string(fn) + ": argument is not finite");
    if (!(s.real() > 0.0 && s.real() <= 10.0 && std::abs(s.imag()) <= 120.0))
        throw RangeError(std::string(fn) + ": need 0 < Re s <= 10 and |Im s| <= 120");
    if (s == Complex{1.0, 0.0})
        throw RangeError(std::string(fn) + ": pole at s = 1");
}

Complex finite_or_throw(Complex v, const char* fn)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw RangeError(std::string(fn) + ": result is not finite");
    return v;
}

} // namespace

double zeta_real(double s)
{
    if (std::isnan(s))
        throw DomainError("zeta_real: s is NaN");
    if (!(s >= 1.0 + 1e-6))
        throw RangeError("zeta_real: s must be at least 1 + 1e-6");
    if (s > 60.0)
        return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);  // remaining terms < 4^{-60}
    return euler_maclaurin<double>(s, 20, false);
}

Complex zeta_complex(Complex s)
{
    check_complex_domain(s, "zeta_complex");
    return finite_or_throw(euler_maclaurin<Complex>(s, head_length(s.imag()), false), "zeta_complex");
}

Complex zeta_prime(Complex s)
{
    check_complex_domain(s, "zeta_prime");
    return finite_or_throw(euler_maclaurin<Complex>(s, head_length(s.imag()), true), "zeta_prime");
}

double upper_incomplete_gamma_int(int n, double x)
{
    if (n < 0 || n > 170)
        throw RangeError("upper_incomplete_gamma_int: n must lie in [0, 170]");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw DomainError("upper_incomplete_gamma_int: x must be finite and nonnegative");

    // Poisson weights e^{-x} x^k / k!, built by recurrence unless e^{-x}
    // would underflow.
    CompensatedSum sum;
    if (x < 700.0) {
        double w = std::exp(-x);
        sum += w;
        for (int k = 1; k <= n; ++k) {
            w *= x / k;
            sum += w;
        }
    } else {
        const double log_x = std::log(x);
        for (int k = 0; k <= n; ++k)
            sum += std::exp(k * log_x - x - std::lgamma(k + 1.0));
    }
    return std::tgamma(n + 1.0) * sum.value();
}

namespace detail {

double e1_series(double x)
{
    CompensatedSum sum;
    double term = 1.0;  // (-1)^{k+1} x^k / k! without the 1/k
    for (int k = 1; k < 200; ++k) {
        term *= (k == 1 ? x : -x / k);
        const double t = term / k;
        sum += t;
        if (std::abs(t) < kEps * 1e-3 * std::abs(sum.value()))
            break;
    }
    return -std::numbers::egamma - std::log(x) + sum.value();
}

double e1_continued_fraction(double x)
{
    // Modified Lentz on E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))).
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    return h * std::exp(-x);
}

} // namespace detail

double expint_ei_neg(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("expint_ei_neg: x must be positive and finite");
    if (x > 700.0)
        throw RangeError("expint_ei_neg: underflow for x > 700");
    return x <= 2.0 ? -detail::e1_series(x) : -detail::e1_continued_fraction(x);
}

double erf(double x)
{
    return std::erf(x);
}

double erfcx(double x)
{
    if (!(x >= 0.0) || !std::isfinite(x))
        throw DomainError("erfcx: x must be finite and nonnegative");
    if (x < 5.0)
        return std::exp(x * x) * std::erfc(x);
    // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int i = 1; i < 500; ++i) {
        const double a = 0.5 * i;
        d = x + a * d;
        d = d == 0.0 ? 1.0 / tiny : 1.0 / d;
        c = x + a / c;
        const double del = c * d;
        f *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

double dawson(double t)
{
    if (std::isnan(t))
        throw DomainError("dawson: t is NaN");
    if (t < 0.0)
        return -dawson(-t);
    const double t2 = t * t;
    if (t < 0.2) {
        // sum (-1)^n 2^n t^{2n+1} / (2n+1)!!
        double term = t;
        double sum = t;
        for (int n = 0; n < 40; ++n) {
            term *= -2.0 * t2 / (2 * n + 3);
            sum += term;
            if (std::abs(term) < kEps * 1e-2 * sum)
                break;
        }
        return sum;
    }
    if (t < 7.0) {
        // e^{-t^2} sum t^{2n+1} / (n! (2n+1)), all terms positive.
        double a = t;
        CompensatedSum sum;
        for (int n = 0; n < 400; ++n) {
            const double term = a / (2 * n + 1);
            sum += term;
            if (n > t2 && term < kEps * 1e-2 * sum.value())
                break;
            a *= t2 / (n + 1);
        }
        return std::exp(-t2) * sum.value();
    }
    // Asymptotic: (1/(2t)) sum_k (2k-1)!! / (2t^2)^k, cut at the smallest term.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double next = term * (2 * k + 1) / (2.0 * t2);
        if (next >= term || next < kEps * 1e-2)
            break;
        term = next;
        sum += term;
    }
    return sum / (2.0 * t);
}

double kummer_1f1_half(double z)
{
    if (!(z >= 0.0) || !std::isfinite(z))
        throw DomainError("kummer_1f1_half: z must be finite and nonnegative");
    if (z < 1e-4) {
        // sum (-z)^n / (3/2)_n
        double term = 1.0;
        double sum = 1.0;
        for (int n = 0; n < 10; ++n) {
            term *= -z / (1.5 + n);
            sum += term;
        }
        return sum;
    }
    const double t = std::sqrt(z);
    return dawson(t) / t;
}

} // namespace rieszlab
