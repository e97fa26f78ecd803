#pragma once

#include <complex>

namespace rieszlab {

using Complex = std::complex<double>;

// Riemann zeta for real s >= 1 + 1e-6 (Euler-Maclaurin, relative error ~1e-15).
double zeta_real(double s);

// zeta(s) for 0 < Re s <= 10, |Im s| <= 120, s != 1.
Complex zeta_complex(Complex s);

// zeta'(s) on the same domain, from the term-wise differentiated expansion.
Complex zeta_prime(Complex s);

// Gamma(n+1, x) = n! e^{-x} sum_{k<=n} x^k/k!, for 0 <= n <= 170 and x >= 0.
double upper_incomplete_gamma_int(int n, double x);

// Ei(-x) = -E1(x) for x > 0. Negative; RangeError once it underflows (x > 700).
double expint_ei_neg(double x);

double erf(double x);

// exp(x^2) erfc(x), for x >= 0.
double erfcx(double x);

// Dawson's integral D(t) = exp(-t^2) int_0^t exp(u^2) du.
double dawson(double t);

// 1F1(1; 3/2; -z) for z >= 0, which equals D(sqrt z)/sqrt z.
double kummer_1f1_half(double z);

namespace detail {

// The two branches of E1 that meet at x = 2; exposed for the seam test.
double e1_series(double x);
double e1_continued_fraction(double x);

} // namespace detail

} // namespace rieszlab
