#pragma once

#include <span>

#include "rieszlab/series_config.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/zeros.hpp"

namespace rieszlab {

// zeta(k) for integer k >= 2; tabulated once up to k = 201, beyond that
// 1 + 2^{-k} (error below 3^{-k}).
double zeta_int(int k);

// Gram series H(x) = 1 + sum_n (log x)^n / (n n! zeta(n+1)), x >= 1.
SeriesValue gram_H(double x, const SeriesConfig& cfg);

// The same function as the double sum over (log 2)^k (log(x/2))^{n-k},
// evaluated term by term without collapsing the inner binomial sum. x > 2.
SeriesValue gram_H_double(double x, const SeriesConfig& cfg);

// (1/(x log x)) sum mu(n) (x^{1/n} - 1)/n, x > 1.
SeriesValue hprime(double x, const SeriesConfig& cfg);

// sum mu(n) (e^{-ax/n} - 1)/n, which equals sum mu(n) e^{-ax/n}/n.
SeriesValue delta_exp(double x, double a, const SeriesConfig& cfg);

// sum mu(n) e^{-x/n^2}/n^2, x >= 0.
SeriesValue riesz_core(double x, const SeriesConfig& cfg);

// Largest x that riesz_core accepts under cfg.
double riesz_core_max_argument(const SeriesConfig& cfg);

// Largest a*x that delta_exp accepts under cfg.
double delta_exp_max_argument(const SeriesConfig& cfg);

// sum mu(n) a/(a^2 + (wn)^2), a, w > 0.
SeriesValue lorentz_sum(double a, double w, const SeriesConfig& cfg);

// C = sum mu(n)/(n+1) = -sum mu(n)/(n(n+1)).
SeriesValue mobius_reciprocal_constant(const SeriesConfig& cfg);

// sum mu(n) (X^{1+1/n} - 1)/(n+1), X > 1, via (X-1) C + X sum mu(n)(X^{1/n}-1)/(n+1).
SeriesValue mobius_power_sum(double X, const SeriesConfig& cfg);

// sum mu(n)/n int_0^{log X} e^{-rx} (e^{-x/n} - 1) dx, X > 1, r > 0: the
// truncated Laplace transform of f(x) = e^{-rx} summed against mu(n)/n. Equal
// to sum mu(n) (1 - X^{-(r+1/n)})/(rn + 1), which converges only conditionally.
SeriesValue laplace_truncated(double X, double r, const SeriesConfig& cfg);

enum class IncGammaForm
{
    finite_sum,        // 2^{-s} sum s^{-n-1}/(n zeta(n+1)) sum_{k<=n} (s log 2)^k/k!
    incomplete_gamma,  // sum s^{-n-1} Gamma(n+1, s log 2)/(n n! zeta(n+1))
};

// s > 1.
SeriesValue incgamma_series(double s, const SeriesConfig& cfg,
                            IncGammaForm form = IncGammaForm::finite_sum);

// The k = n terms of the finite-sum form on their own.
SeriesValue incgamma_diagonal(double s, const SeriesConfig& cfg);

struct ZeroSum
{
    double value = 0.0;
    double imag_residue = 0.0;  // Im of the paired sum before it is dropped
    double error_bound = 0.0;
    std::size_t terms = 0;
};

// (pi/2) x^{-rho} / (cos(pi rho/2) zeta'(rho)) for rho = 1/2 + it.
Complex zero_sum_term(double x, Complex rho);

// f(x) = (pi/2) sum_rho x^{-rho}/(cos(pi rho/2) zeta'(rho)) over the zeros and
// their conjugates, each conjugate evaluated on its own. x > 1.
ZeroSum zero_sum_f(double x, std::span<const ZetaZero> zeros, const SeriesConfig& cfg);

} // namespace rieszlab
