#pragma once

#include <cstddef>
#include <functional>
#include <limits>

namespace rieszlab {

inline constexpr std::size_t kDefaultQuadBudget = 200'000;

struct QuadResult
{
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    double l1_estimate = 0.0;  // approximate integral of |f|
    // integrate_semi_infinite only: the march stopped at opts.upper rather
    // than because the integrand died out.
    bool reached_upper = false;
    // With reached_upper: geometric extrapolation of the last panels past
    // opts.upper (infinity when they were not decaying). Not part of err.
    double tail_estimate = 0.0;
};

using Integrand = std::function<double(double)>;

// Global adaptive Gauss-Kronrod 7/15 on [a, b]; tol is absolute. On budget
// exhaustion the best estimate is returned with converged = false.
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            std::size_t budget = kDefaultQuadBudget);

struct SemiInfiniteOptions
{
    // Integrate 2u f(u^2) du instead, for y^{-1/2} type endpoint behaviour.
    bool sqrt_substitution = false;
    // Integrate over [0, upper] only; the caller accounts for the rest.
    double upper = std::numeric_limits<double>::infinity();
    std::size_t budget = kDefaultQuadBudget;
};

// int_0^inf f. After y = e^v the integrand is split into unit panels in v,
// marching outwards from v = 0 until the panels are negligible; the neglected
// remainder is extrapolated geometrically and folded into err_estimate.
QuadResult integrate_semi_infinite(const Integrand& f, double tol,
                                   const SemiInfiniteOptions& opts = {});

enum class TransformKind { sine, cosine };

struct CutoffPolicy
{
    // > 0: plain integral over [0, hard_cutoff], no acceleration.
    double hard_cutoff = 0.0;
    std::size_t max_panels = 2000;
};

// int_0^inf f(x) sin(wx) dx or cos(wx): one panel per half period, between
// zeros of the trigonometric factor, with the partial sums accelerated by
// Wynn's epsilon algorithm.
QuadResult oscillatory_transform(const Integrand& f, TransformKind kind, double w, double tol,
                                 const CutoffPolicy& policy = {},
                                 std::size_t budget = kDefaultQuadBudget);

// Limit estimate of a sequence of partial sums, with |difference| of the two
// most recent estimates as error. Exposed for testing.
struct Extrapolation
{
    double value = 0.0;
    double error = 0.0;
};
Extrapolation wynn_epsilon(const double* sums, std::size_t count);

} // namespace rieszlab
