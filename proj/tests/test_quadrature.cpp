#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "rieszlab/errors.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/specfun.hpp"

using namespace rieszlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("finite interval")
{
    const QuadResult one = integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
    CHECK(one.converged);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
    const QuadResult s = integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(s.converged);
    CHECK(std::abs(s.value - 2.0) < 1e-12);
    const QuadResult sq = integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
    CHECK(sq.converged);
    CHECK(std::abs(sq.value - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(sq.value - 2.0 / 3.0) <= sq.err_estimate + 1e-15);
}

TEST_CASE("budget exhaustion is reported, not hidden")
{
    const QuadResult q =
        integrate_finite([](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0, 1e-14, 300);
    CHECK_FALSE(q.converged);
    CHECK(q.evaluations <= 300 + 15);
}

TEST_CASE("non-finite integrand is a domain error")
{
    CHECK_THROWS_AS(
        integrate_finite([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0, 1e-8),
        DomainError);
}

TEST_CASE("semi-infinite")
{
    const QuadResult e = integrate_semi_infinite([](double y) { return std::exp(-y); }, 1e-12, {});
    CHECK(e.converged);
    CHECK(std::abs(e.value - 1.0) < 1e-12);

    const double gamma_half = std::sqrt(kPi);
    const QuadResult g = integrate_semi_infinite([](double y) { return std::exp(-y) / std::sqrt(y); }, 1e-11, {});
    CHECK(std::abs(g.value - gamma_half) < 1e-11);
    SemiInfiniteOptions sq;
    sq.sqrt_substitution = true;
    const QuadResult g2 =
        integrate_semi_infinite([](double y) { return std::exp(-y) / std::sqrt(y); }, 1e-11, sq);
    CHECK(std::abs(g2.value - gamma_half) < 1e-11);

    // Algebraic decay.
    const QuadResult alg = integrate_semi_infinite([](double y) { return 1.0 / ((1 + y) * (1 + y)); }, 1e-10, {});
    CHECK(alg.converged);
    CHECK(std::abs(alg.value - 1.0) < 1e-10);
}

TEST_CASE("finite upper limit is honoured and flagged")
{
    SemiInfiniteOptions opts;
    opts.upper = 10.0;
    const QuadResult q = integrate_semi_infinite([](double) { return 1.0; }, 1e-10, opts);
    CHECK(q.reached_upper);
    CHECK(std::abs(q.value - 10.0) < 1e-9);
}

TEST_CASE("oscillatory transforms")
{
    // int_0^inf e^{-x} cos(wx) dx = 1/(1+w^2), sine: w/(1+w^2).
    for (double w : {0.5, 1.0, 4.0}) {
        const QuadResult c = oscillatory_transform([](double x) { return std::exp(-x); }, TransformKind::cosine,
                                                   w, 1e-10);
        CHECK(c.converged);
        CHECK(std::abs(c.value - 1.0 / (1.0 + w * w)) < 1e-10);
        const QuadResult s = oscillatory_transform([](double x) { return std::exp(-x); }, TransformKind::sine,
                                                   w, 1e-10);
        CHECK(std::abs(s.value - w / (1.0 + w * w)) < 1e-10);
    }
    // Conditionally convergent; value from an independent high-precision run.
    const QuadResult slow = oscillatory_transform([](double x) { return 1.0 / (1.0 + x); }, TransformKind::sine,
                                                  1.0, 1e-8);
    CHECK(slow.converged);
    CHECK(std::abs(slow.value - 0.621449624235813) < 1e-8);
    // Gaussian sine transform: int sin(wx) e^{-x^2} dx = D(w/2).
    const QuadResult gs = oscillatory_transform([](double x) { return std::exp(-x * x); }, TransformKind::sine,
                                                3.0, 1e-12);
    CHECK(std::abs(gs.value - dawson(1.5)) < 1e-11);
}

TEST_CASE("hard cutoff integrates exactly to the cutoff")
{
    CutoffPolicy p;
    p.hard_cutoff = kPi;
    const QuadResult q = oscillatory_transform([](double) { return 1.0; }, TransformKind::sine, 1.0, 1e-12, p);
    CHECK(std::abs(q.value - 2.0) < 1e-12);
}

TEST_CASE("Wynn epsilon accelerates an alternating series")
{
    std::vector<double> sums;
    double s = 0.0;
    for (int k = 1; k <= 20; ++k) {
        s += (k % 2 ? 1.0 : -1.0) / k;
        sums.push_back(s);
    }
    const Extrapolation e = wynn_epsilon(sums.data(), sums.size());
    CHECK(std::abs(e.value - std::numbers::ln2) < 1e-12);
    CHECK(std::abs(sums.back() - std::numbers::ln2) > 1e-2);
}

TEST_CASE("bad tolerance is rejected")
{
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 0.0), ConfigError);
}
