#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rieszlab/errors.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/zeros.hpp"

using namespace rieszlab;

namespace {

bool close(double got, double want, double rel)
{
    return std::abs(got - want) <= rel * std::abs(want);
}

} // namespace

TEST_CASE("zeta on the real line")
{
    CHECK(close(zeta_real(2.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-14));
    CHECK(close(zeta_real(3.0), 1.20205690315959428540, 1e-14));
    CHECK(close(zeta_real(1.5), 2.61237534868548834335, 1e-14));
    CHECK(close(zeta_real(80.0), 1.0 + std::pow(2.0, -80.0), 1e-16));
    CHECK_THROWS_AS(zeta_real(1.0), RangeError);
    CHECK_THROWS_AS(zeta_real(0.5), RangeError);
}

TEST_CASE("zeta vanishes at the first zeros")
{
    const auto zeros = load_zeros(default_zeros_path());
    REQUIRE(zeros.size() >= 10);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(std::abs(zeta_complex({0.5, zeros[i].t})) < 1e-10);
    // Off the line it does not.
    CHECK(std::abs(zeta_complex({0.6, zeros[0].t})) > 1e-2);
    CHECK(std::abs(zeta_prime({0.5, zeros[0].t})) == doctest::Approx(0.793160433356518).epsilon(1e-12));
    CHECK_THROWS_AS(zeta_complex({1.0, 0.0}), RangeError);
    CHECK_THROWS_AS(zeta_complex({0.5, 500.0}), RangeError);
}

TEST_CASE("complex zeta agrees with the real evaluator")
{
    for (double s : {1.2, 2.0, 3.5, 7.0})
        CHECK(close(zeta_complex({s, 0.0}).real(), zeta_real(s), 1e-13));
}

TEST_CASE("upper incomplete gamma for integer order")
{
    CHECK(close(upper_incomplete_gamma_int(0, 3.0), std::exp(-3.0), 1e-15));
    CHECK(close(upper_incomplete_gamma_int(2, 1.0), 5.0 / std::numbers::e, 1e-14));
    CHECK(close(upper_incomplete_gamma_int(3, 2.0), 5.14274076299128229197, 1e-14));
    CHECK(close(upper_incomplete_gamma_int(10, 20.0), 39233.5652781574044670, 1e-13));
    CHECK(close(upper_incomplete_gamma_int(5, 0.0), 120.0, 1e-15));
    CHECK_THROWS_AS(upper_incomplete_gamma_int(-1, 1.0), RangeError);
    CHECK_THROWS_AS(upper_incomplete_gamma_int(2, -1.0), DomainError);
}

TEST_CASE("Ei on the negative axis")
{
    CHECK(close(expint_ei_neg(1.0), -0.21938393439552027368, 1e-14));
    CHECK(close(expint_ei_neg(0.5), -0.55977359477616081175, 1e-14));
    CHECK(close(expint_ei_neg(10.0), -4.15696892968532427740e-06, 1e-13));
    CHECK(close(expint_ei_neg(50.0), -3.78326402955045901870e-24, 1e-13));
    CHECK_THROWS_AS(expint_ei_neg(0.0), DomainError);
    CHECK_THROWS_AS(expint_ei_neg(800.0), RangeError);
}

TEST_CASE("E1 series and continued fraction agree where both work")
{
    for (double x = 0.8; x <= 4.0; x += 0.2)
        CHECK(close(detail::e1_series(x), detail::e1_continued_fraction(x), 1e-13));
}

TEST_CASE("erf family")
{
    for (double x : {-2.0, -0.3, 0.0, 0.7, 3.0})
        CHECK(rieszlab::erf(x) == doctest::Approx(std::erf(x)).epsilon(1e-15));
    CHECK(close(erfcx(0.5), 0.61569034419292587487, 1e-14));
    CHECK(close(erfcx(6.0), 0.0927765678005383, 1e-13));
    CHECK(close(erfcx(30.0), 0.0187958888614167514971, 1e-14));
    // The two branches meet continuously at 5.
    CHECK(close(erfcx(5.0 - 1e-12), erfcx(5.0 + 1e-12), 1e-12));
    CHECK_THROWS_AS(erfcx(-1.0), DomainError);
}

TEST_CASE("Dawson and 1F1(1; 3/2; -z)")
{
    CHECK(close(dawson(0.1), 0.09933599239785286651, 1e-14));
    CHECK(close(dawson(1.0), 0.538079506912768, 1e-13));
    CHECK(close(dawson(3.0), 0.17827103061055828734, 1e-13));
    CHECK(close(dawson(10.0), 0.05025384718759852803, 1e-13));
    CHECK(dawson(-1.0) == doctest::Approx(-dawson(1.0)).epsilon(1e-15));
    CHECK(close(kummer_1f1_half(4.0), 0.15067019446189598302, 1e-13));
    CHECK(close(kummer_1f1_half(1e-6), 1.0 - 2e-6 / 3.0, 1e-12));
    // Large-argument behaviour: D(t) ~ 1/(2t).
    CHECK(close(dawson(1e4), 0.5e-4, 1e-8));
}
