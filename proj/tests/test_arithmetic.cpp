#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rieszlab/arithmetic.hpp"
#include "rieszlab/errors.hpp"
#include "support.hpp"

using namespace rieszlab;
using testing_support::cfg;

namespace {

// Trial division, independent of the sieve.
int mu_naive(std::uint64_t n)
{
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

} // namespace

TEST_CASE("mu matches trial division")
{
    const auto& t = cfg().tables();
    for (std::uint64_t n = 1; n <= 20000; ++n)
        REQUIRE(t.mu(n) == mu_naive(n));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const auto n = pick(rng);
        REQUIRE(t.mu(n) == mu_naive(n));
    }
}

TEST_CASE("mu up to 10")
{
    const auto t = build_sieve(10);
    const int want[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    for (int n = 1; n <= 10; ++n)
        CHECK(t.mu(n) == want[n - 1]);
}

TEST_CASE("prime counts at decades")
{
    const auto& t = cfg().tables();
    CHECK(prime_count(10, t) == 4);
    CHECK(prime_count(1000, t) == 168);
    CHECK(prime_count(1e5, t) == 9592);
    CHECK(prime_count(1e6, t) == 78498);
    CHECK(prime_count(1.9, t) == 0);
    CHECK(t.primes().size() == 78498);
}

TEST_CASE("integer_root is the exact floor")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, std::uint64_t{1} << 62);
    for (int i = 0; i < 5000; ++i) {
        const auto n = pick(rng);
        for (unsigned k = 1; k <= 6; ++k) {
            const auto r = integer_root(n, k);
            long double lo = 1, hi = 1;
            for (unsigned j = 0; j < k; ++j) {
                lo *= r;
                hi *= r + 1;
            }
            REQUIRE(lo <= static_cast<long double>(n));
            REQUIRE(hi > static_cast<long double>(n));
        }
    }
    CHECK(integer_root(1000000, 3) == 100);
    CHECK(integer_root(999999, 3) == 99);
    CHECK_THROWS_AS(integer_root(5, 0), DomainError);
}

TEST_CASE("riemann_j counts prime powers with half weight at jumps")
{
    const auto& t = cfg().tables();
    CHECK(riemann_j(10, t) == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
    // 7 is prime: 4 - 1/2 + pi(sqrt 7)/2.
    CHECK(riemann_j(7, t) == doctest::Approx(4.0).epsilon(1e-15));
    // 8 = 2^3: 4 + 1/2 + (1 - 1/2)/3.
    CHECK(riemann_j(8, t) == doctest::Approx(4.0 + 0.5 + 1.0 / 6.0).epsilon(1e-15));
    CHECK(riemann_j(8.5, t) == doctest::Approx(4.0 + 0.5 + 1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(riemann_j(1.0, t), DomainError);
    CHECK_THROWS_AS(riemann_j(2e6, t), RangeError);
}

TEST_CASE("prime_sum_plogp")
{
    const auto& t = cfg().tables();
    const double want = 2 * std::log(2.0) + 3 * std::log(3.0) + 5 * std::log(5.0) + 7 * std::log(7.0);
    CHECK(prime_sum_plogp(10, t) == doctest::Approx(want).epsilon(1e-15));
    CHECK_THROWS_AS(prime_sum_plogp(1.5, t), RangeError);
}

TEST_CASE("prime_zeta against frozen values")
{
    const SeriesValue p3 = prime_zeta(3, cfg());
    CHECK(std::abs(p3.value - 0.174762639299443536) < 1e-13);
    CHECK(p3.error_bound < 1e-12);
    const SeriesValue p5 = prime_zeta(5, cfg());
    CHECK(std::abs(p5.value - 0.0357550174839242571) < 1e-15);
    // The tail past 1e6 is about 1e-7 at s = 2.
    CHECK_THROWS_AS(prime_zeta(2, cfg()), PrecisionError);
    const SeriesValue p2 = prime_zeta(2, with_tol(cfg(), 1e-6));
    CHECK(std::abs(p2.value - 0.452247420041065499) <= p2.error_bound);
    CHECK_THROWS_AS(prime_zeta(1.0, cfg()), DomainError);
}

TEST_CASE("prime_zeta tail bound is valid and not far off")
{
    const auto small = make_shared_sieve(10000);
    const auto c = make_series_config(small, 1.0);
    for (double s : {1.5, 2.0, 3.0}) {
        const double head = prime_zeta(s, c).value;
        const double truth = prime_zeta(s, with_tol(cfg(), 1.0)).value;
        const double tail_1e6 = prime_zeta_tail_bound(s, cfg().tables());
        const double actual = truth - head;
        CHECK(prime_zeta_tail_bound(s, *small) >= actual);
        CHECK(prime_zeta_tail_bound(s, *small) < 3.0 * (actual + tail_1e6));
    }
}

TEST_CASE("omega_small against log zeta - P")
{
    const SeriesValue w3 = omega_small(3, cfg());
    CHECK(std::abs(w3.value - 0.00309051203068262836) < 1e-13);
    const SeriesValue w15 = omega_small(1.5, with_tol(cfg(), 1e-9));
    CHECK(std::abs(w15.value - 0.0737981460728125212) <= w15.error_bound + 1e-15);
}

TEST_CASE("sieve limits are validated")
{
    CHECK_THROWS_AS(build_sieve(1), ConfigError);
    CHECK_THROWS_AS(build_sieve(200'000'000), ConfigError);
    CHECK_THROWS_AS(make_series_config(nullptr), ConfigError);
    CHECK_THROWS_AS(make_series_config(make_shared_sieve(100), 0.0), ConfigError);
    CHECK(make_series_config(make_shared_sieve(100)).max_terms == 100);
}
