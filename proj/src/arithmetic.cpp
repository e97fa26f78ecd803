#include "rieszlab/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rieszlab/errors.hpp"
#include "rieszlab/summation.hpp"
#include "format.hpp"

namespace rieszlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rosser & Schoenfeld: pi(x) < 1.25506 x / log x for x > 1.
constexpr double kRosserSchoenfeld = 1.25506;

std::uint64_t checked_floor(double x, const SieveTables& tables, const char* fn)
{
    if (!std::isfinite(x))
        throw DomainError(std::string(fn) + ": argument is not finite");
    if (x > static_cast<double>(tables.limit()))
        throw RangeError(std::string(fn) + ": argument " + fmt_g(x) +
                         " exceeds sieve limit " + std::to_string(tables.limit()));
    return static_cast<std::uint64_t>(std::floor(x));
}

// r^k, saturating at n + 1 so it never overflows.
std::uint64_t power_capped(std::uint64_t r, unsigned k, std::uint64_t n)
{
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > n)
            return n + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

bool power_at_most(std::uint64_t r, unsigned k, std::uint64_t n)
{
    return power_capped(r, k, n) <= n;
}

} // namespace

SieveTables build_sieve(std::uint64_t limit)
{
    if (limit < kMinSieveLimit || limit > kMaxSieveLimit)
        throw ConfigError("sieve limit must lie in [2, 1e8], got " + std::to_string(limit));

    // Linear sieve. mu_ starts at the sentinel 2 ("not yet reached"); every
    // composite is written exactly once, from its smallest prime factor.
    constexpr std::int8_t unvisited = 2;
    SieveTables t;
    t.limit_ = limit;
    t.mu_.assign(limit + 1, unvisited);
    t.mu_[0] = 0;
    t.mu_[1] = 1;
    t.primes_.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))) + 16);

    const auto n_max = static_cast<std::uint32_t>(limit);
    std::int8_t* mu = t.mu_.data();
    for (std::uint32_t i = 2; i <= n_max; ++i) {
        if (mu[i] == unvisited) {
            mu[i] = -1;
            t.primes_.push_back(i);
        }
        const std::uint64_t bound = limit / i;
        for (const std::uint32_t p : t.primes_) {
            if (p > bound)
                break;
            const std::uint32_t m = i * p;
            if (i % p == 0) {
                mu[m] = 0;
                break;
            }
            mu[m] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    t.primes_.shrink_to_fit();
    return t;
}

std::shared_ptr<const SieveTables> make_shared_sieve(std::uint64_t limit)
{
    return std::make_shared<const SieveTables>(build_sieve(limit));
}

bool SieveTables::is_prime(std::uint64_t n) const
{
    if (n > limit_)
        throw RangeError("is_prime: " + std::to_string(n) + " exceeds sieve limit");
    return std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

std::uint64_t SieveTables::count_primes_upto(std::uint64_t n) const
{
    if (n > limit_)
        throw RangeError("prime count: " + std::to_string(n) + " exceeds sieve limit");
    return static_cast<std::uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n)) - primes_.begin());
}

std::uint64_t integer_root(std::uint64_t n, unsigned k)
{
    if (k == 0)
        throw DomainError("integer_root: k must be positive");
    if (k == 1 || n < 2)
        return n;
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    while (r > 0 && !power_at_most(r, k, n))
        --r;
    while (power_at_most(r + 1, k, n))
        ++r;
    return r;
}

std::uint64_t prime_count(double x, const SieveTables& tables)
{
    if (x < 0)
        throw DomainError("prime_count: x must be nonnegative");
    return tables.count_primes_upto(checked_floor(x, tables, "prime_count"));
}

double riemann_j(double x, const SieveTables& tables)
{
    if (!(x > 1.0))
        throw DomainError("riemann_j: x must exceed 1");
    const std::uint64_t n = checked_floor(x, tables, "riemann_j");
    const bool integral = static_cast<double>(n) == x;

    CompensatedSum j;
    for (unsigned k = 1; k < 64 && (std::uint64_t{1} << k) <= n; ++k) {
        const std::uint64_t r = integer_root(n, k);
        double count = static_cast<double>(tables.count_primes_upto(r));
        // A prime power sitting exactly at x is counted with weight 1/2.
        if (integral && power_capped(r, k, n) == n && tables.is_prime(r))
            count -= 0.5;
        j += count / k;
    }
    return j.value();
}

double prime_sum_plogp(double X, const SieveTables& tables)
{
    if (!(X >= 2.0))
        throw RangeError("prime_sum_plogp: X must be at least 2");
    const std::uint64_t n = checked_floor(X, tables, "prime_sum_plogp");
    CompensatedSum sum;
    for (const std::uint32_t p : tables.primes()) {
        if (p > n)
            break;
        const double pd = p;
        sum += pd * std::log(pd);
    }
    return sum.value();
}

double prime_zeta_tail_bound(double s, const SieveTables& tables)
{
    const double L = static_cast<double>(tables.limit());
    const double trivial = std::pow(L, 1.0 - s) / (s - 1.0);
    // Partial summation with pi(x) < 1.25506 x/log x:
    // sum_{p>L} p^-s = -pi(L) L^-s + s int_L^inf pi(x) x^{-s-1} dx.
    const double pi_L = static_cast<double>(tables.primes().size());
    const double rs = kRosserSchoenfeld * s * std::pow(L, 1.0 - s) / ((s - 1.0) * std::log(L)) -
                      pi_L * std::pow(L, -s);
    return std::max(0.0, std::min(trivial, rs));
}

SeriesValue prime_zeta(double s, const SeriesConfig& cfg)
{
    if (!(s > 1.0) || !std::isfinite(s))
        throw DomainError("prime_zeta: s must exceed 1");
    const SieveTables& tables = cfg.tables();

    const double tail = prime_zeta_tail_bound(s, tables);
    CompensatedSum sum;
    for (const std::uint32_t p : tables.primes())
        sum += std::pow(static_cast<double>(p), -s);

    SeriesValue out;
    out.value = sum.value();
    out.terms = tables.primes().size();
    out.error_bound = tail + 4 * kEps * sum.magnitude();
    if (out.error_bound > cfg.tol)
        throw PrecisionError("prime_zeta(" + fmt_g(s) + "): tail bound " + fmt_g(out.error_bound) +
                             " exceeds tol " + fmt_g(cfg.tol) + "; use a larger sieve");
    return out;
}

SeriesValue omega_small(double s, const SeriesConfig& cfg)
{
    if (!(s > 1.0) || !std::isfinite(s))
        throw DomainError("omega_small: s must exceed 1");
    const SieveTables& tables = cfg.tables();
    const double cut = cfg.tol * 1e-2;

    CompensatedSum sum;
    double dropped = 0.0;
    for (const std::uint32_t p : tables.primes()) {
        const double u = std::pow(static_cast<double>(p), -s);
        double un = u;
        for (int n = 2;; ++n) {
            un *= u;
            const double term = un / n;
            sum += term;
            if (term < cut || term == 0.0) {
                dropped += un * u / ((n + 1) * (1.0 - u));
                break;
            }
        }
    }

    // Primes above the limit: sum_{m>L} m^{-2s} / (2 (1 - L^-s)).
    const double L = static_cast<double>(tables.limit());
    const double tail = std::pow(L, 1.0 - 2.0 * s) / ((2.0 * s - 1.0) * 2.0 * (1.0 - std::pow(L, -s)));

    SeriesValue out;
    out.value = sum.value() / s;
    out.terms = tables.primes().size();
    out.error_bound = (tail + dropped + 4 * kEps * sum.magnitude()) / s;
    if (out.error_bound > cfg.tol)
        throw PrecisionError("omega_small(" + fmt_g(s) + "): tail bound " + fmt_g(out.error_bound) +
                             " exceeds tol " + fmt_g(cfg.tol));
    return out;
}

} // namespace rieszlab
