#include "rieszlab/mobius_tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "rieszlab/errors.hpp"
#include "rieszlab/series_config.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_tol(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw ConfigError("series tolerance must be positive and finite");
}

} // namespace

struct MobiusTail::Rung
{
    std::once_flag once;
    std::vector<Moment> moments;
};

MobiusTail::MobiusTail(std::shared_ptr<const SieveTables> sieve, std::size_t max_terms)
    : sieve_(std::move(sieve))
{
    if (!sieve_)
        throw ConfigError("MobiusTail: no sieve");
    // Leave room above the last cutoff for the direct far-tail sums.
    const std::uint64_t cap =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(max_terms, sieve_->limit() / 64));
    std::uint64_t M = std::min<std::uint64_t>(1000, cap);
    cutoffs_.push_back(M);
    while (2 * M <= cap) {
        M *= 2;
        cutoffs_.push_back(M);
    }
    rungs_ = std::make_unique<Rung[]>(cutoffs_.size());
}

MobiusTail::~MobiusTail() = default;

std::size_t MobiusTail::select(double need, const char* who) const
{
    for (std::size_t i = 0; i < cutoffs_.size(); ++i)
        if (static_cast<double>(cutoffs_[i]) >= need)
            return i;
    throw PrecisionError(std::string(who) + ": needs a Möbius head of " + std::to_string(need) +
                         " terms but at most " + std::to_string(max_cutoff()) +
                         " are available; raise --sieve-limit or --budget");
}

double MobiusTail::moment_bound(std::uint64_t M, int m)
{
    return std::pow(static_cast<double>(M), 1.0 - m) / (m - 1);
}

const std::vector<MobiusTail::Moment>& MobiusTail::moments(std::size_t rung) const
{
    Rung& r = rungs_[rung];
    std::call_once(r.once, [&] {
        const std::uint64_t M = cutoffs_[rung];
        const std::uint64_t limit = sieve_->limit();
        const auto mu = sieve_->mu_table();
        std::vector<Moment> out(kMaxOrder + 1);

        // m <= 3: the full series is known, T_m = 1/zeta(m) - head (1/zeta(1) = 0).
        for (int m = 1; m <= 3; ++m) {
            CompensatedSum head;
            for (std::uint64_t n = 1; n <= M; ++n)
                if (mu[n] != 0)
                    head += mu[n] * std::pow(static_cast<double>(n), -m);
            const double full = m == 1 ? 0.0 : 1.0 / zeta_real(m);
            out[m].value = full - head.value();
            out[m].error = 4.0 * kEps * (1.0 + head.magnitude());
        }

        // m >= 4: sum directly over M < n <= K_m with K_m = M * 10^{19/(m-1)},
        // where the neglected part falls below 1e-19 of the first term.
        std::vector<std::uint64_t> K(kMaxOrder + 1, 0);
        std::uint64_t K_max = M;
        for (int m = 4; m <= kMaxOrder; ++m) {
            const double k = static_cast<double>(M) * std::pow(10.0, 19.0 / (m - 1));
            K[m] = k >= static_cast<double>(limit) ? limit : static_cast<std::uint64_t>(k);
            K_max = std::max(K_max, K[m]);
        }
        std::vector<CompensatedSum> sums(kMaxOrder + 1);
        for (std::uint64_t n = M + 1; n <= K_max; ++n) {
            if (mu[n] == 0)
                continue;
            const double inv = 1.0 / static_cast<double>(n);
            const double inv2 = inv * inv;
            double p = mu[n] * inv2 * inv2;
            for (int m = 4; m <= kMaxOrder && n <= K[m]; ++m) {
                if (p == 0.0)
                    break;
                sums[m] += p;
                p *= inv;
            }
        }
        for (int m = 4; m <= kMaxOrder; ++m) {
            out[m].value = sums[m].value();
            out[m].error = (m + 4) * kEps * sums[m].magnitude() + moment_bound(K[m], m);
        }
        r.moments = std::move(out);
    });
    return r.moments;
}

SeriesConfig make_series_config(std::shared_ptr<const SieveTables> sieve, double tol,
                                std::size_t max_terms)
{
    if (!sieve)
        throw ConfigError("series config needs a sieve");
    check_tol(tol);
    if (max_terms == 0)
        throw ConfigError("max_terms must be positive");
    SeriesConfig cfg;
    cfg.tol = tol;
    cfg.max_terms = static_cast<std::size_t>(std::min<std::uint64_t>(max_terms, sieve->limit()));
    cfg.sieve = std::move(sieve);
    cfg.tail = std::make_shared<const MobiusTail>(cfg.sieve, cfg.max_terms);
    return cfg;
}

SeriesConfig with_tol(const SeriesConfig& cfg, double tol)
{
    check_tol(tol);
    SeriesConfig out = cfg;
    out.tol = tol;
    return out;
}

} // namespace rieszlab
