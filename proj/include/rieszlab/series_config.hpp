#pragma once

#include <cstddef>
#include <memory>

#include "rieszlab/sieve.hpp"

namespace rieszlab {

class MobiusTail;

// Truncation policy shared by every infinite-series evaluator.
struct SeriesConfig
{
    double tol = 1e-12;                  // absolute truncation target
    std::size_t max_terms = 1'000'000;   // never exceeds sieve->limit()
    std::shared_ptr<const SieveTables> sieve;
    std::shared_ptr<const MobiusTail> tail;

    const SieveTables& tables() const { return *sieve; }
};

// Validates tol > 0 and clamps max_terms to the sieve limit.
SeriesConfig make_series_config(std::shared_ptr<const SieveTables> sieve,
                                double tol = 1e-12,
                                std::size_t max_terms = 1'000'000);

// Same tables and tail cache, different tolerance.
SeriesConfig with_tol(const SeriesConfig& cfg, double tol);

// Value of a truncated series together with a bound on everything that was
// dropped (truncation, tail remainders, rounding).
struct SeriesValue
{
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t terms = 0;
};

} // namespace rieszlab
