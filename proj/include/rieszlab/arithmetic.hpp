#pragma once

#include <cstdint>

#include "rieszlab/series_config.hpp"
#include "rieszlab/sieve.hpp"

namespace rieszlab {

// Largest r with r^k <= n, exact in integer arithmetic.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

// pi(x). Throws RangeError for x < 0 or x > limit.
std::uint64_t prime_count(double x, const SieveTables& tables);

// Riemann's J(x) = sum over prime powers p^k <= x of 1/k, where a prime power
// equal to x contributes half its weight.
double riemann_j(double x, const SieveTables& tables);

// sum_{p <= X} p log p, ascending order. Requires 2 <= X <= limit.
double prime_sum_plogp(double X, const SieveTables& tables);

// Rigorous upper bound on sum_{p > limit} p^{-s}.
double prime_zeta_tail_bound(double s, const SieveTables& tables);

// P(s) = sum_p p^{-s} over the sieve primes. error_bound is the tail bound;
// PrecisionError when it exceeds cfg.tol.
SeriesValue prime_zeta(double s, const SeriesConfig& cfg);

// omega(s) = (1/s) sum_p sum_{n>=2} p^{-ns}/n, the correction term in
// log zeta(s)/s - omega(s) = int_2^inf pi(x) x^{-s-1} dx.
SeriesValue omega_small(double s, const SeriesConfig& cfg);

} // namespace rieszlab
