#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "rieszlab/sieve.hpp"

namespace rieszlab {

// Tail moments T_m(M) = sum_{n>M} mu(n) n^{-m} at a ladder of cutoffs
// M = base * 2^k. A Möbius series whose summand expands in powers of 1/n past
// M is then a head sum over n <= M plus sum_m c_m T_m(M), which leaves no
// truncation error beyond the rounding in T_m.
//
// Moments are built lazily, once per cutoff, and are safe to read from many
// threads.
class MobiusTail
{
public:
    static constexpr int kMaxOrder = 48;

    struct Moment
    {
        double value = 0.0;
        double error = 0.0;  // rounding plus any neglected far tail
    };

    MobiusTail(std::shared_ptr<const SieveTables> sieve, std::size_t max_terms);
    ~MobiusTail();

    MobiusTail(const MobiusTail&) = delete;
    MobiusTail& operator=(const MobiusTail&) = delete;

    std::size_t rung_count() const noexcept { return cutoffs_.size(); }
    std::uint64_t cutoff(std::size_t rung) const { return cutoffs_.at(rung); }
    std::uint64_t max_cutoff() const noexcept { return cutoffs_.back(); }

    // Smallest rung whose cutoff is >= need. PrecisionError when even the
    // largest one is too small.
    std::size_t select(double need, const char* who) const;

    // Moments for 1 <= m <= kMaxOrder (index 0 unused).
    const std::vector<Moment>& moments(std::size_t rung) const;

    // Sup bound M^{1-m}/(m-1) on |T_m(M)|, m >= 2.
    static double moment_bound(std::uint64_t M, int m);

private:
    struct Rung;

    std::shared_ptr<const SieveTables> sieve_;
    std::vector<std::uint64_t> cutoffs_;
    std::unique_ptr<Rung[]> rungs_;
};

} // namespace rieszlab
