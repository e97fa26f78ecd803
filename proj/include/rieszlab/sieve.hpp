#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace rieszlab {

inline constexpr std::uint64_t kMinSieveLimit = 2;
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;
inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;

// Möbius values and primes up to a fixed limit. Immutable once built, so a
// single instance is shared (through shared_ptr<const>) by every evaluator.
class SieveTables
{
public:
    std::uint64_t limit() const noexcept { return limit_; }

    // mu(n) for 1 <= n <= limit.
    int mu(std::uint64_t n) const noexcept { return mu_[n]; }

    // Indexed by n, entry 0 unused.
    std::span<const std::int8_t> mu_table() const noexcept { return mu_; }

    // All primes <= limit, ascending.
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    bool is_prime(std::uint64_t n) const;

    // Number of primes <= n, for n <= limit.
    std::uint64_t count_primes_upto(std::uint64_t n) const;

private:
    friend SieveTables build_sieve(std::uint64_t limit);

    std::uint64_t limit_ = 0;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> primes_;
};

// Linear sieve; throws ConfigError unless 2 <= limit <= 1e8.
SieveTables build_sieve(std::uint64_t limit);

std::shared_ptr<const SieveTables> make_shared_sieve(std::uint64_t limit);

} // namespace rieszlab
