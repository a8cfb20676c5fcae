#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyplab/arith.hpp"

namespace hyplab {

// Smallest-prime-factor table over [2, limit], built segment by segment so
// workers can fill disjoint slices of one shared array. Entries are 32-bit:
// a prime n stores itself and limit is capped at 1e9 < 2^32, so everything
// fits. Memory is 4 bytes per integer (4 GB at the cap; plan accordingly).
class FactorSieve {
 public:
  static constexpr u64 kMaxLimit = 1'000'000'000;
  static constexpr u64 kDefaultSegment = u64{1} << 20;

  explicit FactorSieve(u64 limit, int workers = 1, u64 segment = kDefaultSegment);

  u64 limit() const { return limit_; }

  u32 spf(u64 n) const;  // smallest prime factor; domain error outside [2, limit]
  bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }

  unsigned omega(u64 n) const;      // distinct prime factors; omega(1) = 0
  unsigned big_omega(u64 n) const;  // prime factors with multiplicity
  u64 largest_prime_factor(u64 n) const;  // convention: P(1) = 1
  u64 divisor_count(u64 n) const;

  // Unordered divisor pairs (a, b), a <= b, ab = n, sorted by a.
  std::vector<std::pair<u64, u64>> divisor_pairs(u64 n) const;

  std::vector<u64> primes() const;  // ascending primes <= limit
  u64 prime_count() const;

  // Bulk tables indexed by n on [0, limit], one spf chase per n,
  // range-partitioned across workers. Index 0 and 1 hold the conventions
  // omega(1) = 0 and P(1) = 1.
  std::vector<std::uint8_t> omega_table(int workers = 1) const;
  std::vector<u32> lpf_table(int workers = 1) const;

  const std::vector<u32>& raw() const { return spf_; }

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

// Ascending primes <= limit from a plain bit sieve, without paying for a
// factor table. Used where only the primes are needed.
std::vector<u64> primes_up_to(u64 limit);

}  // namespace hyplab
