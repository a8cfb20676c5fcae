#include "hyplab/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/parallel.hpp"

namespace hyplab {

FactorSieve::FactorSieve(u64 limit, int workers, u64 segment) : limit_(limit) {
  if (limit > kMaxLimit) throw capacity_error("factor sieve limit exceeds 1e9");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (segment < 64 || (segment & (segment - 1)) != 0)
    throw std::invalid_argument("segment must be a power of two >= 64");

  spf_.assign(limit + 1, 0);
  if (limit < 2) return;

  // Shared phase: base primes up to sqrt(limit).
  const u64 root = isqrt(limit);
  std::vector<u32> base;
  {
    std::vector<char> comp(root + 1, 0);
    for (u64 p = 2; p <= root; ++p) {
      if (comp[p]) continue;
      base.push_back(static_cast<u32>(p));
      for (u64 m = p * p; m <= root; m += p) comp[m] = 1;
    }
  }

  // Segments are disjoint, so workers write to disjoint slices of spf_ and
  // the result is identical for every worker count and segment size.
  //
  // Within a segment, base primes run in ascending order and only claim
  // still-unset cells, so each composite ends up holding its smallest prime
  // factor: any multiple of p below p^2 has a smaller factor whose pass came
  // first, which is why marking can start at p^2. Cells still unset after
  // all base primes have no factor <= sqrt and are prime.
  const u64 n_segments = (limit - 1) / segment + 1;  // covering [2, limit]
  auto fill_segment = [&](u64 seg) {
    const u64 lo = std::max<u64>(2, seg * segment);
    const u64 hi = std::min(limit + 1, (seg + 1) * segment);
    if (lo >= hi) return;
    for (u32 p : base) {
      const u64 p2 = static_cast<u64>(p) * p;
      if (p2 >= hi) break;
      u64 start = std::max(p2, ((lo + p - 1) / p) * static_cast<u64>(p));
      for (u64 m = start; m < hi; m += p)
        if (spf_[m] == 0) spf_[m] = p;
    }
    for (u64 n = lo; n < hi; ++n)
      if (spf_[n] == 0) spf_[n] = static_cast<u32>(n);
  };

  run_workers(workers, [&](int w) {
    for (u64 seg = static_cast<u64>(w); seg < n_segments; seg += static_cast<u64>(workers))
      fill_segment(seg);
  });
}

u32 FactorSieve::spf(u64 n) const {
  if (n < 2 || n > limit_) throw std::domain_error("spf argument outside [2, limit]");
  return spf_[n];
}

unsigned FactorSieve::omega(u64 n) const {
  if (n == 1) return 0;
  unsigned w = 0;
  while (n > 1) {
    const u64 p = spf(n);
    ++w;
    while (n % p == 0) n /= p;
  }
  return w;
}

unsigned FactorSieve::big_omega(u64 n) const {
  if (n == 1) return 0;
  unsigned w = 0;
  while (n > 1) {
    n /= spf(n);
    ++w;
  }
  return w;
}

u64 FactorSieve::largest_prime_factor(u64 n) const {
  if (n == 1) return 1;
  u64 big = 1;
  while (n > 1) {
    const u64 p = spf(n);
    big = p;  // chase ends on the largest factor since spf is ascending
    while (n % p == 0) n /= p;
  }
  return big;
}

u64 FactorSieve::divisor_count(u64 n) const {
  if (n == 1) return 1;
  u64 d = 1;
  while (n > 1) {
    const u64 p = spf(n);
    u64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    d *= e + 1;
  }
  return d;
}

std::vector<std::pair<u64, u64>> FactorSieve::divisor_pairs(u64 n) const {
  if (n == 0) throw std::domain_error("divisor_pairs of 0");
  std::vector<u64> divisors{1};
  u64 rest = n;
  while (rest > 1) {
    const u64 p = spf(rest);
    u64 e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const size_t before = divisors.size();
    u64 pk = 1;
    for (u64 k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < before; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 d : divisors)
    if (d <= n / d) pairs.emplace_back(d, n / d);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<u64> FactorSieve::primes() const {
  std::vector<u64> ps;
  for (u64 n = 2; n <= limit_; ++n)
    if (spf_[n] == n) ps.push_back(n);
  return ps;
}

u64 FactorSieve::prime_count() const {
  u64 c = 0;
  for (u64 n = 2; n <= limit_; ++n)
    if (spf_[n] == n) ++c;
  return c;
}

std::vector<std::uint8_t> FactorSieve::omega_table(int workers) const {
  std::vector<std::uint8_t> t(limit_ + 1, 0);
  run_workers(workers, [&](int w) {
    const u64 chunk = limit_ / static_cast<u64>(workers) + 1;
    const u64 lo = std::max<u64>(2, static_cast<u64>(w) * chunk);
    const u64 hi = std::min(limit_ + 1, (static_cast<u64>(w) + 1) * chunk);
    for (u64 n = lo; n < hi; ++n) t[n] = static_cast<std::uint8_t>(omega(n));
  });
  return t;
}

std::vector<u32> FactorSieve::lpf_table(int workers) const {
  std::vector<u32> t(limit_ + 1, 0);
  if (limit_ >= 1) t[1] = 1;
  run_workers(workers, [&](int w) {
    const u64 chunk = limit_ / static_cast<u64>(workers) + 1;
    const u64 lo = std::max<u64>(2, static_cast<u64>(w) * chunk);
    const u64 hi = std::min(limit_ + 1, (static_cast<u64>(w) + 1) * chunk);
    for (u64 n = lo; n < hi; ++n) t[n] = static_cast<u32>(largest_prime_factor(n));
  });
  return t;
}

std::vector<u64> primes_up_to(u64 limit) {
  if (limit > FactorSieve::kMaxLimit) throw capacity_error("prime sieve limit exceeds 1e9");
  std::vector<u64> ps;
  if (limit < 2) return ps;
  std::vector<char> comp(limit + 1, 0);
  for (u64 p = 2; p * p <= limit; ++p)
    if (!comp[p])
      for (u64 m = p * p; m <= limit; m += p) comp[m] = 1;
  for (u64 n = 2; n <= limit; ++n)
    if (!comp[n]) ps.push_back(n);
  return ps;
}

}  // namespace hyplab
