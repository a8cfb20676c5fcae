#include "hyplab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/parallel.hpp"
#include "hyplab/sieve.hpp"

namespace hyplab {

namespace {

constexpr u64 kMaxHistogramLimit = 1'000'000'000;
constexpr u64 kMaxHeuristicLimit = 100'000'000;

std::vector<u64> worker_chunks(u64 lo, u64 hi, int workers) {
  // Boundaries of contiguous chunks [lo, hi); merge order is fixed by index.
  std::vector<u64> cuts(static_cast<size_t>(workers) + 1);
  const u64 span = hi - lo;
  for (int w = 0; w <= workers; ++w)
    cuts[static_cast<size_t>(w)] = lo + span * static_cast<u64>(w) / static_cast<u64>(workers);
  return cuts;
}

}  // namespace

OmegaHistogram omega_histogram(u64 limit, int workers) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (limit > kMaxHistogramLimit) throw capacity_error("histogram limit exceeds 1e9");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const FactorSieve sieve(limit, workers);
  // omega(n) <= log2(n), so 64 buckets always suffice.
  std::vector<std::vector<u64>> parts(static_cast<size_t>(workers),
                                      std::vector<u64>(64, 0));
  const auto cuts = worker_chunks(2, limit + 1, workers);
  run_workers(workers, [&](int w) {
    auto& local = parts[static_cast<size_t>(w)];
    for (u64 n = cuts[static_cast<size_t>(w)]; n < cuts[static_cast<size_t>(w) + 1]; ++n)
      ++local[sieve.omega(n)];
  });

  OmegaHistogram h;
  h.limit = limit;
  h.counts.assign(64, 0);
  h.counts[0] = 1;  // n = 1
  for (auto& local : parts)
    for (size_t i = 0; i < 64; ++i) h.counts[i] += local[i];
  while (h.counts.size() > 1 && h.counts.back() == 0) h.counts.pop_back();
  return h;
}

std::vector<double> hr_normalized_ratios(const OmegaHistogram& h, double c0) {
  if (!(c0 > 0)) throw std::invalid_argument("c0 must be positive");
  if (h.limit < 3) throw std::invalid_argument("histogram limit must be >= 3");
  const double n = static_cast<double>(h.limit);
  const double lead = n / std::log(n);
  const double base = std::log(std::log(n)) + c0;
  std::vector<double> out(h.counts.size(), 0.0);
  double majorant = lead;  // i = 1: (base)^0 / 0!
  for (size_t i = 1; i < h.counts.size(); ++i) {
    out[i] = static_cast<double>(h.counts[i]) / majorant;
    majorant *= base / static_cast<double>(i);  // -> lead * base^i / i!
  }
  return out;
}

ReciprocalSum prime_power_reciprocal_sum(u64 limit) {
  if (limit < 3) throw std::invalid_argument("limit must be >= 3");
  if (limit > kMaxHistogramLimit) throw capacity_error("limit exceeds 1e9");
  double sum = 0.0;
  for (u64 p : primes_up_to(limit)) {
    double term = 1.0 / static_cast<double>(p);
    u64 pk = p;
    while (pk <= limit) {
      sum += term;
      term /= static_cast<double>(p);
      if (pk > limit / p) break;  // next power would overflow past limit
      pk *= p;
    }
  }
  return ReciprocalSum{sum, sum - std::log(std::log(static_cast<double>(limit)))};
}

ExceptionalSets exceptional_sets(u64 limit, double alpha, int workers) {
  if (limit < 16) throw std::invalid_argument("limit must be >= 16");
  if (limit > kMaxHistogramLimit) throw capacity_error("limit exceeds 1e9");
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::invalid_argument("alpha must lie in (1, 2)");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const double loglog = std::log(std::log(static_cast<double>(limit)));
  ExceptionalSets r;
  r.limit = limit;
  r.alpha = alpha;
  r.omega_cap = static_cast<u64>(std::floor(alpha * loglog));
  r.smooth_threshold = std::pow(static_cast<double>(limit), 1.0 / loglog);

  const FactorSieve sieve(limit, workers);
  std::vector<u64> e1(static_cast<size_t>(workers), 0), e2(static_cast<size_t>(workers), 0);
  const auto cuts = worker_chunks(2, limit + 1, workers);
  run_workers(workers, [&](int w) {
    u64 c1 = 0, c2 = 0;
    for (u64 n = cuts[static_cast<size_t>(w)]; n < cuts[static_cast<size_t>(w) + 1]; ++n) {
      if (sieve.omega(n) > r.omega_cap) ++c1;
      if (static_cast<double>(sieve.largest_prime_factor(n)) <= r.smooth_threshold) ++c2;
    }
    e1[static_cast<size_t>(w)] = c1;
    e2[static_cast<size_t>(w)] = c2;
  });
  for (int w = 0; w < workers; ++w) {
    r.e1_size += e1[static_cast<size_t>(w)];
    r.e2_size += e2[static_cast<size_t>(w)];
  }
  r.e2_size += 1;  // n = 1 is maximally smooth (P(1) = 1)
  return r;
}

ExceedanceExponent exceedance_exponent(double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  ExceedanceExponent e;
  const double la = std::log(alpha);
  e.branch1 = 1.0 - alpha + alpha * la;
  e.branch2 = 2.0;
  e.branch3 = 2.0 - alpha - alpha * std::log(2.0) + alpha * la;
  e.value = std::min(e.branch1, std::min(e.branch2, e.branch3));
  return e;
}

DivisorHeuristic divisor_heuristic(u64 limit, int workers) {
  if (limit < 8) throw std::invalid_argument("limit must be >= 8");
  if (limit > kMaxHeuristicLimit) throw capacity_error("limit exceeds 1e8");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const FactorSieve sieve(limit, workers);
  const u64 lo = limit / 2 + 1;
  std::vector<double> ratios(limit - lo + 1);
  const auto cuts = worker_chunks(lo, limit + 1, workers);
  run_workers(workers, [&](int w) {
    for (u64 n = cuts[static_cast<size_t>(w)]; n < cuts[static_cast<size_t>(w) + 1]; ++n) {
      const double d = static_cast<double>(sieve.divisor_count(n));
      ratios[n - lo] = std::log(d) / std::log(std::log(static_cast<double>(n)));
    }
  });
  std::sort(ratios.begin(), ratios.end());
  DivisorHeuristic h;
  h.limit = limit;
  h.q1 = ratios[ratios.size() / 4];
  h.median = ratios[ratios.size() / 2];
  h.q3 = ratios[(3 * ratios.size()) / 4];
  return h;
}

}  // namespace hyplab
