#pragma once

#include <cstdint>
#include <vector>

#include "hyplab/arith.hpp"

namespace hyplab {

struct OmegaHistogram {
  u64 limit = 0;
  std::vector<u64> counts;  // counts[i] = #{1 <= n <= limit : omega(n) = i}
};

// Full histogram of distinct-prime-factor counts; bucket 0 holds n = 1.
OmegaHistogram omega_histogram(u64 limit, int workers = 1);

// counts[i] divided by the Hardy-Ramanujan style majorant
// (N / log N) (log log N + c0)^(i-1) / (i-1)!  for i >= 1.
// Entry 0 is unused (kept 0) since the majorant starts at i = 1.
std::vector<double> hr_normalized_ratios(const OmegaHistogram& h, double c0);

struct ReciprocalSum {
  double sum;  // sum of p^-v over prime powers p^v <= limit
  double gap;  // sum - log log limit
};
ReciprocalSum prime_power_reciprocal_sum(u64 limit);

struct ExceptionalSets {
  u64 limit = 0;
  double alpha = 0;
  u64 omega_cap = 0;          // floor(alpha log log limit)
  u64 e1_size = 0;            // #{n <= limit : omega(n) > omega_cap}
  double smooth_threshold = 0;  // limit^(1 / log log limit)
  u64 e2_size = 0;            // #{n <= limit : P(n) <= smooth_threshold}, P(1) = 1
};
// Sizes of the two discard classes: too many prime factors, or too smooth.
// Requires limit >= 16 (so log log limit > 1) and alpha in (1, 2).
ExceptionalSets exceptional_sets(u64 limit, double alpha, int workers = 1);

// The three competing exponents behind the omega-exceedance bound and their
// minimum. The curve is maximized at alpha = 1/log 2, where branches 1 and 3
// cross and the minimum equals the eta constant from arith.
struct ExceedanceExponent {
  double branch1;  // 1 - alpha + alpha log alpha
  double branch2;  // 2
  double branch3;  // 2 - alpha - alpha log 2 + alpha log alpha
  double value;    // min of the three
};
ExceedanceExponent exceedance_exponent(double alpha);

struct DivisorHeuristic {
  u64 limit = 0;
  double q1 = 0, median = 0, q3 = 0;  // of log d(n) / log log n over (limit/2, limit]
};
// Quartile summary of the normalized divisor-count exponent on the top dyadic
// block; the heuristic mass sits near 1 (i.e. d(n) ~ (log n)^(log 2) scale
// typical, with spread). Requires 8 <= limit <= 1e8.
DivisorHeuristic divisor_heuristic(u64 limit, int workers = 1);

}  // namespace hyplab
