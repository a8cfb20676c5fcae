#pragma once

#include <cstdint>

#include "hyplab/arith.hpp"
#include "hyplab/legset.hpp"

namespace hyplab {

// Parameters for the filtered pair-set construction over products <= n.
// omega_bound is the real threshold (1 + epsilon) log log n, compared
// strictly; t is its floor, reported because downstream heuristics quote the
// integer. smooth_threshold = n^(1 / log log n).
struct LConfig {
  u64 n = 0;
  double epsilon = 0.0;
  u64 t = 0;
  double omega_bound = 0.0;
  double smooth_threshold = 0.0;

  // n in [4, 1e7] so log log n > 0 and the factor table fits; epsilon > 0.
  static LConfig make(u64 n, double epsilon);
};

struct SecondMoment {
  u64 s_n = 0;           // sum of m(n)^2: quadruples (a,b,c,d) with ab = cd
  u64 diagonal = 0;      // sum of m(n): quadruples with (a,b) = (c,d)
  u64 off_diagonal = 0;  // s_n - diagonal
  u64 distinct = 0;      // products n with m(n) > 0
};

SecondMoment second_moment(const MultiplicityMap& m);

// Everything one construction pass produces. Ordered-pair counts throughout:
//   l0   pairs (a, b) with 1 < ab <= n and a^2 + b^2 prime;
//   l1   those with P(ab) <= smooth_threshold;
//   l2   those with omega(a) > omega_bound;  l3  same for omega(b);
//   kept = l0 - #(union), decided per pair by flags, never by size arithmetic.
struct LReport {
  LConfig cfg;
  u64 l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  u64 discarded = 0;  // #(l1 set + l2 set + l3 set) as a set union
  u64 kept = 0;       // the surviving pair count
  MultiplicityMap multiplicities;  // restricted to surviving pairs
  SecondMoment moment;
  double cauchy_lower = 0.0;  // kept^2 / s_n, 0 when s_n = 0
  double trend_ratio = 0.0;   // s_n / (n (log n)^(log 4 - 1))
};

LReport build_l_sets(const LConfig& cfg, int workers = 1);

// lower <= c_of_n is rechecked exactly (kept^2 <= s_n * c_of_n in 128-bit
// integers); c_of_n comes from the product-family enumeration, a code path
// that shares nothing with the pair scan here except is_prime.
struct CauchyCheck {
  u64 kept = 0;
  u64 s_n = 0;
  double lower = 0.0;
  u64 c_of_n = 0;
  bool pass = false;
};

CauchyCheck cauchy_bound_check(const LReport& r, int workers = 1);
CauchyCheck cauchy_bound_check(const LConfig& cfg, int workers = 1);

// For ab = cd: g = gcd(a, c), a = g u, c = g v, and the cofactor w with
// b = v w, d = u w. Throws if ab != cd (checked in 128 bits).
struct GcdQuadruple {
  u64 g = 0, u = 0, v = 0, w = 0;
};

GcdQuadruple gcd_decompose(u64 a, u64 b, u64 c, u64 d);

// The inclusive omega window used by restricted_first_moment:
// (1 / (2 log 2)) log log n plus/minus kappa * log log n.
struct OmegaWindow {
  double lo = 0.0;
  double hi = 0.0;
};
OmegaWindow restricted_window(u64 n, double kappa);

// Ordered pairs (a, b) with 1 < ab <= n, a^2 + b^2 prime, and both omega(a)
// and omega(b) inside restricted_window(n, kappa). n in [16, 1e7]; kappa > 0.
u64 restricted_first_moment(u64 n, double kappa, int workers = 1);

}  // namespace hyplab
