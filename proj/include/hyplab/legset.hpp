#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyplab/arith.hpp"

namespace hyplab {

// The three leg families a membership table can describe:
//   kOdd      marks n = ab with a, b odd and (a^2 + b^2)/2 prime
//             (opposite parity gives a half-integer, both even gives an even
//              value > 2, so only both-odd pairs can qualify);
//   kEven     marks n = 2xy with x^2 + y^2 an odd prime;
//   kProduct  marks n = ab > 1 with a^2 + b^2 prime.
enum class LegKind { kOdd, kEven, kProduct };

std::string to_string(LegKind kind);
LegKind leg_kind_from_string(const std::string& s);

// Optional per-pair restriction applied after the parity/gcd prefilters and
// before the primality test. Must be pure: results feed worker merges.
using PairFilter = std::function<bool(u64 a, u64 b)>;

enum class Witnesses { kAuto, kOn, kOff };  // kAuto: tracked iff limit <= 1e7

struct MembershipTable {
  LegKind kind = LegKind::kProduct;
  u64 limit = 0;
  u64 count = 0;            // number of set bits
  std::vector<u64> bits;    // bit n set <=> n is a member
  // n -> least admissible pair (smallest first coordinate, then second).
  // For kOdd/kProduct the pair (a, b) has ab = n; for kEven it is the (x, y)
  // with 2xy = n. Empty when witness tracking is off.
  std::unordered_map<u64, std::pair<u64, u64>> witness;

  bool member(u64 n) const {
    return n >= 1 && n <= limit && (bits[n >> 6] >> (n & 63)) & 1;
  }
  u64 count_up_to(u64 n) const;   // members in [1, min(n, limit)]
  std::vector<u64> members() const;
};

// Scans pairs (outer leg up to sqrt(limit), inner up to limit/outer) and
// marks members. Workers take strided slices of the outer loop into private
// bit buffers, merged by OR; witnesses merge by the least-pair rule, so the
// result is identical for every worker count.
MembershipTable enumerate_legs(LegKind kind, u64 limit,
                               const PairFilter& filter = nullptr, int workers = 1,
                               Witnesses witnesses = Witnesses::kAuto);

// Independent path for the even family: loops (x, y) directly with
// 2xy <= limit and tests x^2 + y^2 literally, no prefilters. Exists so the
// doubling identity between the even and product families can be checked
// across two code paths that share nothing but is_prime.
MembershipTable even_legs_by_parametrisation(u64 limit, int workers = 1,
                                             Witnesses witnesses = Witnesses::kAuto);

struct MultiplicityMap {
  u64 limit = 0;
  std::vector<std::uint16_t> m;  // m[n] = ordered admissible pairs with ab = n
  u64 total = 0;                 // sum over n, i.e. the ordered-pair count
};

// m(n) = #{ordered (a, b) : ab = n, a^2 + b^2 prime}; n = 1 stays 0.
// Counters are 16-bit; the scan throws on saturation (cannot happen below
// the 1e8 cap, where max multiplicity is far smaller).
MultiplicityMap multiplicity_map(u64 limit, const PairFilter& filter = nullptr,
                                 int workers = 1);

struct DensityPoint {
  u64 n;
  u64 count;
  double ratio;  // count / n
  double delta;  // log(n / count) / log log n; meaningful once n is past e
};

// One enumeration at the largest checkpoint, prefix counts for the rest.
// Checkpoints must be strictly ascending and >= 1.
std::vector<DensityPoint> density_series(LegKind kind, const std::vector<u64>& checkpoints,
                                         int workers = 1);

}  // namespace hyplab
