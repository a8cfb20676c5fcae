#include "hyplab/legset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/parallel.hpp"

namespace hyplab {

namespace {

constexpr u64 kMaxEnumerateLimit = 1'000'000'000;
constexpr u64 kMaxMultiplicityLimit = 100'000'000;
constexpr u64 kWitnessAutoCutoff = 10'000'000;

u64 bit_words(u64 limit) { return (limit >> 6) + 1; }

void set_bit(std::vector<u64>& bits, u64 n) { bits[n >> 6] |= u64{1} << (n & 63); }

// Opposite parity and coprimality are necessary for a^2 + b^2 to be an odd
// prime, which every member value here must be (the only even prime, 2,
// comes from the excluded pair (1,1)).
bool mixed_pair_ok(u64 a, u64 b) { return ((a ^ b) & 1) != 0 && gcd(a, b) == 1; }

struct WorkerTable {
  std::vector<u64> bits;
  std::unordered_map<u64, std::pair<u64, u64>> witness;
};

void note_witness(std::unordered_map<u64, std::pair<u64, u64>>& w, u64 n, u64 a, u64 b) {
  auto [it, inserted] = w.try_emplace(n, a, b);
  if (!inserted && std::make_pair(a, b) < it->second) it->second = {a, b};
}

bool want_witness(Witnesses policy, u64 limit) {
  switch (policy) {
    case Witnesses::kOn: return true;
    case Witnesses::kOff: return false;
    default: return limit <= kWitnessAutoCutoff;
  }
}

MembershipTable merge_tables(LegKind kind, u64 limit, std::vector<WorkerTable>& parts) {
  MembershipTable t;
  t.kind = kind;
  t.limit = limit;
  t.bits.assign(bit_words(limit), 0);
  for (auto& part : parts) {
    for (size_t i = 0; i < t.bits.size(); ++i) t.bits[i] |= part.bits[i];
    for (auto& [n, ab] : part.witness) note_witness(t.witness, n, ab.first, ab.second);
  }
  u64 c = 0;
  for (u64 w : t.bits) c += static_cast<u64>(std::popcount(w));
  t.count = c;
  return t;
}

}  // namespace

std::string to_string(LegKind kind) {
  switch (kind) {
    case LegKind::kOdd: return "odd";
    case LegKind::kEven: return "even";
    default: return "product";
  }
}

LegKind leg_kind_from_string(const std::string& s) {
  if (s == "odd") return LegKind::kOdd;
  if (s == "even") return LegKind::kEven;
  if (s == "product") return LegKind::kProduct;
  throw std::invalid_argument("unknown leg kind: " + s);
}

u64 MembershipTable::count_up_to(u64 n) const {
  if (n > limit) n = limit;
  const u64 full = (n + 1) >> 6;
  u64 c = 0;
  for (u64 i = 0; i < full; ++i) c += static_cast<u64>(std::popcount(bits[i]));
  const u64 rem = (n + 1) & 63;
  if (rem) c += static_cast<u64>(std::popcount(bits[full] & ((u64{1} << rem) - 1)));
  return c;
}

std::vector<u64> MembershipTable::members() const {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 n = 1; n <= limit; ++n)
    if (member(n)) out.push_back(n);
  return out;
}

MembershipTable enumerate_legs(LegKind kind, u64 limit, const PairFilter& filter,
                               int workers, Witnesses witnesses) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (limit > kMaxEnumerateLimit) throw capacity_error("enumeration limit exceeds 1e9");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const bool track = want_witness(witnesses, limit);
  // For kEven the member is 2ab, so pair products only reach limit/2.
  const u64 product_cap = kind == LegKind::kEven ? limit / 2 : limit;

  std::vector<WorkerTable> parts(static_cast<size_t>(workers));
  run_workers(workers, [&](int w) {
    auto& part = parts[static_cast<size_t>(w)];
    part.bits.assign(bit_words(limit), 0);
    u64 row = 0;  // strided row assignment balances the skewed outer loop
    for (u64 a = 1; a * a <= product_cap; ++a) {
      if (kind == LegKind::kOdd && (a & 1) == 0) continue;
      if (row++ % static_cast<u64>(workers) != static_cast<u64>(w)) continue;
      const u64 bmax = product_cap / a;
      const u64 bstep = kind == LegKind::kOdd ? 2 : 1;
      for (u64 b = a; b <= bmax; b += bstep) {
        if (kind == LegKind::kOdd) {
          // both odd by construction
        } else {
          if (a == 1 && b == 1) continue;
          if (!mixed_pair_ok(a, b)) continue;
        }
        if (filter && !filter(a, b)) continue;
        const auto value = sum_of_squares(a, b);
        if (!value) throw std::logic_error("a^2+b^2 overflow below documented caps");
        const u64 v = kind == LegKind::kOdd ? *value / 2 : *value;
        if (!is_prime(v)) continue;
        const u64 n = kind == LegKind::kEven ? 2 * a * b : a * b;
        if (n < 1 || n > limit) continue;
        set_bit(part.bits, n);
        if (track) note_witness(part.witness, n, a, b);
      }
    }
  });
  return merge_tables(kind, limit, parts);
}

MembershipTable even_legs_by_parametrisation(u64 limit, int workers, Witnesses witnesses) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (limit > kMaxEnumerateLimit) throw capacity_error("enumeration limit exceeds 1e9");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const bool track = want_witness(witnesses, limit);
  std::vector<WorkerTable> parts(static_cast<size_t>(workers));
  run_workers(workers, [&](int w) {
    auto& part = parts[static_cast<size_t>(w)];
    part.bits.assign(bit_words(limit), 0);
    u64 row = 0;
    for (u64 x = 1; 2 * x * x <= limit; ++x) {
      if (row++ % static_cast<u64>(workers) != static_cast<u64>(w)) continue;
      for (u64 y = x; 2 * x * y <= limit; ++y) {
        const auto value = sum_of_squares(x, y);
        if (!value) throw std::logic_error("x^2+y^2 overflow below documented caps");
        if ((*value & 1) == 0) continue;  // odd prime required
        if (!is_prime(*value)) continue;
        set_bit(part.bits, 2 * x * y);
        if (track) note_witness(part.witness, 2 * x * y, x, y);
      }
    }
  });
  return merge_tables(LegKind::kEven, limit, parts);
}

MultiplicityMap multiplicity_map(u64 limit, const PairFilter& filter, int workers) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (limit > kMaxMultiplicityLimit) throw capacity_error("multiplicity limit exceeds 1e8");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  std::vector<std::vector<std::uint16_t>> parts(static_cast<size_t>(workers));
  run_workers(workers, [&](int w) {
    auto& m = parts[static_cast<size_t>(w)];
    m.assign(limit + 1, 0);
    u64 row = 0;
    for (u64 a = 1; a * a <= limit; ++a) {
      if (row++ % static_cast<u64>(workers) != static_cast<u64>(w)) continue;
      for (u64 b = a; b <= limit / a; ++b) {
        if (a == 1 && b == 1) continue;
        if (!mixed_pair_ok(a, b)) continue;  // also rules out a == b
        if (filter && !filter(a, b)) continue;
        const auto value = sum_of_squares(a, b);
        if (!value || !is_prime(*value)) continue;
        m[a * b] = static_cast<std::uint16_t>(m[a * b] + 2);  // (a,b) and (b,a)
      }
    }
  });

  MultiplicityMap out;
  out.limit = limit;
  out.m.assign(limit + 1, 0);
  for (auto& part : parts) {
    for (u64 n = 0; n <= limit; ++n) {
      const u32 s = static_cast<u32>(out.m[n]) + part[n];
      if (s > 0xFFFF) throw std::overflow_error("multiplicity counter saturated");
      out.m[n] = static_cast<std::uint16_t>(s);
    }
  }
  for (u64 n = 0; n <= limit; ++n) out.total += out.m[n];
  return out;
}

std::vector<DensityPoint> density_series(LegKind kind, const std::vector<u64>& checkpoints,
                                         int workers) {
  if (checkpoints.empty()) throw std::invalid_argument("no checkpoints");
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1) throw std::invalid_argument("checkpoints must be >= 1");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("checkpoints must be strictly ascending");
  }
  // Counts only; witness tracking would be pure overhead at series scale.
  const MembershipTable t =
      enumerate_legs(kind, checkpoints.back(), nullptr, workers, Witnesses::kOff);
  std::vector<DensityPoint> out;
  out.reserve(checkpoints.size());
  for (u64 n : checkpoints) {
    const u64 c = t.count_up_to(n);
    DensityPoint p;
    p.n = n;
    p.count = c;
    p.ratio = static_cast<double>(c) / static_cast<double>(n);
    p.delta = std::log(static_cast<double>(n) / static_cast<double>(c)) /
              std::log(std::log(static_cast<double>(n)));
    out.push_back(p);
  }
  return out;
}

}  // namespace hyplab
