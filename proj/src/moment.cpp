#include "hyplab/moment.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/parallel.hpp"
#include "hyplab/sieve.hpp"

namespace hyplab {

namespace {

constexpr u64 kMaxMomentLimit = 10'000'000;

// Same necessary conditions as the leg-set scans: a^2 + b^2 can only be an
// odd prime when the pair is coprime with opposite parity.
bool pair_admissible(u64 a, u64 b) { return ((a ^ b) & 1) != 0 && gcd(a, b) == 1; }

struct Tally {
  u64 l0 = 0, l1 = 0, l2 = 0, l3 = 0, kept = 0;
  std::vector<std::uint16_t> m;
};

}  // namespace

LConfig LConfig::make(u64 n, double epsilon) {
  if (n < 4) throw std::invalid_argument("n must be >= 4 so log log n > 0");
  if (n > kMaxMomentLimit) throw capacity_error("pair-set n exceeds 1e7");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  LConfig c;
  c.n = n;
  c.epsilon = epsilon;
  const double ll = std::log(std::log(static_cast<double>(n)));
  c.omega_bound = (1.0 + epsilon) * ll;
  c.t = static_cast<u64>(std::floor(c.omega_bound));
  c.smooth_threshold = std::pow(static_cast<double>(n), 1.0 / ll);
  return c;
}

SecondMoment second_moment(const MultiplicityMap& m) {
  SecondMoment out;
  for (u64 n = 1; n <= m.limit; ++n) {
    const u64 v = m.m[n];
    out.s_n += v * v;
    out.diagonal += v;
    if (v > 0) ++out.distinct;
  }
  out.off_diagonal = out.s_n - out.diagonal;
  return out;
}

LReport build_l_sets(const LConfig& cfg, int workers) {
  if (cfg.n < 4 || cfg.n > kMaxMomentLimit || !(cfg.epsilon > 0.0))
    throw std::invalid_argument("config not produced by LConfig::make");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const FactorSieve sieve(cfg.n, workers);
  const auto omega = sieve.omega_table(workers);
  const auto lpf = sieve.lpf_table(workers);

  std::vector<Tally> parts(static_cast<size_t>(workers));
  run_workers(workers, [&](int w) {
    Tally& t = parts[static_cast<size_t>(w)];
    t.m.assign(cfg.n + 1, 0);
    u64 row = 0;
    for (u64 a = 1; a * a <= cfg.n; ++a) {
      if (row++ % static_cast<u64>(workers) != static_cast<u64>(w)) continue;
      // b > a: equal coordinates never qualify (their sum of squares is
      // even and exceeds 2 once ab > 1), so each unordered pair scanned
      // here stands for the two ordered mates (a,b) and (b,a).
      for (u64 b = a + 1; b <= cfg.n / a; ++b) {
        if (!pair_admissible(a, b)) continue;
        const auto value = sum_of_squares(a, b);
        if (!value || !is_prime(*value)) continue;
        const bool smooth =
            static_cast<double>(std::max(lpf[a], lpf[b])) <= cfg.smooth_threshold;
        const bool over[2] = {static_cast<double>(omega[a]) > cfg.omega_bound,
                              static_cast<double>(omega[b]) > cfg.omega_bound};
        for (int k = 0; k < 2; ++k) {
          const bool first_over = over[k];        // the mate's a-coordinate
          const bool second_over = over[1 - k];  // its b-coordinate
          ++t.l0;
          if (smooth) ++t.l1;
          if (first_over) ++t.l2;
          if (second_over) ++t.l3;
          if (!smooth && !first_over && !second_over) {
            ++t.kept;
            t.m[a * b] = static_cast<std::uint16_t>(t.m[a * b] + 1);
          }
        }
      }
    }
  });

  LReport r;
  r.cfg = cfg;
  r.multiplicities.limit = cfg.n;
  r.multiplicities.m.assign(cfg.n + 1, 0);
  for (const Tally& t : parts) {
    r.l0 += t.l0;
    r.l1 += t.l1;
    r.l2 += t.l2;
    r.l3 += t.l3;
    r.kept += t.kept;
    for (u64 n = 0; n <= cfg.n; ++n) {
      const u32 s = static_cast<u32>(r.multiplicities.m[n]) + t.m[n];
      if (s > 0xFFFF) throw std::overflow_error("multiplicity counter saturated");
      r.multiplicities.m[n] = static_cast<std::uint16_t>(s);
    }
  }
  r.multiplicities.total = r.kept;
  r.discarded = r.l0 - r.kept;
  r.moment = second_moment(r.multiplicities);
  if (r.moment.diagonal != r.kept)
    throw std::logic_error("multiplicity mass disagrees with the kept-pair count");
  if (r.moment.s_n > 0)
    r.cauchy_lower = static_cast<double>(r.kept) * static_cast<double>(r.kept) /
                     static_cast<double>(r.moment.s_n);
  const double logn = std::log(static_cast<double>(cfg.n));
  r.trend_ratio = static_cast<double>(r.moment.s_n) /
                  (static_cast<double>(cfg.n) * std::pow(logn, constants().log_four_minus_one));
  return r;
}

CauchyCheck cauchy_bound_check(const LConfig& cfg, int workers) {
  return cauchy_bound_check(build_l_sets(cfg, workers), workers);
}

CauchyCheck cauchy_bound_check(const LReport& r, int workers) {
  const MembershipTable products =
      enumerate_legs(LegKind::kProduct, r.cfg.n, nullptr, workers, Witnesses::kOff);
  CauchyCheck c;
  c.kept = r.kept;
  c.s_n = r.moment.s_n;
  c.lower = r.cauchy_lower;
  c.c_of_n = products.count;
  // kept^2 / s_n <= c_of_n, cleared of the division: empty sets pass.
  c.pass = c.s_n == 0
               ? c.kept == 0
               : static_cast<u128>(c.kept) * c.kept <= static_cast<u128>(c.s_n) * c.c_of_n;
  return c;
}

GcdQuadruple gcd_decompose(u64 a, u64 b, u64 c, u64 d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::invalid_argument("all four coordinates must be >= 1");
  if (static_cast<u128>(a) * b != static_cast<u128>(c) * d)
    throw std::invalid_argument("products differ; nothing to decompose");
  GcdQuadruple q;
  q.g = gcd(a, c);
  q.u = a / q.g;
  q.v = c / q.g;
  // u b = v d with gcd(u, v) = 1 forces v | b.
  if (b % q.v != 0) throw std::logic_error("cofactor not divisible as required");
  q.w = b / q.v;
  if (q.v * q.w != b || q.u * q.w != d)
    throw std::logic_error("decomposition failed to reconstruct the inputs");
  return q;
}

OmegaWindow restricted_window(u64 n, double kappa) {
  if (n < 16) throw std::invalid_argument("n must be >= 16");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
  const double ll = std::log(std::log(static_cast<double>(n)));
  const double center = ll / (2.0 * std::log(2.0));
  return {center - kappa * ll, center + kappa * ll};
}

u64 restricted_first_moment(u64 n, double kappa, int workers) {
  if (n > kMaxMomentLimit) throw capacity_error("pair-set n exceeds 1e7");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto [lo, hi] = restricted_window(n, kappa);

  const FactorSieve sieve(n, workers);
  const auto omega = sieve.omega_table(workers);

  std::vector<u64> counts(static_cast<size_t>(workers), 0);
  run_workers(workers, [&](int w) {
    u64 local = 0;
    u64 row = 0;
    for (u64 a = 1; a * a <= n; ++a) {
      if (row++ % static_cast<u64>(workers) != static_cast<u64>(w)) continue;
      const double wa = omega[a];
      const bool a_in = wa >= lo && wa <= hi;
      for (u64 b = a + 1; b <= n / a; ++b) {
        // the window condition is symmetric, so both ordered mates share it
        const double wb = omega[b];
        if (!a_in || wb < lo || wb > hi) continue;
        if (!pair_admissible(a, b)) continue;
        const auto value = sum_of_squares(a, b);
        if (!value || !is_prime(*value)) continue;
        local += 2;
      }
    }
    counts[static_cast<size_t>(w)] = local;
  });
  u64 total = 0;
  for (u64 c : counts) total += c;
  return total;
}

}  // namespace hyplab
