#include "hyplab/sector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/parallel.hpp"

#if defined(HYPLAB_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace hyplab {

namespace {

constexpr u64 kMaxSectorX = 10'000'000'000ull;
constexpr u64 kMaxDyadicN = 100'000'000ull;
// Relative half-width of the ambiguity band around a tan bound; anything
// inside is re-adjudicated at higher precision. Long double error here is
// a few ulp (~1e-18 relative), so 1e-15 is a comfortable blanket.
constexpr long double kGuard = 1e-15L;
const double kHalfPi = std::numbers::pi / 2.0;  // nearest double below pi/2

#if defined(HYPLAB_HAVE_QUADMATH)
using quad = __float128;
quad quad_tan(double bound) { return tanq(static_cast<quad>(bound)); }
#else
using quad = long double;
quad quad_tan(double bound) { return tanl(static_cast<long double>(bound)); }
#endif

// A window endpoint with its tangent precomputed at both precisions.
// trivial < 0: every first-quadrant pair angle is >= bound (bound <= 0);
// trivial > 0: no pair angle reaches it (bound >= pi/2, since arctan(b/a)
// with a >= 1 stays strictly below pi/2).
struct PreparedBound {
  int trivial = 0;
  long double tan_ld = 0;
  quad tan_q = 0;

  explicit PreparedBound(double bound) {
    if (bound <= 0.0) {
      trivial = -1;
    } else if (bound >= kHalfPi) {
      trivial = 1;
    } else {
      tan_ld = tanl(static_cast<long double>(bound));
      tan_q = quad_tan(bound);
    }
  }

  bool ge(u64 a, u64 b) const {  // arctan(b/a) >= bound
    if (trivial) return trivial < 0;
    const long double lhs = static_cast<long double>(b);
    const long double rhs = static_cast<long double>(a) * tan_ld;
    const long double band = kGuard * std::max({lhs, rhs, 1.0L});
    if (lhs > rhs + band) return true;
    if (lhs < rhs - band) return false;
    return static_cast<quad>(b) >= static_cast<quad>(a) * tan_q;
  }

  bool ge_reference(u64 a, u64 b) const {
    if (trivial) return trivial < 0;
    return static_cast<quad>(b) >= static_cast<quad>(a) * tan_q;
  }
};

void validate_query(const SectorQuery& q) {
  if (q.x < 1) throw std::invalid_argument("x must be >= 1");
  if (q.x > kMaxSectorX) throw capacity_error("sector x exceeds 1e10");
  if (!(q.beta >= 0.0 && q.beta <= kHalfPi))
    throw std::invalid_argument("beta must lie in [0, pi/2]");
  if (!(q.gamma >= 0.0 && q.gamma <= kHalfPi))
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
}

// Core scan. Loops a up to sqrt(x), restricts b to a slightly widened
// tangent range, then applies the exact window test and the primality test.
// certify_cap != 0 additionally asserts a*b <= certify_cap for every counted
// pair (the dyadic chain guarantees it; violation means a bug, so: throw).
u64 scan_sector(u64 x, const PreparedBound& lo, const PreparedBound& hi, int workers,
                u64 certify_cap) {
  if (lo.trivial > 0) return 0;  // window floor at/above pi/2: nothing qualifies
  std::vector<u64> counts(static_cast<size_t>(workers), 0);
  run_workers(workers, [&](int w) {
    u64 local = 0;
    for (u64 a = 1 + static_cast<u64>(w); a * a < x; a += static_cast<u64>(workers)) {
      const u64 b_cap = isqrt(x - a * a);
      if (b_cap < 1) continue;
      u64 b_from = 1;
      if (lo.trivial == 0) {
        const long double t = static_cast<long double>(a) * lo.tan_ld;
        if (t > 2.0L) b_from = static_cast<u64>(t - 2.0L);
      }
      u64 b_to = b_cap;
      if (hi.trivial == 0) {
        const long double t = static_cast<long double>(a) * hi.tan_ld + 2.0L;
        if (t < static_cast<long double>(b_cap)) b_to = static_cast<u64>(t);
      }
      for (u64 b = b_from; b <= b_to; ++b) {
        if (!lo.ge(a, b) || hi.ge(a, b)) continue;
        const auto v = sum_of_squares(a, b);
        if (!v || !is_prime(*v)) continue;
        if (certify_cap != 0 && a * b > certify_cap)
          throw std::logic_error("dyadic chain violated: counted pair exceeds product cap");
        ++local;
      }
    }
    counts[static_cast<size_t>(w)] = local;
  });
  u64 total = 0;
  for (u64 c : counts) total += c;
  return total;
}

}  // namespace

bool angle_ge(u64 a, u64 b, double bound) {
  if (a < 1 || b < 1) throw std::invalid_argument("pair coordinates must be >= 1");
  return PreparedBound(bound).ge(a, b);
}

bool angle_ge_reference(u64 a, u64 b, double bound) {
  if (a < 1 || b < 1) throw std::invalid_argument("pair coordinates must be >= 1");
  return PreparedBound(bound).ge_reference(a, b);
}

bool angle_in_window(u64 a, u64 b, double lo, double hi) {
  return angle_ge(a, b, lo) && !angle_ge(a, b, hi);
}

u64 sector_count(const SectorQuery& q, int workers) {
  validate_query(q);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (q.gamma == 0.0) return 0;
  const PreparedBound lo(q.beta);
  const PreparedBound hi(q.beta + q.gamma);
  return scan_sector(q.x, lo, hi, workers, 0);
}

double hl_ratio(const SectorQuery& q, int workers) {
  validate_query(q);
  if (!(q.gamma > 0.0)) throw std::domain_error("ratio needs gamma > 0");
  if (q.x < 2) throw std::domain_error("ratio needs x >= 2");
  const u64 c = sector_count(q, workers);
  return static_cast<double>(c) * std::log(static_cast<double>(q.x)) /
         (q.gamma * static_cast<double>(q.x));
}

bool hl_gamma_in_range(const SectorQuery& q) {
  validate_query(q);
  return q.gamma >= std::pow(static_cast<double>(q.x), -0.381);
}

DyadicBound dyadic_lower_bound(u64 n, int workers) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxDyadicN) throw capacity_error("dyadic n exceeds 1e8");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  DyadicBound out;
  out.n = n;
  const unsigned imax = static_cast<unsigned>(
      std::floor(std::log(static_cast<double>(n)) / (10.0 * std::log(2.0))));
  for (unsigned i = 1; i <= imax; ++i) {
    DyadicSector s;
    s.index = i;
    // pi / 2^(i+1) is exact in binary, so adjacent windows share endpoint
    // doubles and tile [pi/4 / 2^(imax-1), pi/2) without gaps or overlap.
    s.beta = std::numbers::pi / std::pow(2.0, static_cast<double>(i + 1));
    s.gamma = s.beta;
    s.x = (n << i) >> 2;  // 2^(i-2) n, floored for i = 1
    const PreparedBound lo(s.beta);
    const PreparedBound hi(s.beta + s.gamma);
    s.count = scan_sector(s.x, lo, hi, workers, n);
    out.total += s.count;
    out.sectors.push_back(s);
  }
  return out;
}

bool jordan_inequality_holds(const std::vector<double>& grid, double tol) {
  const double slope = 2.0 / std::numbers::pi;
  for (double t : grid) {
    if (!(t >= 0.0 && t <= kHalfPi + tol))
      throw std::invalid_argument("grid point outside [0, pi/2]");
    const double s = std::sin(t);
    if (slope * t > s + tol) return false;
    if (s > t + tol) return false;
  }
  return true;
}

}  // namespace hyplab
