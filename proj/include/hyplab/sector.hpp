#pragma once

#include <cstdint>
#include <vector>

#include "hyplab/arith.hpp"

namespace hyplab {

// Count lattice points (a, b), a, b >= 1, with a^2 + b^2 a prime <= x and
// arctan(b/a) inside the half-open window [beta, beta + gamma).
struct SectorQuery {
  u64 x = 0;
  double beta = 0;   // in [0, pi/2]
  double gamma = 0;  // in [0, pi/2]; 0 means an empty window
};

u64 sector_count(const SectorQuery& q, int workers = 1);

// count * log x / (gamma * x): the scale on which sector counts of this kind
// are bounded below. Reported for inspection, never asserted (the implied
// constant is not pinned by anything checkable here).
double hl_ratio(const SectorQuery& q, int workers = 1);

// Whether gamma >= x^-0.381, the published validity floor for the
// sector lower bound. Informational.
bool hl_gamma_in_range(const SectorQuery& q);

// Whether arctan(b/a) >= bound, resolved against the exact double `bound`:
// long double tan cross-multiplication with a guard band, re-adjudicated in
// quad precision near the boundary. angle_ge_reference always takes the
// quad-precision path; tests sweep pairs to confirm agreement.
bool angle_ge(u64 a, u64 b, double bound);
bool angle_ge_reference(u64 a, u64 b, double bound);
bool angle_in_window(u64 a, u64 b, double lo, double hi);  // [lo, hi)

// Sector plan whose windows [pi/2^(i+1), pi/2^i) partition angles and whose
// radii 2^(i-2) n keep every counted pair's leg product at or below n;
// the per-pair product check is enforced during the scan, so the total is a
// certified lower bound for the ordered-pair count of the product family.
struct DyadicSector {
  unsigned index = 0;
  double beta = 0, gamma = 0;
  u64 x = 0;
  u64 count = 0;
};
struct DyadicBound {
  u64 n = 0;
  std::vector<DyadicSector> sectors;
  u64 total = 0;
};
DyadicBound dyadic_lower_bound(u64 n, int workers = 1);

// (2/pi) t <= sin t <= t on [0, pi/2], pointwise on a grid, tolerance 1e-12.
bool jordan_inequality_holds(const std::vector<double>& grid, double tol = 1e-12);

}  // namespace hyplab
