#pragma once

#include <cstdint>
#include <optional>

namespace hyplab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Overflow-checked building blocks. Every a^2 + b^2 formed anywhere in the
// library goes through these; a candidate that does not fit in 64 bits is
// rejected, never wrapped.
std::optional<u64> checked_add(u64 x, u64 y);
std::optional<u64> checked_mul(u64 x, u64 y);
std::optional<u64> sum_of_squares(u64 a, u64 b);

u64 gcd(u64 x, u64 y);

// Floor of sqrt(n), exact for all u64.
u64 isqrt(u64 n);

// Deterministic Miller-Rabin, exact for every n < 2^64. Small-prime trial
// division runs first, which also serves as the cheap prefilter for the
// pair scans (most a^2 + b^2 candidates die on a residue test here).
bool is_prime(u64 n);

// Unique root c in [3, 4] of (c/e)^c = e, equivalently c(log c - 1) = 1.
// Bisected well past 1e-12.
double solve_brun_constant();

// Pinned constants shared by the experiments.
struct Constants {
  double eta;                 // 1 - (1 + log log 2)/log 2, the Erdos-Ford-Tenenbaum exponent
  double alpha_star;          // 1/log 2, argmax of the exceedance exponent curve
  double log_four_minus_one;  // exponent in the lower-bound direction
  double brun_c;              // solve_brun_constant()
};
Constants constants();

}  // namespace hyplab
