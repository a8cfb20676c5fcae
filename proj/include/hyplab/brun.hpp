#pragma once

#include <cstdint>
#include <vector>

#include "hyplab/arith.hpp"
#include "hyplab/rational.hpp"

namespace hyplab {

// One sifted sequence m (a^2 + b0^2 m^2) for 1 <= m <= x. Admissible means
// a*b0 even and gcd(a, b0) = 1; make() rejects anything else, and rejects
// parameters whose largest sequence element would overflow 64 bits.
// z is the sifting cutoff carried with the instance.
struct SieveInstance {
  u64 a = 1;
  u64 b0 = 2;
  u64 x = 1;
  double z = 2.0;

  static SieveInstance make(u64 a, u64 b0, u64 x, double z);
};

// Sifting density: g(p) = 1/p when p divides a*b0 or p = 3 (mod 4),
// g(p) = 3/p otherwise (p = 1 mod 4, p coprime to a*b0); completely
// multiplicative over squarefree d. Note g(2) = 1/2 always: a*b0 is even
// for every admissible instance.
struct DensityFunction {
  u64 a = 1;
  u64 b0 = 2;

  Rational at_prime(u64 p) const;
};

// g(d) for squarefree d >= 1 (domain error on a squared factor).
Rational g_eval(const DensityFunction& g, u64 d);

// Residues r mod d with r (a^2 + b0^2 r^2) = 0 (mod d), ascending.
std::vector<u64> congruence_roots(const SieveInstance& inst, u64 d);

// Number of those residues for a prime p; equals g(p) * p exactly.
u64 local_solution_count(const SieveInstance& inst, u64 p);

// |A_d| = #{1 <= m <= x : d divides m (a^2 + b0^2 m^2)}.
u64 sequence_count_divisible(const SieveInstance& inst, u64 d);

// r_d = |A_d| - x g(d), exact. d must be squarefree with all prime factors
// below inst.z. The accompanying bound says |r_d| <= g(d) d.
Rational remainder_term(const SieveInstance& inst, u64 d);

struct VofZ {
  double value;          // product of (1 - g(p)) over primes p < z
  double log_sq_ratio;   // value * (log z)^2, the scale the lower bound lives on
};
VofZ v_of_z(const DensityFunction& g, double z);

// Checks log z <= log x / (c log(V(z)^{-1} log x)) with c the constant from
// solve_brun_constant(). Asymptotically implied by x >= N^(1/log log N) and
// V(z) >> (log z)^-2, but evaluated honestly at the given finite parameters.
struct SiftingDiagnostics {
  double lhs;   // log z
  double rhs;
  double v_z;
  bool pass;
};
SiftingDiagnostics sifting_condition(const SieveInstance& inst);

// z = n^((log log n)^-3), the cutoff used by the sifting experiments.
double sifting_cutoff(double n);

// Seeded admissible instances for property suites: a, b0 uniform on
// [1, ab_max] with rejection until a*b0 is even and gcd(a, b0) = 1.
// Values derive from raw mt19937_64 draws, so the stream is stable.
std::vector<SieveInstance> sample_admissible_instances(int count, u64 seed, u64 x,
                                                       double z, u64 ab_max = 50);

}  // namespace hyplab
