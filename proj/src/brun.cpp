#include "hyplab/brun.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hyplab/errors.hpp"
#include "hyplab/sieve.hpp"

namespace hyplab {

namespace {

constexpr u64 kMaxModulus = 10'000'000;  // congruence scans are O(d)
constexpr double kMaxZ = 100'000'000.0;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

// f(m) = m (a^2 + b0^2 m^2) mod d.
u64 poly_mod(const SieveInstance& inst, u64 m, u64 d) {
  const u64 a2 = mulmod(inst.a % d, inst.a % d, d);
  const u64 b2 = mulmod(inst.b0 % d, inst.b0 % d, d);
  const u64 inner = (a2 + mulmod(b2, mulmod(m, m, d), d)) % d;
  return mulmod(m, inner, d);
}

// Trial-division factorization for the small moduli used here.
std::vector<std::pair<u64, int>> factorize(u64 d) {
  std::vector<std::pair<u64, int>> fs;
  for (u64 p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  }
  if (d > 1) fs.emplace_back(d, 1);
  return fs;
}

void require_squarefree(const std::vector<std::pair<u64, int>>& fs) {
  for (auto& [p, e] : fs)
    if (e > 1) throw std::domain_error("modulus must be squarefree");
}

}  // namespace

SieveInstance SieveInstance::make(u64 a, u64 b0, u64 x, double z) {
  if (a < 1 || b0 < 1 || x < 1) throw std::invalid_argument("a, b0, x must be >= 1");
  if ((a * b0) % 2 != 0) throw std::invalid_argument("a * b0 must be even");
  if (gcd(a, b0) != 1) throw std::invalid_argument("a and b0 must be coprime");
  if (!(z > 1.0)) throw std::invalid_argument("z must exceed 1");
  // Largest element is x (a^2 + b0^2 x^2); reject instances that overflow.
  const auto bx = checked_mul(b0, x);
  const auto inner = bx ? sum_of_squares(a, *bx) : std::nullopt;
  const auto largest = inner ? checked_mul(x, *inner) : std::nullopt;
  if (!largest) throw std::invalid_argument("sequence elements overflow 64 bits");
  return SieveInstance{a, b0, x, z};
}

Rational DensityFunction::at_prime(u64 p) const {
  if (p < 2 || !is_prime(p)) throw std::domain_error("density wants a prime");
  const bool divides = (a % p == 0) || (b0 % p == 0);
  if (divides || p % 4 == 3 || p == 2) return Rational(1, static_cast<i128>(p));
  return Rational(3, static_cast<i128>(p));
}

Rational g_eval(const DensityFunction& g, u64 d) {
  if (d < 1) throw std::domain_error("modulus must be >= 1");
  const auto fs = factorize(d);
  require_squarefree(fs);
  Rational r(1);
  for (auto& [p, e] : fs) r = r * g.at_prime(p);
  return r;
}

std::vector<u64> congruence_roots(const SieveInstance& inst, u64 d) {
  if (d < 1 || d > kMaxModulus) throw capacity_error("modulus outside [1, 1e7]");
  std::vector<u64> roots;
  for (u64 r = 0; r < d; ++r)
    if (poly_mod(inst, r, d) == 0) roots.push_back(r);
  return roots;
}

u64 local_solution_count(const SieveInstance& inst, u64 p) {
  if (!is_prime(p)) throw std::domain_error("local count wants a prime");
  return congruence_roots(inst, p).size();
}

u64 sequence_count_divisible(const SieveInstance& inst, u64 d) {
  const auto roots = congruence_roots(inst, d);
  u64 c = 0;
  for (u64 r : roots) {
    if (r == 0)
      c += inst.x / d;
    else if (r <= inst.x)
      c += (inst.x - r) / d + 1;
  }
  return c;
}

Rational remainder_term(const SieveInstance& inst, u64 d) {
  const auto fs = factorize(d);
  require_squarefree(fs);
  for (auto& [p, e] : fs)
    if (static_cast<double>(p) >= inst.z)
      throw std::domain_error("modulus has a prime factor at or above z");
  const Rational exact(static_cast<i128>(sequence_count_divisible(inst, d)));
  const Rational expected =
      Rational(static_cast<i128>(inst.x)) * g_eval(DensityFunction{inst.a, inst.b0}, d);
  return exact - expected;
}

VofZ v_of_z(const DensityFunction& g, double z) {
  if (!(z > 1.0)) throw std::invalid_argument("z must exceed 1");
  if (z > kMaxZ) throw capacity_error("z exceeds 1e8");
  double v = 1.0;
  if (z > 2.0) {
    const u64 below = static_cast<u64>(std::ceil(z)) - 1;  // primes p < z
    for (u64 p : primes_up_to(below)) {
      v *= 1.0 - g.at_prime(p).to_double();
      if (v <= 0.0) throw std::domain_error("sieve product collapsed to <= 0");
    }
  }
  const double lz = std::log(z);
  return VofZ{v, v * lz * lz};
}

SiftingDiagnostics sifting_condition(const SieveInstance& inst) {
  const DensityFunction g{inst.a, inst.b0};
  const double vz = v_of_z(g, inst.z).value;
  const double lx = std::log(static_cast<double>(inst.x));
  const double inner = lx / vz;
  if (!(inner > 1.0)) throw std::domain_error("sifting condition needs log(x)/V(z) > 1");
  const double rhs = lx / (solve_brun_constant() * std::log(inner));
  const double lhs = std::log(inst.z);
  return SiftingDiagnostics{lhs, rhs, vz, lhs <= rhs};
}

double sifting_cutoff(double n) {
  if (!(n > std::exp(std::exp(1.0)))) throw std::domain_error("need log log n > 1");
  const double k = std::log(std::log(n));
  return std::pow(n, 1.0 / (k * k * k));
}

std::vector<SieveInstance> sample_admissible_instances(int count, u64 seed, u64 x,
                                                       double z, u64 ab_max) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  if (ab_max < 2) throw std::invalid_argument("ab_max must be >= 2");
  std::mt19937_64 rng(seed);
  std::vector<SieveInstance> out;
  out.reserve(static_cast<size_t>(count));
  while (out.size() < static_cast<size_t>(count)) {
    const u64 a = 1 + rng() % ab_max;
    const u64 b0 = 1 + rng() % ab_max;
    if ((a * b0) % 2 != 0 || gcd(a, b0) != 1) continue;
    out.push_back(SieveInstance::make(a, b0, x, z));
  }
  return out;
}

}  // namespace hyplab
