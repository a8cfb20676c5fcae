#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "hyplab/arith.hpp"
#include "oracles.hpp"

using namespace hyplab;

TEST_CASE("primality matches a sieve exhaustively up to 1e6") {
  const u64 limit = 1'000'000;
  std::vector<bool> composite(limit + 1, false);
  u64 primes = 0;
  for (u64 n = 2; n <= limit; ++n) {
    if (!composite[n]) {
      ++primes;
      for (u64 k = n * n; k <= limit; k += n) composite[k] = true;
    }
    REQUIRE(is_prime(n) == !composite[n]);
  }
  CHECK(primes == 78498);
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("primality handles adversarial 64-bit inputs") {
  CHECK(is_prime(100000000000031ull));        // 1e14 + 31
  CHECK(is_prime((u64{1} << 61) - 1));        // Mersenne
  CHECK_FALSE(is_prime(3215031751ull));       // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK_FALSE(is_prime(u64(3037000493) * 3037000493));  // large square
  CHECK(is_prime(18446744073709551557ull));   // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("isqrt is exact at and around squares") {
  for (u64 n = 0; n <= 70'000; ++n) {
    const u64 r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  for (u64 k : {u64{1} << 31, u64{3037000499}, u64{4294967295}}) {
    CHECK(isqrt(k * k) == k);
    CHECK(isqrt(k * k - 1) == k - 1);
  }
  CHECK(isqrt(18446744073709551615ull) == 4294967295ull);
}

TEST_CASE("checked arithmetic rejects overflow instead of wrapping") {
  CHECK(*checked_add(2, 3) == 5);
  CHECK(!checked_add(18446744073709551615ull, 1));
  CHECK(*checked_mul(1u << 16, 1u << 16) == (u64{1} << 32));
  CHECK(!checked_mul(u64{1} << 32, u64{1} << 32));
  CHECK(*sum_of_squares(3, 4) == 25);
  CHECK(!sum_of_squares(u64{1} << 32, 1));
  CHECK(*sum_of_squares(3037000499ull, 3037000499ull));  // just below the edge
}

TEST_CASE("gcd conventions") {
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(7, 0) == 7);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(1, 999983) == 1);
}

TEST_CASE("the bisected constant solves c (log c - 1) = 1") {
  const double c = solve_brun_constant();
  CHECK(std::abs(c * (std::log(c) - 1.0) - 1.0) < 1e-12);
  CHECK(c == doctest::Approx(3.591121476668622).epsilon(1e-12));
}

TEST_CASE("pinned constants") {
  const Constants k = constants();
  CHECK(k.eta == doctest::Approx(0.08607133205593431).epsilon(1e-12));
  CHECK(k.alpha_star == doctest::Approx(1.4426950408889634).epsilon(1e-12));
  CHECK(k.log_four_minus_one == doctest::Approx(0.3862943611198906).epsilon(1e-12));
  CHECK(k.brun_c == solve_brun_constant());
}
