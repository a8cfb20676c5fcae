#include <utility>
#include <vector>

#include "doctest.h"
#include "hyplab/errors.hpp"
#include "hyplab/sieve.hpp"
#include "oracles.hpp"

using namespace hyplab;

TEST_CASE("smallest prime factors and derived functions match trial division") {
  const FactorSieve s(2000);
  for (u64 n = 2; n <= 2000; ++n) {
    u64 least = n;
    for (u64 p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        least = p;
        break;
      }
    REQUIRE(s.spf(n) == least);
    REQUIRE(s.omega(n) == oracle::omega_td(n));
    REQUIRE(s.largest_prime_factor(n) == oracle::lpf_td(n));
    REQUIRE(s.divisor_count(n) == oracle::divisor_count_td(n));
  }
  CHECK(s.omega(1) == 0);
  CHECK(s.big_omega(1) == 0);
  CHECK(s.big_omega(12) == 3);
  CHECK(s.largest_prime_factor(1) == 1);
  CHECK(s.divisor_count(1) == 1);
}

TEST_CASE("divisor pairs are unordered, complete and sorted") {
  const FactorSieve s(100);
  using P = std::pair<u64, u64>;
  CHECK(s.divisor_pairs(36) ==
        std::vector<P>{{1, 36}, {2, 18}, {3, 12}, {4, 9}, {6, 6}});
  CHECK(s.divisor_pairs(97) == std::vector<P>{{1, 97}});
  CHECK(s.divisor_pairs(1) == std::vector<P>{{1, 1}});
}

TEST_CASE("prime listing agrees with known counts") {
  const FactorSieve s(1'000'000);
  CHECK(s.prime_count() == 78498);
  const auto ps = s.primes();
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 999983);
  CHECK(s.is_prime(999983));
  CHECK_FALSE(s.is_prime(999981));
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("segment size and worker count never change the table") {
  const FactorSieve small_seg(1'000'000, 1, u64{1} << 14);
  const FactorSieve big_seg(1'000'000, 1, u64{1} << 20);
  CHECK(small_seg.raw() == big_seg.raw());
  const FactorSieve threaded(1'000'000, 4, u64{1} << 14);
  CHECK(threaded.raw() == small_seg.raw());
}

TEST_CASE("bulk tables agree with the per-integer chases") {
  const FactorSieve s(10'000);
  const auto omegas = s.omega_table(3);
  const auto lpfs = s.lpf_table(3);
  CHECK(omegas == s.omega_table(1));
  CHECK(lpfs == s.lpf_table(1));
  CHECK(lpfs[1] == 1);
  CHECK(omegas[1] == 0);
  for (u64 n = 2; n <= 10'000; n += 37) {
    CHECK(omegas[n] == s.omega(n));
    CHECK(lpfs[n] == s.largest_prime_factor(n));
  }
}

TEST_CASE("sieve input validation") {
  CHECK_THROWS_AS(FactorSieve(FactorSieve::kMaxLimit + 1), capacity_error);
  CHECK_THROWS_AS(FactorSieve(100, 0), std::invalid_argument);
  CHECK_THROWS_AS(FactorSieve(100, 1, 100), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(FactorSieve(100, 1, 32), std::invalid_argument);   // too small
  const FactorSieve s(100);
  CHECK_THROWS_AS(s.spf(1), std::domain_error);
  CHECK_THROWS_AS(s.spf(0), std::domain_error);
  CHECK_THROWS_AS(s.spf(101), std::domain_error);
  CHECK_THROWS_AS(primes_up_to(FactorSieve::kMaxLimit + 1), capacity_error);
}
