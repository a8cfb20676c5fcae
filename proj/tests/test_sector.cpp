#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hyplab/errors.hpp"
#include "hyplab/legset.hpp"
#include "hyplab/sector.hpp"
#include "oracles.hpp"

using namespace hyplab;

namespace {
const double kQuarterPi = std::numbers::pi / 4.0;
const double kHalfPiD = std::numbers::pi / 2.0;
}  // namespace

TEST_CASE("full-quadrant counts equal twice the 1 mod 4 prime count plus one") {
  CHECK(sector_count({100, 0.0, kHalfPiD}) == 23);
  CHECK(sector_count({1000, 0.0, kHalfPiD}) == 161);
  CHECK(sector_count({10'000, 0.0, kHalfPiD}) == 1219);
  CHECK(sector_count({100'000, 0.0, kHalfPiD}) == 9567);
  for (u64 x : {100ULL, 1000ULL, 10'000ULL, 100'000ULL})
    REQUIRE(sector_count({x, 0.0, kHalfPiD}) == 2 * oracle::pi_4_1(x) + 1);
}

TEST_CASE("generic windows carry the recorded counts and are additive") {
  CHECK(sector_count({10'000, 0.3, 0.7}) == 551);
  CHECK(sector_count({10'000, 0.3, 0.31}) == 245);
  CHECK(sector_count({10'000, 0.61, 0.39}) == 306);
  CHECK(245 + 306 == 551);
  // splitting at binary-exact interior points never changes the total
  const u64 whole = sector_count({5000, 0.25, 0.5});
  for (double t : {0.0625, 0.125, 0.25, 0.375}) {
    REQUIRE(sector_count({5000, 0.25, t}) + sector_count({5000, 0.25 + t, 0.5 - t}) == whole);
  }
}

TEST_CASE("window counts match the arctangent oracle") {
  struct Case {
    u64 x;
    double beta, gamma;
  };
  for (const auto& c : std::vector<Case>{{100, 0.1, 0.5},
                                         {100, 0.7, 0.7},
                                         {100, 0.0, kQuarterPi},
                                         {10'000, 0.3, 0.7},
                                         {10'000, 1.0, 0.3},
                                         {10'000, 0.0, 0.25},
                                         {10'000, 1.4, 0.17}}) {
    CAPTURE(c.x);
    CAPTURE(c.beta);
    REQUIRE(sector_count({c.x, c.beta, c.gamma}) ==
            oracle::sector_count_atan(c.x, c.beta, c.gamma));
  }
}

TEST_CASE("reflection across the diagonal pairs the two half-quadrants") {
  // Only (1, 1) sits exactly on the diagonal (2a^2 is composite past a = 1),
  // so the upper half leads the lower half by exactly one.
  for (u64 x : {100ULL, 10'000ULL}) {
    const u64 lower = sector_count({x, 0.0, kQuarterPi});
    const u64 upper = sector_count({x, kQuarterPi, kHalfPiD - kQuarterPi});
    REQUIRE(upper == lower + 1);
    REQUIRE(lower + upper == sector_count({x, 0.0, kHalfPiD}));
  }
}

TEST_CASE("fast angle comparison agrees with the high-precision reference") {
  const std::vector<double> bounds = {1e-9,       0.3,  0.5,        kQuarterPi,
                                      0.7853982,  1.0,  1.2,        1.5707,
                                      kHalfPiD,   0.0,  -1.0};
  for (double bound : bounds)
    for (u64 a = 1; a <= 60; ++a)
      for (u64 b = 1; b <= 60; ++b) {
        CAPTURE(bound);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(angle_ge(a, b, bound) == angle_ge_reference(a, b, bound));
      }
  for (double bound : bounds) {
    REQUIRE(angle_ge(1'000'000'000, 1, bound) == angle_ge_reference(1'000'000'000, 1, bound));
    REQUIRE(angle_ge(1, 1'000'000'000, bound) == angle_ge_reference(1, 1'000'000'000, bound));
  }
}

TEST_CASE("angle comparisons at exact and trivial boundaries") {
  CHECK(angle_ge(1, 1, kQuarterPi));    // true angle pi/4 exceeds the double below it
  CHECK(angle_ge(7, 7, kQuarterPi));
  CHECK_FALSE(angle_ge(7, 6, kQuarterPi));
  CHECK(angle_ge(1, 2, 0.0));           // bound <= 0: always
  CHECK(angle_ge(1, 2, -5.0));
  CHECK_FALSE(angle_ge(1, 1'000'000, kHalfPiD));  // bound at pi/2: never
  CHECK(angle_in_window(1, 1, kQuarterPi, kHalfPiD));
  CHECK_FALSE(angle_in_window(1, 1, 0.0, kQuarterPi));
  CHECK(angle_in_window(2, 3, 0.0, kHalfPiD));
  CHECK_THROWS_AS(angle_ge(0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(angle_ge(1, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(angle_ge_reference(0, 1, 0.5), std::invalid_argument);
}

TEST_CASE("dyadic plan at ten thousand: one certified sector") {
  const auto d = dyadic_lower_bound(10'000);
  CHECK(d.n == 10'000);
  REQUIRE(d.sectors.size() == 1);
  CHECK(d.sectors[0].index == 1);
  CHECK(d.sectors[0].beta == doctest::Approx(0.7853981633974483).epsilon(1e-15));
  CHECK(d.sectors[0].gamma == d.sectors[0].beta);
  CHECK(d.sectors[0].x == 5000);
  CHECK(d.sectors[0].count == 330);
  CHECK(d.total == 330);
  // certified bound: never exceeds the ordered-pair count it undercounts
  CHECK(d.total <= multiplicity_map(10'000).total);
  CHECK(dyadic_lower_bound(10'000, 3).total == d.total);
}

TEST_CASE("dyadic plan collapses below the first threshold and grows past it") {
  CHECK(dyadic_lower_bound(1000).sectors.empty());
  CHECK(dyadic_lower_bound(1000).total == 0);
  const auto big = dyadic_lower_bound(2'000'000);
  REQUIRE(big.sectors.size() == 2);
  CHECK(big.sectors[1].index == 2);
  CHECK(big.sectors[1].beta == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-15));
  CHECK(big.sectors[0].x == 1'000'000);
  CHECK(big.sectors[1].x == 2'000'000);
  CHECK(big.total == big.sectors[0].count + big.sectors[1].count);
  CHECK(big.total <= multiplicity_map(2'000'000).total);
}

TEST_CASE("sector scale ratio and window floor") {
  const SectorQuery q{100, 0.0, 0.2};
  const u64 c = sector_count(q);
  CHECK(hl_ratio(q) ==
        doctest::Approx(static_cast<double>(c) * std::log(100.0) / (0.2 * 100.0))
            .epsilon(1e-12));
  CHECK(hl_gamma_in_range({100, 0.0, 0.2}));        // 0.2 >= 100^-0.381 = 0.1729816...
  CHECK_FALSE(hl_gamma_in_range({100, 0.0, 0.1}));
  CHECK(hl_gamma_in_range({1'000'000, 0.0, 0.006}));
  CHECK_FALSE(hl_gamma_in_range({1'000'000, 0.0, 0.005}));
  CHECK_THROWS_AS(hl_ratio({100, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(hl_ratio({1, 0.0, 0.2}), std::domain_error);
}

TEST_CASE("piecewise-linear bounds on sine hold on a dense grid") {
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(kHalfPiD * i / 1000.0);
  CHECK(jordan_inequality_holds(grid));
  CHECK(jordan_inequality_holds({0.0, kHalfPiD}));
  CHECK_THROWS_AS(jordan_inequality_holds({2.0}), std::invalid_argument);
  CHECK_THROWS_AS(jordan_inequality_holds({-0.1}), std::invalid_argument);
}

TEST_CASE("worker count never changes a sector count") {
  for (int w : {2, 4, 7}) {
    REQUIRE(sector_count({10'000, 0.3, 0.7}, w) == 551);
    REQUIRE(sector_count({100'000, 0.0, kHalfPiD}, w) == 9567);
  }
}

TEST_CASE("query validation") {
  CHECK(sector_count({100, 0.3, 0.0}) == 0);
  CHECK_THROWS_AS(sector_count({0, 0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(sector_count({10'000'000'001ULL, 0.0, 0.5}), capacity_error);
  CHECK_THROWS_AS(sector_count({100, -0.1, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(sector_count({100, 1.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(sector_count({100, 0.0, 1.6}), std::invalid_argument);
  CHECK_THROWS_AS(sector_count({100, 0.0, 0.5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_lower_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_lower_bound(200'000'000), capacity_error);
}
