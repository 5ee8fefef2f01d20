#include <doctest.h>

#include <vector>

#include "denthex/formulas.hpp"
#include "denthex/oracle.hpp"

using namespace denthex;

TEST_CASE("clp_trapezoid basics") {
  CHECK(clp_trapezoid(3, 0, {}) == 1);
  CHECK(clp_trapezoid(4, 1, {3}) == 1);
  CHECK(clp_trapezoid(2, 2, {1, 3}) == 2);
  CHECK(clp_trapezoid(2, 2, {1, 3}) ==
        count_tilings(build_clp_trapezoid_region(2, 2, {1, 3})));
  // the region of Figure 1 (right)
  CHECK(clp_trapezoid(6, 5, {1, 3, 4, 7, 10}) == 1701);
  CHECK(count_tilings(build_clp_trapezoid_region(6, 5, {1, 3, 4, 7, 10})) == 1701);

  CHECK_THROWS_AS((void)clp_trapezoid(2, 2, {3, 1}), Error);
  CHECK_THROWS_AS((void)clp_trapezoid(2, 2, {1, 5}), Error);
  CHECK_THROWS_AS((void)clp_trapezoid(2, 2, {1}), Error);
}

TEST_CASE("gk_notch spot values and degenerate branches") {
  // k = 0: the sum collapses to its single i = 1 term and A equals B
  for (long l = 0; l <= 2; ++l) {
    NotchParams p{2, 1, 2, 0, l, false};
    CHECK(gk_notch(p) == count_tilings(build_notch_region(false, 2, 1, 2, 0, l)));
  }
  // the two hexagons-with-notches of the figure
  CHECK(gk_notch({4, 7, 3, 2, 2, false}) == Count("199577127750"));
  CHECK(gk_notch({4, 7, 3, 2, 2, true}) ==
        count_tilings(build_notch_region(true, 4, 7, 3, 2, 2)));
  // nu branches of r(c): b = 0 gives nu = -1, b = 1 gives nu = 0
  for (long b = 0; b <= 2; ++b)
    for (long l = 0; l <= 3; ++l) {
      NotchParams p{2, b, 1, 2, l, true};
      CHECK(gk_notch(p) == count_tilings(build_notch_region(true, 2, b, 1, 2, l)));
    }
  CHECK_THROWS_AS((void)gk_notch({2, 2, 2, 1, 9, false}), Error);
}

TEST_CASE("adjacent_dents against the oracle") {
  CHECK(adjacent_dents(2, 2, 2, 1, 1) ==
        count_tilings(build_adjacent_dents_region(2, 2, 2, 1, 1)));
  // b = 0 collapses to a plain hexagon count
  for (long a = 1; a <= 3; ++a)
    for (long c = 1; c <= 3; ++c)
      for (long j = 1; j <= a; ++j)
        for (long k = 1; k <= c; ++k) CHECK(adjacent_dents(a, 0, c, j, k) ==
                                            macmahon(j - 1, 1, k - 1));
  // c = k pins the dent against the corner strip
  for (long a = 1; a <= 3; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long j = 1; j <= a; ++j)
        CHECK(adjacent_dents(a, b, 2, j, 2) ==
              count_tilings(build_adjacent_dents_region(a, b, 2, j, 2)));
  CHECK_THROWS_AS((void)adjacent_dents(2, 1, 2, 0, 1), Error);
  CHECK_THROWS_AS((void)adjacent_dents(2, 1, 2, 1, 3), Error);
}

TEST_CASE("adjacent_dents mirror symmetry") {
  for (long a = 1; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (long j = 1; j <= a; ++j)
          for (long k = 1; k <= c; ++k)
            CHECK(adjacent_dents(a, b, c, j, k) == adjacent_dents(c, b, a, k, j));
}

TEST_CASE("opposite_dents against the oracle") {
  CHECK(opposite_dents(2, 1, 1, 1, 2) ==
        count_tilings(build_opposite_dents_region(2, 1, 1, 1, 2)));
  CHECK(opposite_dents(3, 2, 2, 2, 2) ==
        count_tilings(build_opposite_dents_region(3, 2, 2, 2, 2)));
  // i = 1 puts the dent at a corner and the region degenerates
  for (long a = 1; a <= 3; ++a)
    for (long j = 1; j <= a; ++j)
      CHECK(opposite_dents(a, 2, 2, 1, j) ==
            count_tilings(build_opposite_dents_region(a, 2, 2, 1, j)));
  // degenerate b = 0 / c = 0 still evaluate (mirror parameterization)
  for (long a = 1; a <= 3; ++a)
    for (long i = 1; i <= a; ++i)
      for (long j = 1; j <= a; ++j) {
        CHECK(opposite_dents(a, 0, 2, i, j) ==
              count_tilings(build_opposite_dents_region(a, 0, 2, i, j)));
        CHECK(opposite_dents(a, 2, 0, i, j) ==
              count_tilings(build_opposite_dents_region(a, 2, 0, i, j)));
      }
  CHECK_THROWS_AS((void)opposite_dents(2, 1, 1, 0, 1), Error);
  CHECK_THROWS_AS((void)opposite_dents(1, 0, 0, 1, 1), Error);
}

TEST_CASE("opposite_dents parameterization swap") {
  for (long a = 1; a <= 4; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 1; c <= 2; ++c)
        for (long i = 1; i <= a; ++i)
          for (long j = 1; j <= a; ++j)
            CHECK(opposite_dents(a, b, c, i, j) == opposite_dents(a, c, b, j, i));
  // the two parameterizations describe the same region
  CHECK(canonical_signature(build_opposite_dents_region(3, 1, 2, 2, 3)) ==
        canonical_signature(build_opposite_dents_region(3, 2, 1, 3, 2)));
}

TEST_CASE("kuo recurrences on explicit instances") {
  CHECK(check_rec_adjacent(2, 1, 2, 1, 1));
  CHECK(check_rec_adjacent(3, 2, 3, 2, 2));
  CHECK(check_rec_opposite(3, 1, 1, 2, 2));
  CHECK(check_rec_opposite(4, 2, 2, 2, 3));
  CHECK_THROWS_AS((void)check_rec_adjacent(1, 1, 2, 1, 1), Error);
  CHECK_THROWS_AS((void)check_rec_opposite(3, 1, 1, 1, 2), Error);
}

TEST_CASE("recurrences hold across the small grid") {
  for (long a = 2; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 2; c <= 4; ++c)
        for (long j = 1; j < a; ++j)
          for (long k = 1; k < c; ++k) CHECK(check_rec_adjacent(a, b, c, j, k));
  for (long a = 3; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (long i = 2; i < a; ++i)
          for (long j = 2; j < a; ++j) CHECK(check_rec_opposite(a, b, c, i, j));
}

TEST_CASE("evaluate_class dispatch") {
  CHECK(evaluate_class({RegionTag::Empty}) == 1);
  CHECK(evaluate_class({RegionTag::Untileable}) == 0);
  RegionClass hex{RegionTag::PlainHexagon, 0, 2, 2, 2};
  CHECK(evaluate_class(hex) == 20);
  CHECK_THROWS_AS((void)evaluate_class({RegionTag::Unknown}), Error);
}
