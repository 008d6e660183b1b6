#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pav/decomp.hpp"

using namespace pav;

TEST_CASE("homogeneity") {
  CHECK(is_homogeneous(Rect::of({0.1, 0.2}), Rect::of({0.3, 0.4})));
  CHECK_FALSE(is_homogeneous({0.1, 0.5, 0.0, 0.1}, {0.1, 0.5, 0.6, 0.9}));
  Rect r{0.1, 0.2, 0.3, 0.4};
  CHECK_FALSE(is_homogeneous(r, r));
  CHECK(bbox(Rect::of({0.1, 0.9}), Rect::of({0.5, 0.2})).y_lo == 0.2);
}

TEST_CASE("width of explicit merge sequences") {
  MergeSequence two{PointSet::from_perm({1, 2}), {{0, 1}}};
  CHECK(width(two) == 1);
  // 23514 merged pairwise left to right
  MergeSequence ms{PointSet::from_perm({2, 3, 5, 1, 4}), {{0, 1}, {0, 2}, {3, 4}, {0, 3}}};
  validate(ms);
  CHECK(width(ms) <= 3);
  CHECK(brute_force_twin_width(ms.base) <= width(ms));
  MergeSequence bad{PointSet::from_perm({1, 2}), {{1, 0}}};
  CHECK_THROWS(validate(bad));
}

TEST_CASE("canonical grid merge sequences") {
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l) CHECK(width(canonical_grid_merge_sequence(k, l)) == std::min(k, l));
  CHECK(width(canonical_grid_merge_sequence(1, 12)) == 1);
  for (int k = 2; k <= 5; ++k) {
    auto pts = canonical_grid_points(k, k);
    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<Rect> fam{bbox(Rect::of(pts[a]), Rect::of(pts[b]))};
        for (int c = 0; c < n; ++c)
          if (c != a && c != b) fam.push_back(Rect::of(pts[c]));
        REQUIRE(red_degrees(fam)[0] >= k - 1);
      }
  }
}

TEST_CASE("brute force twin-width") {
  CHECK(brute_force_twin_width(PointSet::from_perm({1})) == 1);
  CHECK(brute_force_twin_width(PointSet::from_perm(canonical_grid(2, 3))) == 2);
  for (int n = 1; n <= 6; ++n)
    for (const Perm& p : oracle::all_perms(n))
      if (oracle::separable_by_cuts(p)) REQUIRE(brute_force_twin_width(PointSet::from_perm(p)) == 1);
  CHECK(brute_force_twin_width(PointSet::from_perm({2, 4, 1, 3})) == 2);
}

TEST_CASE("distance-balanced construction") {
  BuildResult r = build_distance_balanced(PointSet::from_perm(identity(100)), 10);
  REQUIRE(r.ok());
  CHECK(width(r.dec->merge) <= 20);
  CHECK(check_balanced(*r.dec).pass);
  Perm p = gen_random_231(12, 9);
  r = build_distance_balanced(PointSet::from_perm(p), 12);
  REQUIRE(r.ok());
  CHECK(r.dec->merge.steps.size() == 11);
  Decomposition one = build_adaptive(PointSet::from_perm({1}));
  CHECK(one.merge.steps.empty());
  CHECK(rect_dimension_sum(one) == 0);
}

TEST_CASE("adaptive builds pass every check") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 200);
    Perm p = rep % 3 == 0 ? gen_random_231(n, rng()) : rep % 3 == 1 ? gen_random_separable(n, rng())
                                                                     : gen_bounded_tww(n, 2, rng());
    Decomposition dec = build_adaptive(PointSet::from_perm(p));
    REQUIRE(static_cast<int>(dec.merge.steps.size()) == n - 1);
    CHECK(check_balanced(dec).pass);
    CHECK(check_invariants(dec).pass);
    CHECK(width(dec.merge) <= 2 * dec.t);
    CHECK(rect_dimension_sum(dec) <= 20.0 * dec.d * harmonic(n - 1));
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == doctest::Approx(25.0 / 12));
}

TEST_CASE("coarse balanced griddings") {
  Perm p = gen_random_separable(20, 4);
  Decomposition dec = build_adaptive(PointSet::from_perm(p));
  BalancedGridding g = balanced_gridding(dec, 2);
  CHECK(check_balanced_gridding(dec, g, 2).pass);
  CHECK(g.grid.num_cols() >= 1);
  CHECK_THROWS(balanced_gridding(dec, 20.0 / dec.t + 1));
}

TEST_CASE("decomposition text round trip") {
  PointSet P = PointSet::from_perm(gen_random_231(50, 3));
  Decomposition dec = build_adaptive(P);
  std::stringstream ss;
  write_decomposition(ss, dec);
  Decomposition back = read_decomposition(ss, P);
  CHECK(back.t == dec.t);
  CHECK(back.merge.steps == dec.merge.steps);
  for (int s = 0; s < dec.n(); s += 7) {
    CHECK(back.gridding(s).col_cuts == dec.gridding(s).col_cuts);
    CHECK(back.gridding(s).row_cuts == dec.gridding(s).row_cuts);
  }
}
