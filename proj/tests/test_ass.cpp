#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pav/ass.hpp"

using namespace pav;

namespace {

std::vector<Point> random_points(std::mt19937_64& rng, int n, int grid) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({double(rng() % grid), double(rng() % grid)});
  return pts;
}

}  // namespace

TEST_CASE("satisfaction on small sets") {
  CHECK_FALSE(is_satisfied({{1, 1}, {2, 2}}));
  CHECK(is_satisfied({{1, 1}, {1, 2}, {2, 2}}));
  CHECK(is_satisfied({}));
  CHECK(is_satisfied({{3, 4}}));
  CHECK(connected({{1, 1}, {1, 5}}, {1, 1}, {1, 5}));
  CHECK_FALSE(connected({{1, 1}, {3, 3}}, {1, 1}, {3, 3}));
  std::vector<Point> full;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) full.push_back({double(x), double(y)});
  CHECK(all_pairs_connected(full));
}

TEST_CASE("satisfaction agrees with the pairwise box oracle and connectivity") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 300; ++rep) {
    auto pts = random_points(rng, static_cast<int>(rng() % 21), 2 + static_cast<int>(rng() % 6));
    const bool want = oracle::satisfied(pts);
    CHECK(is_satisfied(pts) == want);
    CHECK(all_pairs_connected(pts) == want);
    CHECK(satisfied_iff_connected_crosscheck(pts) == want);
  }
}

TEST_CASE("exhaustive optimum") {
  CHECK(brute_force_opt_ass(PointSet::from_perm({1, 2})) == 3);
  CHECK(brute_force_opt_ass(PointSet::from_perm({2, 1})) == 3);
  CHECK(brute_force_opt_ass(PointSet::from_perm({1})) == 1);
}

// The grid rule adds both free corners of the merged box, so this lands on 4
// where the optimum is 3. Kept as the known gap between the construction and OPT.
TEST_CASE("superset of two points matches the optimum" * doctest::should_fail()) {
  PointSet P = PointSet::from_perm({1, 2});
  SupersetResult r = build_superset(MergeSequence{P, {{0, 1}}});
  CHECK(r.size() == 3);
}

TEST_CASE("superset of two points") {
  PointSet P = PointSet::from_perm({1, 2});
  MergeSequence ms{P, {{0, 1}}};
  SupersetResult r = build_superset(ms);
  CHECK(r.size() == 4);
  CHECK(brute_force_opt_ass(P) <= static_cast<int>(r.size()));
  CHECK(r.d == 1);
  CHECK(is_satisfied(r.points));
  CHECK(r.points[0] == P[0]);
  CHECK(r.points[1] == P[1]);
}

TEST_CASE("supersets are satisfied and within the size bound") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 120);
    Perm p = rep % 2 ? gen_random_231(n, rng()) : gen_bounded_tww(n, 3, rng());
    SupersetResult r = build_superset(build_adaptive(PointSet::from_perm(p)));
    CHECK(r.n_input == n);
    CHECK(is_satisfied(r.points));
    CHECK(static_cast<long long>(r.size()) <= r.bound());
    const long long q = 2LL * r.d + 4;
    for (int a : r.added_per_step) CHECK(a <= q * q);
    CHECK(r.bound() == n + (n - 1) * q * q);
  }
}

TEST_CASE("partial solutions connect the points of every red pair") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 4; ++rep) {
    PointSet P = PointSet::from_perm(gen_random_231(24, rng()));
    Decomposition dec = build_adaptive(P);
    SupersetResult r = build_superset(dec);
    const int steps = static_cast<int>(dec.merge.steps.size());
    for (int probe = 0; probe < 8; ++probe) {
      const int s = 1 + static_cast<int>(rng() % steps);
      std::vector<Rect> rect(P.size());
      std::vector<char> live(P.size(), 1);
      for (std::size_t i = 0; i < P.size(); ++i) rect[i] = Rect::of(P[i]);
      for (int i = 0; i < s; ++i) {
        auto [a, b] = dec.merge.steps[i];
        rect[a] = bbox(rect[a], rect[b]);
        live[b] = 0;
      }
      std::vector<Point> sol;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r.step[i] <= s) sol.push_back(r.points[i]);
      for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = a + 1; b < P.size(); ++b) {
          if (!live[a] || !live[b] || is_homogeneous(rect[a], rect[b])) continue;
          std::vector<Point> inside;
          for (const Point& q : sol)
            if (rect[a].contains(q) || rect[b].contains(q)) inside.push_back(q);
          for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) REQUIRE(connected(sol, inside[i], inside[j]));
        }
    }
  }
}

TEST_CASE("sparse Manhattan network feasibility") {
  std::vector<Point> X{{1, 1}, {2, 2}};
  CHECK_FALSE(sparse_mn_feasible(X, X));
  CHECK(sparse_mn_feasible(X, {{1, 1}, {2, 2}, {1, 2}}));
  SupersetResult r = build_superset(build_adaptive(PointSet::from_perm({3, 1, 4, 2, 5})));
  CHECK(sparse_mn_feasible(std::vector<Point>(r.points.begin(), r.points.begin() + 5), r.points));
  CHECK_THROWS(sparse_mn_feasible({{9, 9}}, X));
}

TEST_CASE("small Manhattan network lower-bound family") {
  for (int n = 1; n <= 10; ++n) {
    PointSet P = gen_smallmn_lb(n);
    CHECK(P.size() == static_cast<std::size_t>(2 * n));
    CHECK_FALSE(oracle::contains(P.to_perm(), {3, 2, 1}));
  }
  auto pts = gen_smallmn_lb(2).points();
  CHECK(pts[0] == Point{1.0 / 8, 0.0});
  CHECK(pts[1] == Point{2.0 / 8, 0.5});
  CHECK(pts[2] == Point{7.0 / 8, 0.25});
  CHECK(pts[3] == Point{1.0, 0.75});
}
