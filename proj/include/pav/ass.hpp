#pragma once

#include <iosfwd>
#include <vector>

#include "pav/decomp.hpp"
#include "pav/perm.hpp"

namespace pav {

// Points may share coordinates here; duplicates count once.
bool is_satisfied(const std::vector<Point>& pts);
// monotone axis-parallel staircase from a to b with every corner in pts
bool connected(const std::vector<Point>& pts, const Point& a, const Point& b);
// is_satisfied, after asserting it agrees with all-pairs connectivity (|pts| <= 200)
bool satisfied_iff_connected_crosscheck(const std::vector<Point>& pts);
bool all_pairs_connected(const std::vector<Point>& pts);

struct SupersetResult {
  std::vector<Point> points;  // inputs first, in input order
  std::vector<int> step;      // 0 for inputs, else the 1-based merge step that added the point
  int n_input = 0;
  std::vector<int> added_per_step;
  int d = 0;  // width of the merge sequence used
  std::size_t size() const { return points.size(); }
  long long bound() const;  // n + (n-1)(2d+4)^2
  int max_added() const;
};

SupersetResult build_superset(const MergeSequence& ms);
inline SupersetResult build_superset(const Decomposition& dec) { return build_superset(dec.merge); }
void write_superset(std::ostream& out, const SupersetResult& r);

int brute_force_opt_ass(const PointSet& P);  // at most 5 points

bool sparse_mn_feasible(const std::vector<Point>& X, const std::vector<Point>& Y);

PointSet gen_smallmn_lb(int n);

}  // namespace pav
