#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pav/perm.hpp"

namespace pav {

struct Rect {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  static Rect of(const Point& p) { return {p.x, p.x, p.y, p.y}; }
  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }
  bool contains(const Point& p) const { return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi; }
};

Rect bbox(const Rect& a, const Rect& b);
bool is_homogeneous(const Rect& a, const Rect& b);

// Step (a,b) merges live rectangles a < b; the result keeps id a, so an id is
// always the smallest point index inside its rectangle.
struct MergeSequence {
  PointSet base;
  std::vector<std::pair<int, int>> steps;
};

void validate(const MergeSequence& ms);
std::vector<int> red_degrees(const std::vector<Rect>& family);
int width(const MergeSequence& ms);  // 1 + max red degree over all families

MergeSequence canonical_grid_merge_sequence(int k, int l);
int brute_force_twin_width(const PointSet& P);  // at most 9 points

struct Gridding {
  std::vector<double> cols, rows;     // boundaries, front 0 and back 1
  std::vector<int> col_cuts, row_cuts;  // cut c separates sorted ranks c-1 and c (0-based)
  int num_cols() const { return static_cast<int>(cols.size()) - 1; }
  int num_rows() const { return static_cast<int>(rows.size()) - 1; }
  int col_of_rank(int r) const;  // 0-based rank -> column index
  int row_of_rank(int r) const;
};

struct Decomposition {
  MergeSequence merge;
  int t = 0;
  int d = 0;
  std::vector<Point> unit;  // base points mapped into the unit square
  double sx = 1, ox = 0, sy = 1, oy = 0;  // unit = (orig*s + o)
  std::vector<int> col_cuts0, row_cuts0;
  std::vector<std::vector<int>> removed_cols, removed_rows;  // one entry per merge step

  int n() const { return static_cast<int>(merge.base.size()); }
  // gridding paired with family R_{i+1}, i.e. after `steps_done` merges
  Gridding gridding(int steps_done) const;
  double cut_x(int c) const;
  double cut_y(int c) const;
};

struct BuildResult {
  std::optional<Decomposition> dec;
  int stuck_live = 0;  // rectangles left when no mergeable pair existed
  bool ok() const { return dec.has_value(); }
};

BuildResult build_distance_balanced(const PointSet& P, int t);
Decomposition build_adaptive(const PointSet& P);

struct BalanceReport {
  bool pass = true;
  int step = -1;       // number of merges done when the violation was seen
  std::string what;    // property tag and detail
};

BalanceReport check_balanced(const Decomposition& dec);
// invariants (i)-(iii) of the construction, with C = 20
BalanceReport check_invariants(const Decomposition& dec);

double rect_dimension_sum(const Decomposition& dec);  // unit-square coordinates
double harmonic(int k);

struct BalancedGridding {
  Gridding grid;
  int steps_done = 0;
  int t_used = 0;
};
BalancedGridding balanced_gridding(const Decomposition& dec, double m);
BalancedGridding balanced_gridding(const PointSet& P, double m);
// (I) m <= rows, cols <= 3m; (II) <= t non-empty cells per row/column;
// (III) rows/columns wider than 40/m hold <= t points
BalanceReport check_balanced_gridding(const Decomposition& dec, const BalancedGridding& g, double m);

void write_decomposition(std::ostream& out, const Decomposition& dec);
Decomposition read_decomposition(std::istream& in, const PointSet& base);

}  // namespace pav
