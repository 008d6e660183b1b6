#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pav {

// One-line notation, values 1..n.
using Perm = std::vector<int>;
using Seq = std::vector<double>;

bool is_perm(const Perm& p);
void require_perm(const Perm& p);
std::string to_string(const Perm& p);
Perm parse_perm(const std::string& s);  // "2134" or "2 1 3 4"

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class NotGeneralPosition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContainsPattern : public std::runtime_error {
 public:
  ContainsPattern(Perm pattern, std::vector<int> witness);
  Perm pattern;
  std::vector<int> witness;  // 0-based indices into the offending sequence
};

// Points in general position with cached integer ranks.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  static PointSet from_perm(const Perm& p);        // ((i-0.5)/n, (p_i-0.5)/n)
  static PointSet from_requests(const Seq& values);  // ((i-0.5)/n, v_i)

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  int xrank(std::size_t i) const { return xr_[i]; }  // 1-based
  int yrank(std::size_t i) const { return yr_[i]; }
  const std::vector<int>& by_x() const { return byx_; }
  const std::vector<int>& by_y() const { return byy_; }

  Perm to_perm() const;

 private:
  std::vector<Point> pts_;
  std::vector<int> xr_, yr_, byx_, byy_;
};

// 1-based ranks; throws NotGeneralPosition on ties.
std::vector<int> ranks(const Seq& v);
Perm perm_of(const Seq& v);

bool is_order_isomorphic(const Seq& x, const Seq& y);

bool contains(const Perm& tau, const Perm& pi);
bool contains(const Seq& x, const Perm& pi);
bool contains(const PointSet& P, const Perm& pi);
std::optional<std::vector<int>> find_pattern(const Perm& tau, const Perm& pi);

// O(n log n) search for 231; returns positions (i,j,l) with x_l < x_i < x_j.
std::optional<std::vector<int>> find_231(const Seq& x);
// Linear dynamic program over the 231 tree; only valid when x avoids 231.
bool contains_in_231_avoider(const Seq& x, const Perm& pi);

struct SubpatternIndex;
// x (231-avoiding) as a tree: node i spans [i, end(i)); its first child
// [i+1, mid(i)) holds the entries below x[i], the second [mid(i), end(i)) those above.
// Records for every node which patterns formed by entries of pi it contains.
class Av231Table {
 public:
  Av231Table(const Seq& x, const Perm& pi);
  int size() const { return static_cast<int>(end_.size()); }
  int mid(int i) const { return mid_[i]; }
  int end(int i) const { return end_[i]; }
  // [lo, hi) must be empty or a node; sub must be a pattern of a subset of pi
  bool range_contains(int lo, int hi, const Perm& sub) const;

 private:
  int pattern_id(const Perm& sub) const;
  std::shared_ptr<const SubpatternIndex> index_;
  std::vector<int> mid_, end_;
  std::vector<char> has_;
  int m_ = 0;
};

Perm identity(int n);
Perm decreasing(int n);
Perm inverse(const Perm& p);
Perm reversal(const Perm& p);
Perm complement(const Perm& p);
Perm sum(const Perm& a, const Perm& b);
Perm skew_sum(const Perm& a, const Perm& b);
Perm inflate(const Perm& skel, const std::vector<Perm>& blocks);

// Canonical k x l grid; point (i,j) sits at ((i-1)l + (l-j+1), (j-1)k + i).
Perm canonical_grid(int k, int l);
std::vector<Point> canonical_grid_points(int k, int l);

bool is_separable(const Perm& p);       // avoids 3142 and 2413
bool is_separable_tree(const Perm& p);  // stack reduction of sum/skew blocks

struct Split231 {
  double b = 0.0;
  Seq x1, x2;
};
Split231 decompose_231(const Seq& x);

// Pattern split p . alpha . beta, both parts renormalised to permutations.
struct PatternSplit {
  int first = 0;
  Perm alpha, beta;
};
PatternSplit split_pattern(const Perm& pi);

using Blocks = std::vector<Seq>;
Blocks block_decompose(const Seq& x);
// Same partition as block_decompose, as [begin, end) offsets.
std::vector<std::pair<int, int>> block_bounds(const Seq& x);

std::vector<Point> perturb_to_general_position(const std::vector<Point>& pts, double eps);
PointSet perturbed(const std::vector<Point>& pts, double eps);

Perm gen_random_231(int n, std::uint64_t seed);
Perm gen_random_separable(int n, std::uint64_t seed);
Perm gen_bounded_tww(int n, int d, std::uint64_t seed);
// Random sequence avoiding both 231 and pi (pi must avoid 231).
Perm gen_av231_pi(const Perm& pi, int n, std::uint64_t seed);

Seq perm_to_unit(const Perm& p);  // value v -> (v-0.5)/n

std::vector<Perm> read_perms(std::istream& in);
void write_perm(std::ostream& out, const Perm& p);
std::vector<Point> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<Point>& pts);
Seq read_requests(std::istream& in);
void write_requests(std::ostream& out, const Seq& x);

}  // namespace pav
