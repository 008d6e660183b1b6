#include "pav/ass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pav {

namespace {

std::vector<Point> dedup(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t a = std::hash<double>()(p.x), b = std::hash<double>()(p.y);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};

}  // namespace

bool is_satisfied(const std::vector<Point>& input) {
  std::vector<Point> pts = dedup(input);  // sorted by (x, y)
  const int n = static_cast<int>(pts.size());
  const double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const Point p = pts[i];
    // lowest y >= p.y and highest y <= p.y seen among points with x in [p.x, current)
    double lo_above = inf, hi_below = -inf;
    int j = i + 1;
    while (j < n && pts[j].x == p.x) {
      lo_above = std::min(lo_above, pts[j].y);
      ++j;
    }
    for (int k = i - 1; k >= 0 && pts[k].x == p.x; --k) hi_below = std::max(hi_below, pts[k].y);
    while (j < n) {
      int e = j;
      while (e < n && pts[e].x == pts[j].x) ++e;
      // group [j, e) sorted by y; only its nearest points above and below p.y matter
      auto it = std::lower_bound(pts.begin() + j, pts.begin() + e, Point{pts[j].x, p.y});
      if (it != pts.begin() + e) {
        if (it->y > p.y && lo_above > it->y) return false;
        lo_above = std::min(lo_above, it->y);
      }
      auto lt = std::upper_bound(pts.begin() + j, pts.begin() + e, Point{pts[j].x, p.y});
      if (lt != pts.begin() + j) {
        --lt;
        if (lt->y < p.y && hi_below < lt->y) return false;
        hi_below = std::max(hi_below, lt->y);
      }
      if (lo_above == p.y && hi_below == p.y) break;  // a point on p's row blocks everything further right
      j = e;
    }
  }
  return true;
}

bool connected(const std::vector<Point>& pts, const Point& a, const Point& b) {
  bool has_a = false, has_b = false;
  for (const Point& p : pts) {
    has_a |= p == a;
    has_b |= p == b;
  }
  if (!has_a || !has_b) throw std::invalid_argument("connected: endpoint not in the point set");
  if (a.x == b.x || a.y == b.y) return true;
  Point s = a, t = b;
  if (s.x > t.x) std::swap(s, t);
  const double flip = t.y > s.y ? 1.0 : -1.0;
  // walk with x and flip*y both non-decreasing
  std::vector<Point> box;
  for (const Point& p : pts) {
    double y = flip * p.y;
    double y0 = flip * s.y, y1 = flip * t.y;
    if (p.x >= s.x && p.x <= t.x && y >= y0 && y <= y1) box.push_back({p.x, y});
  }
  box = dedup(box);
  const Point src{s.x, flip * s.y}, dst{t.x, flip * t.y};
  std::set<double> col, row;  // coordinates of reached points
  for (const Point& p : box) {
    bool reach = p == src || col.count(p.x) || row.count(p.y);
    if (!reach) continue;
    if (p == dst) return true;
    col.insert(p.x);
    row.insert(p.y);
  }
  return false;
}

bool all_pairs_connected(const std::vector<Point>& input) {
  std::vector<Point> pts = dedup(input);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!connected(pts, pts[i], pts[j])) return false;
  return true;
}

bool satisfied_iff_connected_crosscheck(const std::vector<Point>& pts) {
  if (pts.size() > 200) throw std::invalid_argument("crosscheck: at most 200 points");
  bool s = is_satisfied(pts);
  bool c = all_pairs_connected(pts);
  if (s != c) throw std::logic_error("is_satisfied disagrees with all-pairs connectivity");
  return s;
}

long long SupersetResult::bound() const {
  long long q = 2LL * d + 4;
  return n_input + std::max(0, n_input - 1) * q * q;
}

int SupersetResult::max_added() const {
  return added_per_step.empty() ? 0 : *std::max_element(added_per_step.begin(), added_per_step.end());
}

SupersetResult build_superset(const MergeSequence& ms) {
  validate(ms);
  const int n = static_cast<int>(ms.base.size());
  SupersetResult res;
  res.n_input = n;
  res.d = n ? width(ms) : 1;
  res.points = ms.base.points();
  res.step.assign(n, 0);
  std::unordered_set<Point, PointHash> seen(res.points.begin(), res.points.end());
  std::vector<Rect> r(n);
  for (int i = 0; i < n; ++i) r[i] = Rect::of(ms.base[i]);
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  std::vector<double> xs, ys;
  int step = 0;
  for (auto [a, b] : ms.steps) {
    ++step;
    const Rect q = bbox(r[a], r[b]);
    xs.clear();
    ys.clear();
    // sides of the current family (still holding a and b) that cross q
    for (int id : live) {
      const Rect& s = r[id];
      if (s.x_lo >= q.x_lo && s.x_lo <= q.x_hi) xs.push_back(s.x_lo);
      if (s.x_hi >= q.x_lo && s.x_hi <= q.x_hi) xs.push_back(s.x_hi);
      if (s.y_lo >= q.y_lo && s.y_lo <= q.y_hi) ys.push_back(s.y_lo);
      if (s.y_hi >= q.y_lo && s.y_hi <= q.y_hi) ys.push_back(s.y_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    int added = 0;
    for (double x : xs)
      for (double y : ys) {
        Point p{x, y};
        if (seen.insert(p).second) {
          res.points.push_back(p);
          res.step.push_back(step);
          ++added;
        }
      }
    res.added_per_step.push_back(added);
    r[a] = q;
    live.erase(std::find(live.begin(), live.end(), b));
  }
  return res;
}

void write_superset(std::ostream& out, const SupersetResult& r) {
  auto old = out.precision(17);
  for (std::size_t i = 0; i < r.points.size(); ++i)
    out << (r.step[i] == 0 ? 'I' : 'A') << ' ' << r.points[i].x << ' ' << r.points[i].y << ' ' << r.step[i] << '\n';
  out.precision(old);
}

int brute_force_opt_ass(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  if (n > 5) throw std::invalid_argument("brute_force_opt_ass: at most 5 points");
  std::vector<Point> base = P.points();
  if (is_satisfied(base)) return n;
  std::vector<Point> cand;
  for (const Point& a : base)
    for (const Point& b : base)
      if (a.x != b.x || a.y != b.y) {
        Point c{a.x, b.y};
        if (std::find(base.begin(), base.end(), c) == base.end()) cand.push_back(c);
      }
  cand = dedup(cand);
  const int m = static_cast<int>(cand.size());
  std::vector<Point> trial;
  // iterative deepening over subset size
  for (int k = 1; k <= m; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      trial = base;
      for (int i : idx) trial.push_back(cand[i]);
      if (is_satisfied(trial)) return n + k;
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("brute_force_opt_ass: full grid not satisfied");
}

bool sparse_mn_feasible(const std::vector<Point>& X, const std::vector<Point>& Y) {
  std::unordered_set<Point, PointHash> ys(Y.begin(), Y.end());
  for (const Point& p : X)
    if (!ys.count(p)) throw std::invalid_argument("sparse_mn_feasible: X is not a subset of Y");
  std::vector<Point> xs = dedup(X);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!connected(Y, xs[i], xs[j])) return false;
  return true;
}

PointSet gen_smallmn_lb(int n) {
  if (n < 1) throw std::invalid_argument("gen_smallmn_lb: n must be positive");
  std::vector<Point> pts;
  const double nn = 2.0 * n * n, tn = 2.0 * n;
  for (int i = 1; i <= n; ++i) pts.push_back({i / nn, (2.0 * i - 2) / tn});
  for (int i = 1; i <= n; ++i) pts.push_back({(nn - n + i) / nn, (2.0 * i - 1) / tn});
  return PointSet(pts);
}

}  // namespace pav
