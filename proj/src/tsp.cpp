#include "pav/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "deep.hpp"
#include "pav/simd.hpp"

namespace pav {

double dist(const Point& a, const Point& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

EdgeSet mst(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 1) throw std::invalid_argument("mst: empty point set");
  EdgeSet out;
  // remaining vertices, compacted
  std::vector<double> xs(n - 1), ys(n - 1), best(n - 1, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n - 1, -1), id(n - 1);
  for (int i = 1; i < n; ++i) {
    xs[i - 1] = pts[i].x;
    ys[i - 1] = pts[i].y;
    id[i - 1] = i;
  }
  const auto& K = simd::kernels();
  int m = n - 1, cur = 0;
  while (m > 0) {
    int j = K.relax_argmin(xs.data(), ys.data(), best.data(), parent.data(), m, pts[cur].x, pts[cur].y, cur);
    out.edges.push_back({parent[j], id[j]});
    out.length += std::sqrt(best[j]);
    cur = id[j];
    --m;
    xs[j] = xs[m];
    ys[j] = ys[m];
    best[j] = best[m];
    parent[j] = parent[m];
    id[j] = id[m];
  }
  return out;
}

double nn_sum(const std::vector<Point>& pts, Metric metric) {
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw std::invalid_argument("nn_sum: needs at least 2 points");
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].y;
  }
  const auto& K = simd::kernels();
  double total = 0;
  for (int i = 0; i < n; ++i) {
    if (metric == Metric::L2)
      total += std::sqrt(K.min_dist2(xs.data(), ys.data(), n, i, xs[i], ys[i]));
    else
      total += K.min_linf(xs.data(), ys.data(), n, i, xs[i], ys[i]);
  }
  return total;
}

std::int64_t nn_sum_linf_int(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw std::invalid_argument("nn_sum: needs at least 2 points");
  std::vector<std::int64_t> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = static_cast<std::int64_t>(pts[i].x);
    ys[i] = static_cast<std::int64_t>(pts[i].y);
    if (static_cast<double>(xs[i]) != pts[i].x || static_cast<double>(ys[i]) != pts[i].y)
      throw std::invalid_argument("nn_sum_linf_int: coordinates must be integers");
  }
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int j = 0; j < n; ++j)
      if (j != i) best = std::min<std::int64_t>(best, std::max(std::llabs(xs[i] - xs[j]), std::llabs(ys[i] - ys[j])));
    total += best;
  }
  return total;
}

double tour_length(const std::vector<Point>& pts, const std::vector<int>& order) {
  double len = 0;
  for (std::size_t i = 0; i < order.size(); ++i) len += dist(pts[order[i]], pts[order[(i + 1) % order.size()]]);
  return len;
}

namespace {

EdgeSet cycle(const std::vector<Point>& pts, std::vector<int> order) {
  EdgeSet t;
  t.kind = EdgeSet::Kind::tour;
  const std::size_t m = order.size();
  if (m >= 2)
    for (std::size_t i = 0; i < m; ++i) {
      if (m == 2 && i == 1) break;  // two points: one edge, walked twice
      t.edges.push_back({order[i], order[(i + 1) % m]});
    }
  t.length = tour_length(pts, order);
  t.order = std::move(order);
  return t;
}

}  // namespace

EdgeSet tour_from_tree(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges, int n_visit) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    if (u < n_visit) order.push_back(u);
    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        st.push_back(*it);
      }
  }
  if (static_cast<int>(order.size()) != n_visit) throw std::invalid_argument("tour_from_tree: edges do not span the points");
  return cycle(pts, std::move(order));
}

EdgeSet tour_from_mst(const std::vector<Point>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("tour_from_mst: needs at least 2 points");
  return tour_from_tree(pts, mst(pts).edges, static_cast<int>(pts.size()));
}

double held_karp(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n > 13) throw std::invalid_argument("held_karp: at most 13 points");
  if (n <= 1) return 0;
  if (n == 2) return 2 * dist(pts[0], pts[1]);
  const int m = n - 1;  // point 0 is the fixed start
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp((static_cast<std::size_t>(1) << m) * m, inf);
  auto at = [&](unsigned mask, int j) -> double& { return dp[static_cast<std::size_t>(mask) * m + j]; };
  for (int j = 0; j < m; ++j) at(1u << j, j) = dist(pts[0], pts[j + 1]);
  for (unsigned mask = 1; mask < (1u << m); ++mask)
    for (int j = 0; j < m; ++j) {
      double c = at(mask, j);
      if (!(mask >> j & 1) || c == inf) continue;
      for (int q = 0; q < m; ++q)
        if (!(mask >> q & 1)) {
          double& nx = at(mask | 1u << q, q);
          nx = std::min(nx, c + dist(pts[j + 1], pts[q + 1]));
        }
    }
  double best = inf;
  for (int j = 0; j < m; ++j) best = std::min(best, at((1u << m) - 1, j) + dist(pts[j + 1], pts[0]));
  return best;
}

double brute_force_tsp(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n > 9) throw std::invalid_argument("brute_force_tsp: at most 9 points");
  if (n <= 1) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do best = std::min(best, tour_length(pts, order));
  while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

bool is_spanning_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    uf[ra] = rb;
  }
  return true;
}

bool is_tour(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

EdgeSet spanning_tree_from_decomp(const Decomposition& dec) {
  validate(dec.merge);
  const int n = dec.n();
  std::vector<int> low(n);
  std::iota(low.begin(), low.end(), 0);
  EdgeSet out;
  for (auto [a, b] : dec.merge.steps) {
    out.edges.push_back({low[a], low[b]});
    out.length += dist(dec.unit[low[a]], dec.unit[low[b]]);
    low[a] = std::min(low[a], low[b]);
  }
  return out;
}

namespace {

class Steiner231 {
 public:
  Steiner231(std::vector<Point> sorted, const Av231Table& tree) : tree_(tree) {
    res_.points = std::move(sorted);
    res_.n_input = static_cast<int>(res_.points.size());
    for (int i = 0; i < res_.n_input; ++i) node(res_.points[i]);
  }

  void build(int lo, int hi, const Perm& pi, double x0, double x1, double y0, double y1) {
    if (lo == hi) {
      edge({x0, y0}, {x1, y0});
      edge({x0, y0}, {x0, y1});
      edge({x0, y1}, {x1, y1});
      return;
    }
    if (pi.size() <= 1) throw std::logic_error("point set contains the pattern");
    const Point r = res_.points[lo];
    if (r.x > x0) {
      // slide the left side of the box onto the first point
      edge({x0, y0}, {r.x, y0});
      edge({x0, y1}, {r.x, y1});
      x0 = r.x;
    }
    const int mid = tree_.mid(lo);
    const double s = mid > lo + 1 ? res_.points[mid - 1].x : x0;
    const double yr = r.y;
    PatternSplit sp = split_pattern(pi);
    if (!tree_.range_contains(lo + 1, mid, sp.alpha)) {
      build(lo + 1, mid, sp.alpha, x0, s, y0, yr);
      build(mid, hi, pi, s, x1, yr, y1);
      edge({x1, y0}, {x1, yr});
      edge({x0, y1}, {s, y1});
    } else {
      if (tree_.range_contains(mid, hi, sp.beta)) throw std::logic_error("point set contains the pattern");
      build(lo + 1, mid, pi, x0, s, y0, yr);
      build(mid, hi, sp.beta, s, x1, yr, y1);
      edge({x1, y0}, {s, y0});
      edge({x0, y1}, {x0, yr});
    }
  }

  SteinerTree take() { return std::move(res_); }

 private:
  const Av231Table& tree_;
  SteinerTree res_;
  std::map<std::pair<double, double>, int> ids_;
  std::vector<int> uf_;

  int node(const Point& p) {
    auto [it, fresh] = ids_.try_emplace({p.x, p.y}, static_cast<int>(uf_.size()));
    if (fresh) {
      uf_.push_back(it->second);
      if (it->second >= res_.n_input) res_.points.push_back(p);
    }
    return it->second;
  }
  int find(int v) {
    while (uf_[v] != v) v = uf_[v] = uf_[uf_[v]];
    return v;
  }
  // segments that would close a cycle (coinciding corners) are dropped
  void edge(const Point& p, const Point& q) {
    int a = node(p), b = node(q);
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    uf_[ra] = rb;
    res_.tree.edges.push_back({a, b});
    res_.tree.length += dist(p, q);
  }
};

}  // namespace

SteinerTree spanning_tree_231_pi(const std::vector<Point>& P, double w, double h, const Perm& pi) {
  require_perm(pi);
  if (pi.empty()) throw std::invalid_argument("spanning_tree_231_pi: pattern must be non-empty");
  if (contains(pi, Perm{2, 3, 1})) throw std::invalid_argument("spanning_tree_231_pi: pattern must avoid 231");
  for (const Point& p : P)
    if (p.x < 0 || p.x > w || p.y < 0 || p.y > h) throw std::invalid_argument("spanning_tree_231_pi: point outside the box");
  std::vector<Point> pts = P;
  std::sort(pts.begin(), pts.end());
  Seq ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ys[i] = pts[i].y;
  if (!pts.empty()) {
    ranks(ys);  // general position in y
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].x == pts[i - 1].x) throw NotGeneralPosition("spanning_tree_231_pi: repeated x-coordinate");
  }
  if (auto wit = find_231(ys)) throw ContainsPattern({2, 3, 1}, *wit);
  Av231Table tree(ys, pi);
  if (!pts.empty() && tree.range_contains(0, static_cast<int>(pts.size()), pi)) throw ContainsPattern(pi, {});
  Steiner231 b(pts, tree);
  detail::run_deep([&] { b.build(0, static_cast<int>(pts.size()), pi, 0, w, 0, h); });
  SteinerTree out = b.take();
  out.tree.kind = EdgeSet::Kind::tree;
  return out;
}

std::vector<Point> gen_Pk(int k) {
  if (k < 1 || k > 24) throw std::invalid_argument("gen_Pk: 1 <= k <= 24");
  std::vector<Point> P{{1, 1}};
  for (int j = 2; j <= k; ++j) {
    const double half = std::ldexp(1.0, j - 1);
    std::vector<Point> next{{1, half}};
    for (const Point& p : P) next.push_back({p.x + 1, p.y});
    for (const Point& p : P) next.push_back({p.x + half, p.y + half});
    P = std::move(next);
  }
  return P;
}

std::vector<Point> scale_to_unit(std::vector<Point> pts, double side) {
  for (Point& p : pts) {
    p.x /= side;
    p.y /= side;
  }
  return pts;
}

std::vector<Point> gen_Gd(int d) {
  if (d < 1 || d > 4096) throw std::invalid_argument("gen_Gd: 1 <= d <= 4096");
  std::vector<Point> P;
  const double dd = double(d) * d;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) P.push_back({(i - 1) / double(d) + (d - j + 1) / dd, (j - 1) / double(d) + i / dd});
  return P;
}

std::vector<Point> gen_Pdt(int d, int t) {
  if (d < 1 || t < 1) throw std::invalid_argument("gen_Pdt: d, t >= 1");
  if (2.0 * t * std::log2(double(std::max(d, 2))) > 24) throw std::invalid_argument("gen_Pdt: more than 2^24 points");
  std::vector<Point> G = gen_Gd(d), P = G;
  const double f = 1.0 / (double(d) * d);
  for (int s = 2; s <= t; ++s) {
    std::vector<Point> next;
    next.reserve(G.size() * P.size());
    for (const Point& g : G)
      for (const Point& p : P) next.push_back({g.x + f * p.x, g.y + f * p.y});
    P = std::move(next);
  }
  return P;
}

std::vector<Point> gen_uniform_grid(int n) {
  if (n < 1) throw std::invalid_argument("gen_uniform_grid: n >= 1");
  const int s = static_cast<int>(std::ceil(std::sqrt(double(n))));
  std::vector<Point> P;
  for (int i = 0; i < s && static_cast<int>(P.size()) < n; ++i)
    for (int j = 0; j < s && static_cast<int>(P.size()) < n; ++j)
      P.push_back({(i + (j + 0.5) / s) / s, (j + (i + 0.5) / s) / s});
  return P;
}

}  // namespace pav
