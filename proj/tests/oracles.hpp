#pragma once

// Slow reference implementations the library is checked against. Nothing here
// calls into pav beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "pav/perm.hpp"

namespace oracle {

// every increasing index tuple, compared by ranks
inline bool contains(const std::vector<double>& x, const pav::Perm& pi) {
  const int n = static_cast<int>(x.size()), m = static_cast<int>(pi.size());
  if (m == 0) return true;
  if (m > n) return false;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = a + 1; b < m && ok; ++b) ok = (x[idx[a]] < x[idx[b]]) == (pi[a] < pi[b]);
    if (ok) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}
inline bool contains(const pav::Perm& p, const pav::Perm& pi) { return contains(std::vector<double>(p.begin(), p.end()), pi); }

inline bool has_231(const std::vector<double>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (x[l] < x[i] && x[i] < x[j]) return true;
  return false;
}

// p is separable iff it can be cut into two nonempty parts, one entirely below
// the other, both separable
inline bool separable_by_cuts(const pav::Perm& p) {
  const int n = static_cast<int>(p.size());
  if (n <= 1) return true;
  for (int c = 1; c < n; ++c) {
    int lo_max = *std::max_element(p.begin(), p.begin() + c), lo_min = *std::min_element(p.begin(), p.begin() + c);
    bool direct = lo_max == c, skew = lo_min == n - c + 1;
    if (!direct && !skew) continue;
    auto norm = [](std::vector<int> v) {
      std::vector<int> s = v;
      std::sort(s.begin(), s.end());
      for (int& x : v) x = static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin()) + 1;
      return v;
    };
    if (separable_by_cuts(norm({p.begin(), p.begin() + c})) && separable_by_cuts(norm({p.begin() + c, p.end()})))
      return true;
  }
  return false;
}

// all permutations of 1..n
inline std::vector<pav::Perm> all_perms(int n) {
  std::vector<pav::Perm> out;
  pav::Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// satisfied: every pair aligned, or its closed box holds a third point
inline bool satisfied(std::vector<pav::Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const auto &p = pts[a], &q = pts[b];
      if (p.x == q.x || p.y == q.y) continue;
      bool found = false;
      for (std::size_t c = 0; c < pts.size() && !found; ++c) {
        if (c == a || c == b) continue;
        const auto& r = pts[c];
        found = std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
                r.y <= std::max(p.y, q.y);
      }
      if (!found) return false;
    }
  return true;
}

// offline k-server on a finite grid of positions: DP over sorted server tuples
inline double kserver_dp(const std::vector<double>& req, int k) {
  std::vector<double> vals{0.0};
  for (double v : req) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const int V = static_cast<int>(vals.size());
  // states: nondecreasing k-tuples of value indices
  std::vector<std::vector<int>> states;
  std::vector<int> cur(k, 0);
  while (true) {
    states.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == V - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  const double inf = 1e300;
  std::vector<double> f(states.size(), inf);
  f[0] = 0;  // all at index 0, which is value 0
  auto move_cost = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double c = 0;  // sorted matching is optimal on the line
    for (int j = 0; j < k; ++j) c += std::abs(vals[a[j]] - vals[b[j]]);
    return c;
  };
  for (double r : req) {
    const int ri = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), r) - vals.begin());
    std::vector<double> g(states.size(), inf);
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (f[s] >= inf) continue;
      for (std::size_t t = 0; t < states.size(); ++t) {
        if (std::find(states[t].begin(), states[t].end(), ri) == states[t].end()) continue;
        g[t] = std::min(g[t], f[s] + move_cost(states[s], states[t]));
      }
    }
    f.swap(g);
  }
  return *std::min_element(f.begin(), f.end());
}

inline double dist(const pav::Point& a, const pav::Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// shortest closed tour by enumerating orders with point 0 fixed
inline double tsp(const std::vector<pav::Point>& P) {
  const int n = static_cast<int>(P.size());
  if (n <= 1) return 0;
  std::vector<int> o(n - 1);
  std::iota(o.begin(), o.end(), 1);
  double best = 1e300;
  do {
    double s = dist(P[0], P[o[0]]) + dist(P[o.back()], P[0]);
    for (int i = 0; i + 1 < n - 1; ++i) s += dist(P[o[i]], P[o[i + 1]]);
    best = std::min(best, s);
  } while (std::next_permutation(o.begin(), o.end()));
  return best;
}

// Kruskal on all pairs
inline double mst(const std::vector<pav::Point>& P) {
  const int n = static_cast<int>(P.size());
  std::vector<std::tuple<double, int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(dist(P[i], P[j]), i, j);
  std::sort(e.begin(), e.end());
  std::vector<int> par(n);
  std::iota(par.begin(), par.end(), 0);
  auto find = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  double s = 0;
  for (auto& [w, a, b] : e) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      par[ra] = rb;
      s += w;
    }
  }
  return s;
}

}  // namespace oracle
