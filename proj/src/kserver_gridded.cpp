#include <algorithm>
#include <cmath>
#include <map>

#include "kserver_internal.hpp"
#include "pav/decomp.hpp"

namespace pav {

namespace {

struct Gridded {
  const Seq& x;
  int d;
  std::vector<int>& who;
  int fallbacks = 0;

  // interval baseline over the value range of the given requests
  void baseline(const std::vector<int>& idx, const int* S, int ns) {
    double lo = 1, hi = 0;
    for (int i : idx) {
      lo = std::min(lo, x[i]);
      hi = std::max(hi, x[i]);
    }
    for (int i : idx) {
      int j = hi > lo ? static_cast<int>(std::ceil((x[i] - lo) / (hi - lo) * ns)) - 1 : 0;
      who[i] = S[std::clamp(j, 0, ns - 1)];
    }
  }

  void solve(int t, const std::vector<int>& idx, const int* S, const Decomposition* given) {
    const int n = static_cast<int>(idx.size());
    if (n == 0) return;
    int ns = 1;
    for (int i = 0; i < t; ++i) ns *= d;
    if (t == 0) {
      for (int i : idx) who[i] = S[0];
      return;
    }
    const double m = std::pow(double(n), 1.0 / (t + 1));
    if (n < ns * m || m < 2) {
      baseline(idx, S, ns);
      return;
    }
    Seq vals(n);
    for (int i = 0; i < n; ++i) vals[i] = x[idx[i]];
    std::optional<Decomposition> own;
    if (!given) {
      BuildResult br = build_distance_balanced(PointSet::from_requests(vals), d);
      if (!br.ok()) {
        ++fallbacks;
        baseline(idx, S, ns);
        return;
      }
      own = std::move(br.dec);
      given = &*own;
    }
    if (m * given->t > n) {
      baseline(idx, S, ns);
      return;
    }
    BalancedGridding bg = balanced_gridding(*given, m);
    const Gridding& g = bg.grid;
    const PointSet& P = given->merge.base;
    // cells[col][row] -> local indices in time order
    std::vector<std::map<int, std::vector<int>>> cells(g.num_cols());
    for (int i = 0; i < n; ++i) {
      int c = g.col_of_rank(P.xrank(i) - 1), r = g.row_of_rank(P.yrank(i) - 1);
      cells[c][r].push_back(idx[i]);
    }
    const int gs = ns / d;
    for (auto& col : cells) {
      if (static_cast<int>(col.size()) > d) {
        ++fallbacks;
        std::vector<int> all;
        for (auto& [r, v] : col) all.insert(all.end(), v.begin(), v.end());
        std::sort(all.begin(), all.end());
        baseline(all, S, ns);
        continue;
      }
      int j = 0;
      for (auto& [r, v] : col) {
        const int* G = S + static_cast<std::ptrdiff_t>(j++) * gs;
        if (g.rows[r + 1] - g.rows[r] > 40.0 / m) {
          for (int i : v) who[i] = G[0];
        } else {
          solve(t - 1, v, G, nullptr);
        }
      }
    }
  }
};

}  // namespace

KServerSolution solve_gridded(const KServerInstance& inst, GriddedInfo* info) {
  for (double v : inst.requests)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("requests must lie in [0,1]");
  const int n = inst.n();
  GriddedInfo gi;
  std::vector<int> who(n, 0);
  if (n > 0) {
    Decomposition dec = build_adaptive(PointSet::from_requests(inst.requests));
    gi.d = dec.t;
    gi.t = floor_log(gi.d, inst.k);
    gi.servers_used = 1;
    for (int i = 0; i < gi.t; ++i) gi.servers_used *= gi.d;
    std::vector<int> S(gi.servers_used), idx(n);
    for (int i = 0; i < gi.servers_used; ++i) S[i] = i;
    for (int i = 0; i < n; ++i) idx[i] = i;
    Gridded g{inst.requests, gi.d, who};
    g.solve(gi.t, idx, S.data(), &dec);
    gi.fallbacks = g.fallbacks;
  } else {
    gi.servers_used = 1;
  }
  if (info) *info = gi;
  return detail::from_assignment(inst, who, gi.servers_used);
}

}  // namespace pav
