#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pav/decomp.hpp"

namespace pav {

namespace {

struct RectRanks {
  int xl, xh, yl, yh;
  double wx, wy;  // unit-square width and height
  double ux0, ux1, uy0, uy1;
};

// Replays a decomposition and hands every (family, gridding) pair to `visit`.
// The visitor gets the live rect ids, a rank->column and rank->row map, and the
// column/row rank ranges; it returns a non-empty string to stop with a failure.
template <class Visit>
BalanceReport replay(const Decomposition& dec, Visit&& visit) {
  BalanceReport rep;
  const int n = dec.n();
  try {
    validate(dec.merge);
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.what = e.what();
    return rep;
  }
  if (n == 0) return rep;
  const auto& base = dec.merge.base;
  std::vector<RectRanks> r(n);
  for (int i = 0; i < n; ++i) {
    int xr = base.xrank(i) - 1, yr = base.yrank(i) - 1;
    const Point& u = dec.unit[i];
    r[i] = {xr, xr, yr, yr, 0, 0, u.x, u.x, u.y, u.y};
  }
  std::vector<char> alive(n, 1);
  std::vector<char> cgone(n + 1, 0), rgone(n + 1, 0);
  std::vector<int> col_at(n), row_at(n);
  std::vector<int> live;
  for (int step = 0; step < n; ++step) {
    std::vector<int> cb{0}, rb{0};  // rank boundaries
    for (int c : dec.col_cuts0)
      if (!cgone[c]) cb.push_back(c);
    for (int c : dec.row_cuts0)
      if (!rgone[c]) rb.push_back(c);
    cb.push_back(n);
    rb.push_back(n);
    for (std::size_t k = 0; k + 1 < cb.size(); ++k)
      for (int q = cb[k]; q < cb[k + 1]; ++q) col_at[q] = static_cast<int>(k);
    for (std::size_t k = 0; k + 1 < rb.size(); ++k)
      for (int q = rb[k]; q < rb[k + 1]; ++q) row_at[q] = static_cast<int>(k);
    live.clear();
    for (int i = 0; i < n; ++i)
      if (alive[i]) live.push_back(i);
    std::string bad = visit(step, live, r, col_at, row_at, cb, rb);
    if (!bad.empty()) {
      rep.pass = false;
      rep.step = step;
      rep.what = bad;
      return rep;
    }
    if (step + 1 == n) break;
    auto [a, b] = dec.merge.steps[step];
    RectRanks& ra = r[a];
    const RectRanks& rbb = r[b];
    ra.xl = std::min(ra.xl, rbb.xl);
    ra.xh = std::max(ra.xh, rbb.xh);
    ra.yl = std::min(ra.yl, rbb.yl);
    ra.yh = std::max(ra.yh, rbb.yh);
    ra.ux0 = std::min(ra.ux0, rbb.ux0);
    ra.ux1 = std::max(ra.ux1, rbb.ux1);
    ra.uy0 = std::min(ra.uy0, rbb.uy0);
    ra.uy1 = std::max(ra.uy1, rbb.uy1);
    ra.wx = ra.ux1 - ra.ux0;
    ra.wy = ra.uy1 - ra.uy0;
    alive[b] = 0;
    if (static_cast<std::size_t>(step) < dec.removed_cols.size())
      for (int c : dec.removed_cols[step]) cgone[c] = 1;
    if (static_cast<std::size_t>(step) < dec.removed_rows.size())
      for (int c : dec.removed_rows[step]) rgone[c] = 1;
  }
  return rep;
}

std::string fmt(const char* tag, const std::string& detail) { return std::string(tag) + ": " + detail; }

// distinct non-empty cells per column (by_col) or per row, bucketed with a stamp array
int max_cells_per_line(const std::vector<int>& live, const std::vector<RectRanks>& r, const std::vector<int>& col_at,
                       const std::vector<int>& row_at, int lines, int others, bool by_col) {
  std::vector<std::vector<int>> bucket(lines);
  for (int id : live) {
    int c = col_at[r[id].xl], w = row_at[r[id].yl];
    bucket[by_col ? c : w].push_back(by_col ? w : c);
  }
  std::vector<int> stamp(others, -1);
  int best = 0;
  for (int k = 0; k < lines; ++k) {
    int cnt = 0;
    for (int q : bucket[k])
      if (stamp[q] != k) {
        stamp[q] = k;
        ++cnt;
      }
    best = std::max(best, cnt);
  }
  return best;
}

}  // namespace

BalanceReport check_balanced(const Decomposition& dec) {
  const int n = dec.n();
  const int d = dec.d;
  auto cx = [&](int c) { return dec.cut_x(c); };
  auto cy = [&](int c) { return dec.cut_y(c); };
  return replay(dec, [&](int step, const std::vector<int>& live, const std::vector<RectRanks>& r,
                         const std::vector<int>& col_at, const std::vector<int>& row_at, const std::vector<int>& cb,
                         const std::vector<int>& rb) -> std::string {
    const int p = static_cast<int>(cb.size()) - 1, q = static_cast<int>(rb.size()) - 1;
    // (b)
    for (int id : live) {
      const RectRanks& x = r[id];
      if (col_at[x.xl] != col_at[x.xh] || row_at[x.yl] != row_at[x.yh])
        return fmt("(b)", "rectangle " + std::to_string(id) + " spans several cells");
      if (!(x.wx < 20.0 / p) || !(x.wy < 20.0 / q))
        return fmt("(b)", "rectangle " + std::to_string(id) + " too large");
    }
    // (a)
    int mc = max_cells_per_line(live, r, col_at, row_at, p, q, true);
    int mr = max_cells_per_line(live, r, col_at, row_at, q, p, false);
    if (2 * std::max(mc, mr) > d)
      return fmt("(a)", std::to_string(std::max(mc, mr)) + " non-empty cells in one line");
    // (c)
    for (int k = 0; k < p; ++k)
      if (cx(cb[k + 1]) - cx(cb[k]) > 40.0 / p && 2 * (cb[k + 1] - cb[k]) > d)
        return fmt("(c)", "column " + std::to_string(k) + " is extra wide and holds too many points");
    for (int k = 0; k < q; ++k)
      if (cy(rb[k + 1]) - cy(rb[k]) > 40.0 / q && 2 * (rb[k + 1] - rb[k]) > d)
        return fmt("(c)", "row " + std::to_string(k) + " is extra tall and holds too many points");
    // (d), exact in integers
    const long long L = n - step;
    if (9LL * d * (std::max(p, q) - 1) > 40 * L || 2 * L > 1LL * d * std::min(p, q))
      return fmt("(d)", "grid " + std::to_string(p) + "x" + std::to_string(q) + " with " + std::to_string(L) +
                            " rectangles");
    return {};
  });
}

BalanceReport check_invariants(const Decomposition& dec) {
  const int t = dec.t;
  auto cx = [&](int c) { return dec.cut_x(c); };
  auto cy = [&](int c) { return dec.cut_y(c); };
  return replay(dec, [&](int, const std::vector<int>& live, const std::vector<RectRanks>& r,
                         const std::vector<int>& col_at, const std::vector<int>& row_at, const std::vector<int>& cb,
                         const std::vector<int>& rb) -> std::string {
    const int p = static_cast<int>(cb.size()) - 1, q = static_cast<int>(rb.size()) - 1;
    std::vector<int> per_col(p, 0), per_row(q, 0);
    for (int id : live) {
      const RectRanks& x = r[id];
      if (col_at[x.xl] != col_at[x.xh] || row_at[x.yl] != row_at[x.yh])
        return fmt("(i)", "rectangle " + std::to_string(id) + " spans several cells");
      ++per_col[col_at[x.xl]];
      ++per_row[row_at[x.yl]];
    }
    for (int k = 0; k < p; ++k)
      if (per_col[k] > t) return fmt("(ii)", "column " + std::to_string(k));
    for (int k = 0; k < q; ++k)
      if (per_row[k] > t) return fmt("(ii)", "row " + std::to_string(k));
    for (int k = 0; k + 1 < p; ++k) {
      bool w0 = cx(cb[k + 1]) - cx(cb[k]) > 20.0 / p, w1 = cx(cb[k + 2]) - cx(cb[k + 1]) > 20.0 / p;
      if (!w0 && !w1 && per_col[k] + per_col[k + 1] <= t) return fmt("(iii)", "columns " + std::to_string(k));
    }
    for (int k = 0; k + 1 < q; ++k) {
      bool w0 = cy(rb[k + 1]) - cy(rb[k]) > 20.0 / q, w1 = cy(rb[k + 2]) - cy(rb[k + 1]) > 20.0 / q;
      if (!w0 && !w1 && per_row[k] + per_row[k + 1] <= t) return fmt("(iii)", "rows " + std::to_string(k));
    }
    return {};
  });
}

BalancedGridding balanced_gridding(const Decomposition& dec, double m) {
  const int n = dec.n();
  const int t = dec.t;
  if (!(m >= 2) || m * t > n) {
    std::ostringstream o;
    o << "balanced_gridding: m = " << m << " outside [2, n/t] with n = " << n << ", t = " << t;
    throw std::invalid_argument(o.str());
  }
  const int live = static_cast<int>(std::ceil(t * m));
  BalancedGridding g;
  g.t_used = t;
  g.steps_done = n - live;
  g.grid = dec.gridding(g.steps_done);
  return g;
}

BalancedGridding balanced_gridding(const PointSet& P, double m) { return balanced_gridding(build_adaptive(P), m); }

BalanceReport check_balanced_gridding(const Decomposition& dec, const BalancedGridding& g, double m) {
  BalanceReport rep;
  const int n = dec.n();
  const int t = g.t_used;
  const Gridding& G = g.grid;
  const int p = G.num_cols(), q = G.num_rows();
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.step = g.steps_done;
    rep.what = w;
    return rep;
  };
  if (p < m || q < m || p > 3 * m || q > 3 * m)
    return fail("(I) grid " + std::to_string(p) + "x" + std::to_string(q));
  const auto& base = dec.merge.base;
  std::vector<std::vector<int>> by_col(p), by_row(q);
  std::vector<int> pts_col(p, 0), pts_row(q, 0);
  for (int i = 0; i < n; ++i) {
    int c = G.col_of_rank(base.xrank(i) - 1), r = G.row_of_rank(base.yrank(i) - 1);
    by_col[c].push_back(r);
    by_row[r].push_back(c);
    ++pts_col[c];
    ++pts_row[r];
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  };
  for (int k = 0; k < p; ++k)
    if (distinct(by_col[k]) > t) return fail("(II) column " + std::to_string(k));
  for (int k = 0; k < q; ++k)
    if (distinct(by_row[k]) > t) return fail("(II) row " + std::to_string(k));
  for (int k = 0; k < p; ++k)
    if (G.cols[k + 1] - G.cols[k] > 40.0 / m && pts_col[k] > t) return fail("(III) column " + std::to_string(k));
  for (int k = 0; k < q; ++k)
    if (G.rows[k + 1] - G.rows[k] > 40.0 / m && pts_row[k] > t) return fail("(III) row " + std::to_string(k));
  return rep;
}

}  // namespace pav
