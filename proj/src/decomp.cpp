#include "pav/decomp.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "pav/simd.hpp"

namespace pav {

Rect bbox(const Rect& a, const Rect& b) {
  return {std::min(a.x_lo, b.x_lo), std::max(a.x_hi, b.x_hi), std::min(a.y_lo, b.y_lo),
          std::max(a.y_hi, b.y_hi)};
}

bool is_homogeneous(const Rect& a, const Rect& b) {
  bool x_apart = a.x_hi < b.x_lo || b.x_hi < a.x_lo;
  bool y_apart = a.y_hi < b.y_lo || b.y_hi < a.y_lo;
  return x_apart && y_apart;
}

void validate(const MergeSequence& ms) {
  const int n = static_cast<int>(ms.base.size());
  if (static_cast<int>(ms.steps.size()) != std::max(0, n - 1))
    throw std::invalid_argument("merge sequence must have n-1 steps");
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < ms.steps.size(); ++i) {
    auto [a, b] = ms.steps[i];
    if (a < 0 || b >= n || a >= b || !alive[a] || !alive[b])
      throw std::invalid_argument("merge step " + std::to_string(i) + " names a dead or invalid rectangle");
    alive[b] = 0;
  }
}

std::vector<int> red_degrees(const std::vector<Rect>& family) {
  std::vector<int> deg(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!is_homogeneous(family[i], family[j])) {
        ++deg[i];
        ++deg[j];
      }
  return deg;
}

int width(const MergeSequence& ms) {
  validate(ms);
  const int n = static_cast<int>(ms.base.size());
  if (n == 0) return 1;
  const double inf = INFINITY;
  std::vector<double> xl(n), xh(n), yl(n), yh(n);
  for (int i = 0; i < n; ++i) {
    xl[i] = xh[i] = ms.base[i].x;
    yl[i] = yh[i] = ms.base[i].y;
  }
  auto red = [&](int i, double a, double b, double c, double d) {
    bool xo = xl[i] <= b && a <= xh[i];
    bool yo = yl[i] <= d && c <= yh[i];
    return xo || yo;
  };
  const auto& k = simd::kernels();
  std::vector<int> deg(n, 0);  // general position: all points start homogeneous
  int best = 0;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  for (auto [a, b] : ms.steps) {
    Rect ra{xl[a], xh[a], yl[a], yh[a]}, rb{xl[b], xh[b], yl[b], yh[b]};
    Rect q = bbox(ra, rb);
    // retire b so it never counts as overlapping
    xl[b] = yl[b] = inf;
    xh[b] = yh[b] = -inf;
    xl[a] = q.x_lo;
    xh[a] = q.x_hi;
    yl[a] = q.y_lo;
    yh[a] = q.y_hi;
    live.erase(std::find(live.begin(), live.end(), b));
    int mx = 0;
    for (int r : live) {
      if (r == a) continue;
      Rect rr{xl[r], xh[r], yl[r], yh[r]};
      deg[r] -= !is_homogeneous(rr, ra) + !is_homogeneous(rr, rb);
      deg[r] += red(r, q.x_lo, q.x_hi, q.y_lo, q.y_hi);
      mx = std::max(mx, deg[r]);
    }
    deg[a] = k.count_overlapping(xl.data(), xh.data(), yl.data(), yh.data(), n, q.x_lo, q.x_hi, q.y_lo, q.y_hi) - 1;
    best = std::max({best, mx, deg[a]});
  }
  return best + 1;
}

MergeSequence canonical_grid_merge_sequence(int k, int l) {
  MergeSequence ms;
  ms.base = PointSet(canonical_grid_points(k, l));
  auto id = [l](int i, int j) { return (i - 1) * l + (j - 1); };
  if (k <= l) {
    // grow each column from its lowest point upward, sweeping columns left to right
    for (int j = 2; j <= l; ++j)
      for (int i = 1; i <= k; ++i) ms.steps.push_back({id(i, 1), id(i, j)});
    for (int i = 2; i <= k; ++i) ms.steps.push_back({id(1, 1), id(i, 1)});
  } else {
    // mirrored plan: grow each row from its rightmost point, rows bottom to top
    for (int r = 2; r <= k; ++r)
      for (int j = 1; j <= l; ++j) ms.steps.push_back({id(k - r + 1, j), id(k - r + 2, j)});
    for (int j = 2; j <= l; ++j) ms.steps.push_back({id(1, 1), id(1, j)});
  }
  return ms;
}

int brute_force_twin_width(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  if (n > 9) throw std::invalid_argument("brute_force_twin_width: at most 9 points");
  if (n <= 1) return 1;
  // state: restricted-growth labels packed 4 bits per point
  auto decode = [n](std::uint64_t code) {
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = static_cast<int>((code >> (4 * i)) & 15);
    return lab;
  };
  auto encode = [n](const std::vector<int>& lab) {
    std::vector<int> remap(16, -1);
    int next = 0;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      if (remap[lab[i]] < 0) remap[lab[i]] = next++;
      code |= static_cast<std::uint64_t>(remap[lab[i]]) << (4 * i);
    }
    return code;
  };
  auto family = [&](const std::vector<int>& lab) {
    int parts = *std::max_element(lab.begin(), lab.end()) + 1;
    std::vector<Rect> f(parts, Rect{INFINITY, -INFINITY, INFINITY, -INFINITY});
    for (int i = 0; i < n; ++i) f[lab[i]] = bbox(f[lab[i]], Rect::of(P[i]));
    return f;
  };
  std::unordered_map<std::uint64_t, int> memo;
  // best achievable max degree over the remaining families, excluding the current one
  auto solve = [&](auto&& self, std::uint64_t code) -> int {
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
    std::vector<int> lab = decode(code);
    int parts = *std::max_element(lab.begin(), lab.end()) + 1;
    int best = INT_MAX;
    if (parts == 1) best = 0;
    for (int a = 0; a < parts; ++a)
      for (int b = a + 1; b < parts; ++b) {
        std::vector<int> nl = lab;
        for (int& v : nl)
          if (v == b) v = a;
        std::uint64_t nc = encode(nl);
        auto deg = red_degrees(family(decode(nc)));
        int here = *std::max_element(deg.begin(), deg.end());
        if (here >= best) continue;
        best = std::min(best, std::max(here, self(self, nc)));
      }
    memo[code] = best;
    return best;
  };
  std::vector<int> start(n);
  for (int i = 0; i < n; ++i) start[i] = i;
  auto deg0 = red_degrees(family(start));
  return 1 + std::max(*std::max_element(deg0.begin(), deg0.end()), solve(solve, encode(start)));
}

int Gridding::col_of_rank(int r) const {
  return static_cast<int>(std::upper_bound(col_cuts.begin(), col_cuts.end(), r) - col_cuts.begin());
}

int Gridding::row_of_rank(int r) const {
  return static_cast<int>(std::upper_bound(row_cuts.begin(), row_cuts.end(), r) - row_cuts.begin());
}

double Decomposition::cut_x(int c) const {
  const int N = n();
  if (c <= 0) return 0.0;
  if (c >= N) return 1.0;
  const auto& bx = merge.base.by_x();
  return 0.5 * (unit[bx[c - 1]].x + unit[bx[c]].x);
}

double Decomposition::cut_y(int c) const {
  const int N = n();
  if (c <= 0) return 0.0;
  if (c >= N) return 1.0;
  const auto& by = merge.base.by_y();
  return 0.5 * (unit[by[c - 1]].y + unit[by[c]].y);
}

Gridding Decomposition::gridding(int steps_done) const {
  const int N = n();
  std::vector<char> cgone(N + 1, 0), rgone(N + 1, 0);
  for (int s = 0; s < steps_done && s < static_cast<int>(removed_cols.size()); ++s) {
    for (int c : removed_cols[s]) cgone[c] = 1;
    for (int c : removed_rows[s]) rgone[c] = 1;
  }
  Gridding g;
  for (int c : col_cuts0)
    if (!cgone[c]) g.col_cuts.push_back(c);
  for (int c : row_cuts0)
    if (!rgone[c]) g.row_cuts.push_back(c);
  g.cols.push_back(0.0);
  for (int c : g.col_cuts) g.cols.push_back(cut_x(c));
  g.cols.push_back(1.0);
  g.rows.push_back(0.0);
  for (int c : g.row_cuts) g.rows.push_back(cut_y(c));
  g.rows.push_back(1.0);
  return g;
}

namespace {

constexpr double kC = 20.0;

struct Line {
  int lo = 0, hi = 0;  // rank range [lo, hi)
  int prev = -1, next = -1;
  bool alive = true;
  bool big = false;  // wide column / tall row
  int cnt = 0;       // rectangles inside
  double size = 0;
  std::vector<int> cells;  // perpendicular line ids with a non-empty cell
};

struct Axis {
  std::vector<Line> L;
  int alive = 0;
  std::set<std::pair<double, int>> by_size;
  std::set<std::pair<int, int>> viol;  // (lo of left line, left id)
};

class Builder {
 public:
  Builder(const std::vector<Point>& unit, const PointSet& base, int t) : n_(static_cast<int>(unit.size())), t_(t) {
    xs_.resize(n_);
    ys_.resize(n_);
    for (int r = 0; r < n_; ++r) {
      xs_[r] = unit[base.by_x()[r]].x;
      ys_[r] = unit[base.by_y()[r]].y;
    }
    const int s = (n_ + t - 1) / t;
    for (Axis* ax : {&col_, &row_}) {
      ax->L.resize(s);
      ax->alive = s;
      for (int i = 0; i < s; ++i) {
        Line& l = ax->L[i];
        l.lo = i * t;
        l.hi = std::min(n_, (i + 1) * t);
        l.prev = i - 1;
        l.next = i + 1 < s ? i + 1 : -1;
      }
    }
    rect_col_.resize(n_);
    rect_row_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      int c = (base.xrank(p) - 1) / t, r = (base.yrank(p) - 1) / t;
      rect_col_[p] = c;
      rect_row_[p] = r;
      auto& v = cell_[key(c, r)];
      if (v.empty()) {
        col_.L[c].cells.push_back(r);
        row_.L[r].cells.push_back(c);
      }
      v.push_back(p);
      ++col_.L[c].cnt;
      ++row_.L[r].cnt;
    }
    for (bool is_col : {true, false}) {
      Axis& ax = axis(is_col);
      for (int i = 0; i < s; ++i) {
        ax.L[i].size = extent(is_col, ax.L[i].lo, ax.L[i].hi);
        ax.L[i].big = ax.L[i].size > kC / ax.alive;
        ax.by_size.insert({ax.L[i].size, i});
      }
    }
    for (int c = 0; c < s; ++c) refresh_line_cells(true, c);
    for (bool is_col : {true, false})
      for (int i = 0; i < s; ++i) touch_pairs(is_col, i);
  }

  std::optional<std::pair<std::vector<std::pair<int, int>>, std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>>>
  run(int& stuck_live) {
    std::vector<std::pair<int, int>> steps;
    std::vector<std::vector<int>> rc, rr;
    int live = n_;
    coarsen(nullptr, nullptr);
    while (live >= 2) {
      if (eligible_.empty()) {
        stuck_live = live;
        return std::nullopt;
      }
      auto [rlo, clo, c, r] = *eligible_.begin();
      (void)rlo;
      (void)clo;
      auto& v = cell_[key(c, r)];
      std::partial_sort(v.begin(), v.begin() + 2, v.end());
      int a = v[0], b = v[1];
      v.erase(v.begin() + 1);
      steps.push_back({a, b});
      --col_.L[c].cnt;
      --row_.L[r].cnt;
      refresh_cell(c, r);
      touch_pairs(true, c);
      touch_pairs(false, r);
      --live;
      rc.emplace_back();
      rr.emplace_back();
      coarsen(&rc.back(), &rr.back());
    }
    return std::make_pair(std::move(steps), std::make_pair(std::move(rc), std::move(rr)));
  }

  std::vector<int> initial_cuts() const {
    std::vector<int> cuts;
    for (int c = t_; c < n_; c += t_) cuts.push_back(c);
    return cuts;
  }

 private:
  static std::uint64_t key(int c, int r) {
    return (static_cast<std::uint64_t>(static_cast<unsigned>(c)) << 32) | static_cast<unsigned>(r);
  }
  Axis& axis(bool is_col) { return is_col ? col_ : row_; }

  double cut(bool is_col, int c) const {
    if (c <= 0) return 0.0;
    if (c >= n_) return 1.0;
    const auto& v = is_col ? xs_ : ys_;
    return 0.5 * (v[c - 1] + v[c]);
  }
  double extent(bool is_col, int lo, int hi) const { return cut(is_col, hi) - cut(is_col, lo); }

  void refresh_cell(int c, int r) {
    auto it = cell_.find(key(c, r));
    const Line& cl = col_.L[c];
    const Line& rl = row_.L[r];
    auto k = std::make_tuple(rl.lo, cl.lo, c, r);
    bool ok = it != cell_.end() && it->second.size() >= 2 && !cl.big && !rl.big;
    if (ok)
      eligible_.insert(k);
    else
      eligible_.erase(k);
  }

  void refresh_line_cells(bool is_col, int id) {
    for (int q : axis(is_col).L[id].cells) {
      if (is_col)
        refresh_cell(id, q);
      else
        refresh_cell(q, id);
    }
  }

  void forget_line_cells(bool is_col, int id) {
    const Line& l = axis(is_col).L[id];
    for (int q : l.cells) {
      int c = is_col ? id : q, r = is_col ? q : id;
      eligible_.erase(std::make_tuple(row_.L[r].lo, col_.L[c].lo, c, r));
    }
  }

  void eval_pair(bool is_col, int left) {
    Axis& ax = axis(is_col);
    if (left < 0) return;
    const Line& a = ax.L[left];
    auto k = std::make_pair(a.lo, left);
    int right = a.next;
    bool bad = a.alive && right >= 0 && !a.big && !ax.L[right].big && a.cnt + ax.L[right].cnt <= t_;
    if (bad)
      ax.viol.insert(k);
    else
      ax.viol.erase(k);
  }

  void touch_pairs(bool is_col, int id) {
    eval_pair(is_col, axis(is_col).L[id].prev);
    eval_pair(is_col, id);
  }

  void set_big(bool is_col, int id) {
    Axis& ax = axis(is_col);
    Line& l = ax.L[id];
    bool nb = l.size > kC / ax.alive;
    if (nb == l.big) return;
    l.big = nb;
    refresh_line_cells(is_col, id);
    touch_pairs(is_col, id);
  }

  void merge_lines(bool is_col, int a, std::vector<int>* removed) {
    Axis& ax = axis(is_col);
    Axis& other = axis(!is_col);
    int b = ax.L[a].next;
    forget_line_cells(is_col, a);
    forget_line_cells(is_col, b);
    ax.viol.erase({ax.L[a].lo, a});
    ax.viol.erase({ax.L[b].lo, b});
    ax.by_size.erase({ax.L[a].size, a});
    ax.by_size.erase({ax.L[b].size, b});
    for (int q : ax.L[b].cells) {
      int cb = is_col ? b : q, rb = is_col ? q : b;
      int ca = is_col ? a : q, ra = is_col ? q : a;
      auto src = cell_.find(key(cb, rb));
      auto& dst = cell_[key(ca, ra)];
      bool fresh = dst.empty();
      for (int rect : src->second) {
        if (is_col)
          rect_col_[rect] = a;
        else
          rect_row_[rect] = a;
        dst.push_back(rect);
      }
      cell_.erase(src);
      auto& oc = other.L[q].cells;
      oc.erase(std::find(oc.begin(), oc.end(), b));
      if (fresh) {
        ax.L[a].cells.push_back(q);
        oc.push_back(a);
      }
    }
    Line& la = ax.L[a];
    Line& lb = ax.L[b];
    if (removed) removed->push_back(lb.lo);
    la.hi = lb.hi;
    la.cnt += lb.cnt;
    la.next = lb.next;
    if (lb.next >= 0) ax.L[lb.next].prev = a;
    lb.alive = false;
    lb.cells.clear();
    const double old_thr = kC / ax.alive;
    --ax.alive;
    const double new_thr = kC / ax.alive;
    la.size = extent(is_col, la.lo, la.hi);
    la.big = la.size > new_thr;
    ax.by_size.insert({la.size, a});
    // fewer lines raise the threshold; some big lines stop being big
    std::vector<int> flips;
    for (auto it = ax.by_size.lower_bound({old_thr, INT_MIN}); it != ax.by_size.end() && it->first <= new_thr; ++it)
      if (it->second != a) flips.push_back(it->second);
    for (int id : flips) set_big(is_col, id);
    refresh_line_cells(is_col, a);
    touch_pairs(is_col, a);
  }

  void coarsen(std::vector<int>* rc, std::vector<int>* rr) {
    for (;;) {
      if (!col_.viol.empty()) {
        merge_lines(true, col_.viol.begin()->second, rc);
      } else if (!row_.viol.empty()) {
        merge_lines(false, row_.viol.begin()->second, rr);
      } else {
        break;
      }
    }
  }

  int n_, t_;
  std::vector<double> xs_, ys_;
  Axis col_, row_;
  std::vector<int> rect_col_, rect_row_;
  std::unordered_map<std::uint64_t, std::vector<int>> cell_;
  std::set<std::tuple<int, int, int, int>> eligible_;
};

void to_unit(const PointSet& P, Decomposition& d) {
  const auto& pts = P.points();
  d.unit = pts;
  if (pts.empty()) return;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  if (x0 >= 0 && x1 <= 1 && y0 >= 0 && y1 <= 1) return;  // already inside the unit square
  auto fit = [](double lo, double hi, double& s, double& o) {
    if (hi > lo) {
      s = 1.0 / (hi - lo);
      o = -lo * s;
    } else {
      s = 1.0;
      o = 0.5 - lo;
    }
  };
  fit(x0, x1, d.sx, d.ox);
  fit(y0, y1, d.sy, d.oy);
  for (Point& p : d.unit) {
    p.x = p.x * d.sx + d.ox;
    p.y = p.y * d.sy + d.oy;
  }
}

}  // namespace

BuildResult build_distance_balanced(const PointSet& P, int t) {
  if (t < 1) throw std::invalid_argument("build_distance_balanced: t must be positive");
  Decomposition dec;
  dec.merge.base = P;
  dec.t = t;
  dec.d = 2 * t;
  to_unit(P, dec);
  BuildResult res;
  if (P.size() <= 1) {
    res.dec = std::move(dec);
    return res;
  }
  Builder b(dec.unit, P, t);
  int stuck = 0;
  auto out = b.run(stuck);
  if (!out) {
    res.stuck_live = stuck;
    return res;
  }
  dec.merge.steps = std::move(out->first);
  dec.removed_cols = std::move(out->second.first);
  dec.removed_rows = std::move(out->second.second);
  dec.col_cuts0 = b.initial_cuts();
  dec.row_cuts0 = dec.col_cuts0;
  res.dec = std::move(dec);
  return res;
}

Decomposition build_adaptive(const PointSet& P) {
  for (long t = 2;; t *= 2) {
    BuildResult r = build_distance_balanced(P, static_cast<int>(t));
    if (r.ok()) return std::move(*r.dec);
    if (t >= static_cast<long>(P.size())) throw std::logic_error("build_adaptive: failed at t >= n");
  }
}

double harmonic(int k) {
  double h = 0;
  for (int i = 1; i <= k; ++i) h += 1.0 / i;
  return h;
}

double rect_dimension_sum(const Decomposition& dec) {
  const int n = dec.n();
  std::vector<Rect> r(n);
  for (int i = 0; i < n; ++i) r[i] = Rect::of(dec.unit[i]);
  double total = 0;
  for (auto [a, b] : dec.merge.steps) {
    r[a] = bbox(r[a], r[b]);
    total += r[a].width() + r[a].height();
  }
  return total;
}

void write_decomposition(std::ostream& out, const Decomposition& dec) {
  const int n = dec.n();
  out << n << ' ' << dec.t << ' ' << dec.d << '\n';
  for (auto [a, b] : dec.merge.steps) out << a << ' ' << b << '\n';
  auto list = [&](const char* tag, const std::vector<int>& v) {
    out << tag;
    for (int c : v) out << ' ' << c;
  };
  list("cols", dec.col_cuts0);
  out << '\n';
  list("rows", dec.row_cuts0);
  out << '\n';
  for (std::size_t i = 0; i < dec.merge.steps.size(); ++i) {
    out << "step " << i + 1 << ' ';
    list("cols", i < dec.removed_cols.size() ? dec.removed_cols[i] : std::vector<int>{});
    out << ' ';
    list("rows", i < dec.removed_rows.size() ? dec.removed_rows[i] : std::vector<int>{});
    out << '\n';
  }
}

Decomposition read_decomposition(std::istream& in, const PointSet& base) {
  auto fail = [](const std::string& why) { throw std::runtime_error("read_decomposition: " + why); };
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    return false;
  };
  Decomposition dec;
  dec.merge.base = base;
  int n = 0;
  if (!next_line()) fail("missing header");
  {
    std::istringstream h(line);
    if (!(h >> n >> dec.t >> dec.d)) fail("bad header");
  }
  if (n != static_cast<int>(base.size())) fail("point count mismatch");
  to_unit(base, dec);
  for (int i = 0; i + 1 < n; ++i) {
    if (!next_line()) fail("missing merge step");
    std::istringstream s(line);
    int a, b;
    if (!(s >> a >> b)) fail("bad merge step");
    dec.merge.steps.push_back({a, b});
  }
  validate(dec.merge);
  if (n <= 1) return dec;
  // "tag v v v ... [tag v v ...]" into the named lists
  auto parse_lists = [&](std::istringstream& s, std::vector<int>& cols, std::vector<int>& rows) {
    std::string tok;
    std::vector<int>* cur = nullptr;
    while (s >> tok) {
      if (tok == "cols")
        cur = &cols;
      else if (tok == "rows")
        cur = &rows;
      else if (!cur)
        fail("value before list tag");
      else
        cur->push_back(std::stoi(tok));
    }
  };
  for (int k = 0; k < 2; ++k) {
    if (!next_line()) fail("missing initial cuts");
    std::istringstream s(line);
    parse_lists(s, dec.col_cuts0, dec.row_cuts0);
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!next_line()) fail("missing gridding step");
    std::istringstream s(line);
    std::string tag;
    int idx;
    if (!(s >> tag >> idx) || tag != "step" || idx != i + 1) fail("bad gridding step");
    dec.removed_cols.emplace_back();
    dec.removed_rows.emplace_back();
    parse_lists(s, dec.removed_cols.back(), dec.removed_rows.back());
  }
  return dec;
}

}  // namespace pav
