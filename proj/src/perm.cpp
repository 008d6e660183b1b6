#include "pav/perm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace pav {

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void require_perm(const Perm& p) {
  if (!is_perm(p)) throw std::invalid_argument("not a permutation: " + to_string(p));
}

std::string to_string(const Perm& p) {
  std::string s;
  bool wide = p.size() >= 10;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

Perm parse_perm(const std::string& s) {
  Perm p;
  if (s.find_first_of(" ,\t") != std::string::npos) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    int v;
    while (in >> v) p.push_back(v);
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad pattern: " + s);
      p.push_back(c - '0');
    }
  }
  require_perm(p);
  return p;
}

ContainsPattern::ContainsPattern(Perm pat, std::vector<int> w)
    : std::runtime_error([&] {
        std::string m = "input contains " + to_string(pat) + " at";
        for (int i : w) m += " " + std::to_string(i);
        return m;
      }()),
      pattern(std::move(pat)),
      witness(std::move(w)) {}

std::vector<int> ranks(const Seq& v) {
  std::vector<int> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
  std::vector<int> r(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i && !(v[idx[i - 1]] < v[idx[i]]))
      throw NotGeneralPosition("repeated value " + std::to_string(v[idx[i]]) + "; see perturb_to_general_position");
    r[idx[i]] = static_cast<int>(i) + 1;
  }
  return r;
}

Perm perm_of(const Seq& v) { return ranks(v); }

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  const std::size_t n = pts_.size();
  Seq xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = pts_[i].x;
    ys[i] = pts_[i].y;
  }
  xr_ = ranks(xs);
  yr_ = ranks(ys);
  byx_.assign(n, 0);
  byy_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    byx_[xr_[i] - 1] = static_cast<int>(i);
    byy_[yr_[i] - 1] = static_cast<int>(i);
  }
}

PointSet PointSet::from_perm(const Perm& p) {
  require_perm(p);
  const double n = static_cast<double>(p.size());
  std::vector<Point> pts(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pts[i] = {(i + 0.5) / n, (p[i] - 0.5) / n};
  return PointSet(std::move(pts));
}

PointSet PointSet::from_requests(const Seq& values) {
  const double n = static_cast<double>(values.size());
  std::vector<Point> pts(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) pts[i] = {(i + 0.5) / n, values[i]};
  return PointSet(std::move(pts));
}

Perm PointSet::to_perm() const {
  Perm p(size());
  for (std::size_t r = 0; r < size(); ++r) p[r] = yr_[byx_[r]];
  return p;
}

bool is_order_isomorphic(const Seq& x, const Seq& y) {
  if (x.size() != y.size()) throw std::invalid_argument("is_order_isomorphic: length mismatch");
  return ranks(x) == ranks(y);
}

namespace {

// Range-max over pos[value]: does some value in (lo,hi) appear at a position >= start?
struct ValuePosTable {
  std::vector<std::vector<int>> t;
  std::vector<int> lg;
  explicit ValuePosTable(const Perm& tau) {
    const int n = static_cast<int>(tau.size());
    lg.assign(n + 2, 0);
    for (int i = 2; i <= n + 1; ++i) lg[i] = lg[i / 2] + 1;
    t.emplace_back(n);
    for (int i = 0; i < n; ++i) t[0][tau[i] - 1] = i;
    for (int k = 1; (1 << k) <= n; ++k) {
      t.emplace_back(n - (1 << k) + 1);
      for (int i = 0; i + (1 << k) <= n; ++i)
        t[k][i] = std::max(t[k - 1][i], t[k - 1][i + (1 << (k - 1))]);
    }
  }
  // values are 1-based; open interval (lo,hi)
  bool any_after(int lo, int hi, int start) const {
    int a = lo, b = hi - 2;  // 0-based value indices lo..hi-2
    if (a > b) return false;
    int k = lg[b - a + 1];
    return std::max(t[k][a], t[k][b - (1 << k) + 1]) >= start;
  }
};

struct Matcher {
  const Perm& tau;
  const Perm& pi;
  ValuePosTable table;
  std::vector<int> below, above;  // earlier pattern index with nearest smaller/larger value
  std::vector<int> chosen;        // positions in tau

  Matcher(const Perm& t, const Perm& p) : tau(t), pi(p), table(t) {
    const int k = static_cast<int>(p.size());
    below.assign(k, -1);
    above.assign(k, -1);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        if (pi[i] < pi[j] && (below[j] < 0 || pi[i] > pi[below[j]])) below[j] = i;
        if (pi[i] > pi[j] && (above[j] < 0 || pi[i] < pi[above[j]])) above[j] = i;
      }
    chosen.assign(k, -1);
  }

  int lo(int j) const { return below[j] < 0 ? 0 : tau[chosen[below[j]]]; }
  int hi(int j) const {
    return above[j] < 0 ? static_cast<int>(tau.size()) + 1 : tau[chosen[above[j]]];
  }

  bool run(int j, int start) {
    const int k = static_cast<int>(pi.size());
    const int n = static_cast<int>(tau.size());
    if (j == k) return true;
    const int l = lo(j), h = hi(j);
    if (!table.any_after(l, h, start)) return false;
    for (int p = start; p <= n - (k - j); ++p) {
      if (tau[p] <= l || tau[p] >= h) continue;
      chosen[j] = p;
      if (run(j + 1, p + 1)) return true;
    }
    chosen[j] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_pattern(const Perm& tau, const Perm& pi) {
  require_perm(tau);
  require_perm(pi);
  if (pi.empty()) return std::vector<int>{};
  if (pi.size() > tau.size()) return std::nullopt;
  Matcher m(tau, pi);
  if (m.run(0, 0)) return m.chosen;
  return std::nullopt;
}

bool contains(const Perm& tau, const Perm& pi) { return find_pattern(tau, pi).has_value(); }
bool contains(const Seq& x, const Perm& pi) { return contains(perm_of(x), pi); }
bool contains(const PointSet& P, const Perm& pi) { return contains(P.to_perm(), pi); }

std::optional<std::vector<int>> find_231(const Seq& x) {
  const int n = static_cast<int>(x.size());
  if (n < 3) return std::nullopt;
  // suffix minimum and its position
  std::vector<int> sufmin(n + 1, -1);
  for (int i = n - 1; i >= 0; --i)
    sufmin[i] = (sufmin[i + 1] < 0 || x[i] < x[sufmin[i + 1]]) ? i : sufmin[i + 1];
  std::map<double, int> seen;  // value -> position
  for (int j = 0; j < n; ++j) {
    auto it = seen.lower_bound(x[j]);
    if (it != seen.begin()) {
      --it;  // largest earlier value below x[j]
      int l = sufmin[j + 1];
      if (l >= 0 && x[l] < it->first) return std::vector<int>{it->second, j, l};
    }
    seen.emplace(x[j], j);
  }
  return std::nullopt;
}

// Every distinct pattern formed by a subset of pi's entries, indexed for bitmask DP.
struct SubpatternIndex {
  std::vector<Perm> pats;
  std::map<Perm, int> id;
  explicit SubpatternIndex(const Perm& pi) {
    const int k = static_cast<int>(pi.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      Seq sub;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) sub.push_back(pi[i]);
      Perm p = sub.empty() ? Perm{} : perm_of(sub);
      if (!id.count(p)) {
        id[p] = static_cast<int>(pats.size());
        pats.push_back(p);
      }
    }
  }
};

namespace {

Perm normalise(const Perm& p) {
  if (p.empty()) return p;
  Seq s(p.begin(), p.end());
  return perm_of(s);
}

}  // namespace

PatternSplit split_pattern(const Perm& pi) {
  if (pi.empty()) throw std::invalid_argument("split_pattern: empty pattern");
  PatternSplit s;
  s.first = pi[0];
  std::size_t i = 1;
  Perm a, b;
  while (i < pi.size() && pi[i] < pi[0]) a.push_back(pi[i++]);
  while (i < pi.size() && pi[i] > pi[0]) b.push_back(pi[i++]);
  if (i != pi.size()) throw ContainsPattern({2, 3, 1}, {});
  s.alpha = normalise(a);
  s.beta = normalise(b);
  return s;
}

Av231Table::Av231Table(const Seq& x, const Perm& pi) {
  require_perm(pi);
  const int n = static_cast<int>(x.size());
  auto idx = std::make_shared<SubpatternIndex>(pi);
  const int m = static_cast<int>(idx->pats.size());
  m_ = m;
  const int empty_id = idx->id.at(Perm{});
  // rule tables: for each pattern, b-form (alpha,beta) and sum splits
  std::vector<std::pair<int, int>> bform(m, {-1, -1});
  std::vector<std::vector<std::pair<int, int>>> sums(m);
  for (int s = 0; s < m; ++s) {
    const Perm& p = idx->pats[s];
    if (p.empty()) continue;
    try {
      PatternSplit sp = split_pattern(p);
      bform[s] = {idx->id.at(sp.alpha), idx->id.at(sp.beta)};
    } catch (const ContainsPattern&) {
    }
    int mx = 0;
    for (std::size_t j = 1; j < p.size(); ++j) {
      mx = std::max(mx, p[j - 1]);
      if (mx == static_cast<int>(j)) {
        Perm lo(p.begin(), p.begin() + j), hi(p.begin() + j, p.end());
        sums[s].push_back({idx->id.at(normalise(lo)), idx->id.at(normalise(hi))});
      }
    }
  }
  // left child i+1 runs up to the next greater entry, right child takes the rest
  std::vector<int> ng(n, n), st;
  for (int i = n - 1; i >= 0; --i) {
    while (!st.empty() && x[st.back()] < x[i]) st.pop_back();
    ng[i] = st.empty() ? n : st.back();
    st.push_back(i);
  }
  end_.assign(n, n);
  mid_.assign(n, n);
  for (int i = 0; i < n; ++i) {
    int mid = std::min(ng[i], end_[i]);
    mid_[i] = mid;
    if (i + 1 < mid) end_[i + 1] = mid;
    if (mid < end_[i]) end_[mid] = end_[i];
  }
  has_.assign(static_cast<std::size_t>(n) * m, 0);
  std::vector<char> none(m, 0);
  none[empty_id] = 1;
  for (int i = n - 1; i >= 0; --i) {
    int mid = mid_[i];
    const char* l = (i + 1 < mid) ? &has_[static_cast<std::size_t>(i + 1) * m] : none.data();
    const char* r = (mid < end_[i]) ? &has_[static_cast<std::size_t>(mid) * m] : none.data();
    char* h = &has_[static_cast<std::size_t>(i) * m];
    for (int s = 0; s < m; ++s) {
      bool c = l[s] || r[s];
      if (!c && bform[s].first >= 0) c = l[bform[s].first] && r[bform[s].second];
      for (std::size_t q = 0; !c && q < sums[s].size(); ++q) c = l[sums[s][q].first] && r[sums[s][q].second];
      h[s] = c;
    }
  }
  index_ = std::move(idx);
}

int Av231Table::pattern_id(const Perm& sub) const {
  auto it = index_->id.find(sub);
  if (it == index_->id.end()) throw std::invalid_argument("Av231Table: not a subpattern of the indexed pattern");
  return it->second;
}

bool Av231Table::range_contains(int lo, int hi, const Perm& sub) const {
  if (sub.empty()) return true;
  if (lo >= hi) return false;
  if (end_[lo] != hi) throw std::invalid_argument("Av231Table: range is not a tree node");
  return has_[static_cast<std::size_t>(lo) * m_ + pattern_id(sub)];
}

bool contains_in_231_avoider(const Seq& x, const Perm& pi) {
  require_perm(pi);
  if (pi.empty()) return true;
  if (x.empty()) return false;
  return Av231Table(x, pi).range_contains(0, static_cast<int>(x.size()), pi);
}

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm decreasing(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

Perm reversal(const Perm& p) { return Perm(p.rbegin(), p.rend()); }

Perm complement(const Perm& p) {
  Perm q(p.size());
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) q[i] = n + 1 - p[i];
  return q;
}

Perm sum(const Perm& a, const Perm& b) {
  Perm r = a;
  for (int v : b) r.push_back(v + static_cast<int>(a.size()));
  return r;
}

Perm skew_sum(const Perm& a, const Perm& b) {
  Perm r;
  for (int v : a) r.push_back(v + static_cast<int>(b.size()));
  for (int v : b) r.push_back(v);
  return r;
}

Perm inflate(const Perm& skel, const std::vector<Perm>& blocks) {
  require_perm(skel);
  if (skel.size() != blocks.size())
    throw std::invalid_argument("inflate: skeleton length does not match block count");
  // value offset of block i = total size of blocks whose skeleton value is smaller
  std::vector<int> sz_by_val(skel.size() + 1, 0);
  for (std::size_t i = 0; i < skel.size(); ++i) sz_by_val[skel[i]] = static_cast<int>(blocks[i].size());
  std::vector<int> off(skel.size() + 2, 0);
  for (std::size_t v = 1; v <= skel.size(); ++v) off[v + 1] = off[v] + sz_by_val[v];
  Perm r;
  for (std::size_t i = 0; i < skel.size(); ++i)
    for (int v : blocks[i]) r.push_back(v + off[skel[i]]);
  return r;
}

std::vector<Point> canonical_grid_points(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("canonical_grid: k,l must be positive");
  std::vector<Point> pts;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      pts.push_back({static_cast<double>((i - 1) * l + (l - j + 1)), static_cast<double>((j - 1) * k + i)});
  return pts;
}

Perm canonical_grid(int k, int l) {
  auto pts = canonical_grid_points(k, l);
  Perm p(pts.size());
  for (const Point& q : pts) p[static_cast<int>(q.x) - 1] = static_cast<int>(q.y);
  return p;
}

bool is_separable(const Perm& p) { return !contains(p, {3, 1, 4, 2}) && !contains(p, {2, 4, 1, 3}); }

bool is_separable_tree(const Perm& p) {
  require_perm(p);
  if (p.empty()) return true;
  struct Blk {
    int lo, hi;
  };
  std::vector<Blk> st;
  for (int v : p) {
    st.push_back({v, v});
    while (st.size() >= 2) {
      Blk a = st[st.size() - 2], b = st.back();
      if (a.hi + 1 == b.lo || b.hi + 1 == a.lo) {
        st.pop_back();
        st.back() = {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
      } else {
        break;
      }
    }
  }
  return st.size() == 1;
}

Split231 decompose_231(const Seq& x) {
  if (x.empty()) throw std::invalid_argument("decompose_231: empty sequence");
  Split231 s;
  s.b = x[0];
  std::size_t i = 1;
  while (i < x.size() && x[i] <= s.b) s.x1.push_back(x[i++]);
  std::size_t first2 = i;
  for (; i < x.size(); ++i) {
    if (x[i] < s.b) throw ContainsPattern({2, 3, 1}, {0, static_cast<int>(first2), static_cast<int>(i)});
    s.x2.push_back(x[i]);
  }
  return s;
}

std::vector<std::pair<int, int>> block_bounds(const Seq& x) {
  const int n = static_cast<int>(x.size());
  if (n <= 1) return {{0, n}};
  std::vector<int> r = ranks(x);
  // sum split: prefix holds exactly the smallest values; take the last such cut
  int mx = 0, mn = n + 1, sum_cut = -1, skew_cut = -1;
  for (int j = 1; j < n; ++j) {
    mx = std::max(mx, r[j - 1]);
    mn = std::min(mn, r[j - 1]);
    if (mx == j) sum_cut = j;
    if (mn == n - j + 1) skew_cut = j;
  }
  int cut = sum_cut >= 0 ? sum_cut : skew_cut;
  if (cut >= 0) return {{0, cut}, {cut, n}};
  // simple skeleton: longest proper interval from each block start
  std::vector<std::pair<int, int>> out;
  bool all_single = true;
  for (int i = 0; i < n;) {
    int best = i + 1, lo = r[i], hi = r[i];
    for (int j = i + 1; j < n; ++j) {
      lo = std::min(lo, r[j]);
      hi = std::max(hi, r[j]);
      if (hi - lo == j - i && j - i + 1 < n) best = j + 1;
    }
    if (best - i > 1) all_single = false;
    out.push_back({i, best});
    i = best;
  }
  if (all_single) return {{0, n}};
  return out;
}

Blocks block_decompose(const Seq& x) {
  Blocks b;
  for (auto [s, e] : block_bounds(x)) b.emplace_back(x.begin() + s, x.begin() + e);
  return b;
}

std::vector<Point> perturb_to_general_position(const std::vector<Point>& pts, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("perturb: eps must be positive");
  std::vector<double> xs, ys;
  for (const Point& p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  auto min_gap = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double g = INFINITY;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[i - 1]) g = std::min(g, v[i] - v[i - 1]);
    return g;
  };
  auto range = [](const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  double gap = std::min(min_gap(xs), min_gap(ys));
  double span = std::max(range(xs), range(ys));
  // a shift of eps*span must not reorder two strictly separated coordinates
  if (std::isfinite(gap) && (eps >= gap || eps * span >= gap))
    throw std::invalid_argument("perturb: eps too large for the minimum coordinate gap");
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back({p.x + eps * p.y, p.y + eps * p.x});
  return out;
}

PointSet perturbed(const std::vector<Point>& pts, double eps) {
  return PointSet(perturb_to_general_position(pts, eps));
}

Seq perm_to_unit(const Perm& p) {
  Seq s(p.size());
  const double n = static_cast<double>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) s[i] = (p[i] - 0.5) / n;
  return s;
}

std::vector<Perm> read_perms(std::istream& in) {
  std::vector<Perm> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Perm p;
    int v;
    while (ls >> v) p.push_back(v);
    if (p.empty()) continue;
    require_perm(p);
    out.push_back(std::move(p));
  }
  return out;
}

void write_perm(std::ostream& out, const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << '\n';
}

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Point p;
    if (ls >> p.x >> p.y) pts.push_back(p);
  }
  return pts;
}

void write_points(std::ostream& out, const std::vector<Point>& pts) {
  auto old = out.precision(17);
  for (const Point& p : pts) out << p.x << ' ' << p.y << '\n';
  out.precision(old);
}

Seq read_requests(std::istream& in) {
  Seq s;
  double v;
  while (in >> v) s.push_back(v);
  return s;
}

void write_requests(std::ostream& out, const Seq& x) {
  auto old = out.precision(17);
  for (double v : x) out << v << '\n';
  out.precision(old);
}

}  // namespace pav
