#include <algorithm>
#include <cmath>
#include <numeric>

#include "kserver_internal.hpp"

namespace pav {

namespace {

using detail::Tracker;
using Group = std::vector<int>;

void require_unit(const KServerInstance& inst) {
  for (double v : inst.requests)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("requests must lie in [0,1]");
  if (inst.k < 1) throw std::invalid_argument("k must be positive");
  ranks(inst.requests);  // repeated values have no pattern; throws NotGeneralPosition
}

void move_all(Tracker& tr, const Group& g, double to) {
  for (int s : g) tr.move(s, to);
}

// ---- 231-avoiding, k servers -------------------------------------------

struct Solver231 {
  const Seq& x;
  const Av231Table& tree;
  Tracker& tr;

  // one server (top) at c, the rest (low) at a; all end at c
  void serve(int k, int lo, int hi, long long p, double a, double c, int top, const Group& low) {
    if (lo == hi) {
      move_all(tr, low, c);
      return;
    }
    if (k == 1) {
      for (int i = lo; i < hi; ++i) tr.serve(i, top);
      tr.move(top, c);
      return;
    }
    const double b = x[lo];
    const int mid = tree.mid(lo);
    const int n1 = mid - lo - 1;
    if (n1 <= p) {
      int s = low[0];
      tr.move(s, b);
      tr.serve(lo, s);
      Group rest(low.begin() + 1, low.end());
      serve(k - 1, lo + 1, mid, floor_pow_frac(n1, k - 2, k - 1), a, b, s, rest);
    } else {
      tr.move(top, b);
      tr.serve(lo, top);
      serve(k, lo + 1, mid, p, a, b, top, low);
      tr.move(top, c);
    }
    serve(k, mid, hi, p, b, c, top, low);
  }
};

// ---- 231- and pi-avoiding, 2^{|pi|+1} servers ----------------------------

struct Solver231Pi {
  const Seq& x;
  const Av231Table& tree;
  Tracker& tr;

  // A at a, C at c, equal sizes 2^{|pi|}; they end where they started
  void serve(const Perm& pi, int lo, int hi, double a, double c, const Group& A, const Group& C) {
    if (lo == hi) return;
    if (pi.empty()) throw std::logic_error("sequence contains the pattern");
    const double b = x[lo];
    const int mid = tree.mid(lo);
    PatternSplit sp = split_pattern(pi);
    const std::size_t ga = std::size_t(1) << sp.alpha.size();
    const std::size_t gb = std::size_t(1) << sp.beta.size();
    if (!tree.range_contains(lo + 1, mid, sp.alpha)) {
      Group M(A.begin(), A.begin() + ga), rest(A.begin() + ga, A.end());
      move_all(tr, M, b);
      tr.serve(lo, M[0]);
      serve(sp.alpha, lo + 1, mid, a, b, Group(rest.begin(), rest.begin() + ga), M);
      move_all(tr, rest, b);
      // all of A now waits at b
      serve(pi, mid, hi, b, c, A, C);
      move_all(tr, A, a);
    } else {
      if (tree.range_contains(mid, hi, sp.beta)) throw std::logic_error("sequence contains the pattern");
      move_all(tr, C, b);
      tr.serve(lo, C[0]);
      serve(pi, lo + 1, mid, a, b, A, C);
      Group top(C.begin(), C.begin() + gb), rest(C.begin() + gb, C.end());
      move_all(tr, top, c);
      serve(sp.beta, mid, hi, b, c, Group(rest.begin(), rest.begin() + gb), top);
      move_all(tr, rest, c);
    }
  }
};

// ---- t-separable ----------------------------------------------------------

template <class T, class Cmp>
struct SparseTable {
  std::vector<std::vector<T>> lv;
  explicit SparseTable(const std::vector<T>& v) {
    lv.push_back(v);
    for (std::size_t w = 1; 2 * w <= v.size(); w *= 2) {
      const auto& prev = lv.back();
      std::vector<T> cur(prev.size() - w);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = Cmp()(prev[i], prev[i + w]) ? prev[i] : prev[i + w];
      lv.push_back(std::move(cur));
    }
  }
  T query(int lo, int hi) const {  // [lo, hi), non-empty
    int lg = 31 - __builtin_clz(static_cast<unsigned>(hi - lo));
    const auto& row = lv[lg];
    T u = row[lo], w = row[hi - (1 << lg)];
    return Cmp()(u, w) ? u : w;
  }
};

struct SolverSep {
  const Seq& x;
  int t;
  Tracker& tr;
  SparseTable<int, std::less<int>> rmin;
  SparseTable<int, std::greater<int>> rmax;
  SparseTable<double, std::less<double>> vmin;
  SparseTable<double, std::greater<double>> vmax;

  SolverSep(const Seq& xs, int tt, Tracker& t_, const std::vector<int>& r)
      : x(xs), t(tt), tr(t_), rmin(r), rmax(r), vmin(xs), vmax(xs) {}

  bool is_interval(int lo, int hi) const { return rmax.query(lo, hi) - rmin.query(lo, hi) == hi - lo - 1; }

  // a decomposition of x[lo, hi) into at most t value-separated blocks
  std::vector<std::pair<int, int>> blocks(int lo, int hi) const {
    const int m = hi - lo;
    if (m <= 1) return {{lo, hi}};
    // a sum or skew cut, the one nearest the middle
    const int mid = lo + m / 2;
    for (int d = 0; d < m; ++d) {
      for (int j : {mid - d, mid + d})
        if (j > lo && j < hi && is_interval(lo, j) && is_interval(j, hi)) return {{lo, j}, {j, hi}};
    }
    Seq sub(x.begin() + lo, x.begin() + hi);
    auto bb = block_bounds(sub);
    std::vector<std::pair<int, int>> out;
    if (bb.size() == 1) {
      for (int i = lo; i < hi; ++i) out.push_back({i, i + 1});
    } else {
      for (auto [s, e] : bb) out.push_back({lo + s, lo + e});
    }
    if (static_cast<int>(out.size()) > t)
      throw NotTSeparable("request sequence is not " + std::to_string(t) + "-separable");
    return out;
  }

  // L at a (ceil 2^{l-1} servers), H at b (floor 2^{l-1}); they end there
  void serve(int l, int lo, int hi, long long p, double a, double b, const Group& L, const Group& H) {
    if (lo == hi) return;
    if (l == 0) {
      for (int i = lo; i < hi; ++i) tr.serve(i, L[0]);
      tr.move(L[0], a);
      return;
    }
    auto bl = blocks(lo, hi);
    int large = -1, nlarge = 0;
    for (int i = 0; i < static_cast<int>(bl.size()); ++i)
      if (bl[i].second - bl[i].first > p) {
        large = i;
        ++nlarge;
      }
    const std::size_t q = l >= 2 ? std::size_t(1) << (l - 2) : 1;  // ceil(2^{l-2})
    for (int i = 0; i < static_cast<int>(bl.size()); ++i) {
      auto [s, e] = bl[i];
      const int ni = e - s;
      const double ai = vmin.query(s, e), bi = vmax.query(s, e);
      if (ni > p) {
        move_all(tr, L, ai);
        move_all(tr, H, bi);
        serve(l, s, e, p, ai, bi, L, H);
        continue;
      }
      const long long pi = floor_pow_frac(ni, l - 1, l);
      if (nlarge == 1) {
        // stay on our side of the single large block
        const auto [ls, le] = bl[large];
        const Group& G = bi < vmin.query(ls, le) ? L : H;
        Group g1(G.begin(), G.begin() + q), g2(G.begin() + q, G.end());
        move_all(tr, g1, ai);
        move_all(tr, g2, bi);
        serve(l - 1, s, e, pi, ai, bi, g1, g2);
      } else {
        move_all(tr, L, ai);
        move_all(tr, H, bi);
        Group l1(L.begin(), L.begin() + q), h1(H.begin(), H.begin() + (l >= 2 ? q : 0));
        serve(l - 1, s, e, pi, ai, bi, l1, h1);
      }
    }
    move_all(tr, L, a);
    move_all(tr, H, b);
  }
};

}  // namespace

KServerSolution serve_231(const KServerInstance& inst) {
  require_unit(inst);
  if (auto w = find_231(inst.requests)) throw ContainsPattern({2, 3, 1}, *w);
  const int n = inst.n(), k = inst.k;
  Tracker tr(inst.requests, k);
  if (n > 0) {
    Av231Table tree(inst.requests, Perm{1});
    Solver231 s{inst.requests, tree, tr};
    Group low(k - 1);
    std::iota(low.begin(), low.end(), 1);
    tr.place(0, 1.0);
    detail::run_deep([&] { s.serve(k, 0, n, floor_pow_frac(n, k - 1, k), 0.0, 1.0, 0, low); });
  } else {
    // nothing to serve: the low servers still walk to the top of the range
    for (int j = 1; j < k; ++j) tr.move(j, 1.0);
  }
  return tr.finish(inst, k);
}

KServerSolution serve_231_avoiding_pi(const KServerInstance& inst, const Perm& pi) {
  require_unit(inst);
  require_perm(pi);
  if (contains(pi, Perm{2, 3, 1})) throw std::invalid_argument("pattern must avoid 231");
  if (pi.size() > 20) throw std::invalid_argument("pattern too long");
  const int need = 1 << (pi.size() + 1);
  if (inst.k < need) throw std::invalid_argument("needs k >= 2^(|pi|+1) = " + std::to_string(need));
  if (auto w = find_231(inst.requests)) throw ContainsPattern({2, 3, 1}, *w);
  const int n = inst.n();
  Tracker tr(inst.requests, inst.k);
  if (n > 0) {
    Av231Table tree(inst.requests, pi);
    if (tree.range_contains(0, n, pi)) throw ContainsPattern(pi, {});
    Solver231Pi s{inst.requests, tree, tr};
    Group A(need / 2), C(need / 2);
    std::iota(A.begin(), A.end(), 0);
    std::iota(C.begin(), C.end(), need / 2);
    for (int c : C) tr.place(c, 1.0);
    detail::run_deep([&] { s.serve(pi, 0, n, 0.0, 1.0, A, C); });
  }
  return tr.finish(inst, need);
}

KServerSolution serve_separable(const KServerInstance& inst, int t) {
  require_unit(inst);
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  const int n = inst.n();
  const int l = floor_log(2, inst.k);
  const int used = 1 << l;
  Tracker tr(inst.requests, inst.k);
  if (n > 0) {
    std::vector<int> r = ranks(inst.requests);
    for (int& v : r) --v;
    SolverSep s(inst.requests, t, tr, r);
    const int nl = (used + 1) / 2;
    Group L(nl), H(used - nl);
    std::iota(L.begin(), L.end(), 0);
    std::iota(H.begin(), H.end(), nl);
    for (int h : H) tr.place(h, 1.0);
    detail::run_deep([&] { s.serve(l, 0, n, floor_pow_frac(n, l, l + 1), 0.0, 1.0, L, H); });
  }
  return tr.finish(inst, used);
}

}  // namespace pav
