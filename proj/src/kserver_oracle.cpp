#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <unordered_map>

#include "kserver_internal.hpp"

namespace pav {

namespace {

// Min-cost flow over the request DAG: each unit of flow is a server route
// S -> in_i -> out_i -> in_j -> ... -> T. Covering a request earns -big.
template <class C>
class RouteFlow {
 public:
  RouteFlow(const std::vector<C>& v, C big, int k) : n_(static_cast<int>(v.size())), head_(2 * n_ + 2, -1) {
    const int S = 0, T = 1;
    for (int i = 0; i < n_; ++i) {
      add(S, in(i), 1, v[i] < 0 ? -v[i] : v[i]);
      add(in(i), out(i), 1, -big);
      add(out(i), T, 1, 0);
      for (int j = i + 1; j < n_; ++j) add(out(i), in(j), 1, v[i] > v[j] ? v[i] - v[j] : v[j] - v[i]);
    }
    add(S, T, k, 0);
    run(k);
  }

  // server route index for every request
  std::vector<int> routes() const {
    std::vector<int> who(n_, -1);
    int r = 0;
    for (int e = head_[0]; e >= 0; e = es_[e].next) {
      if (es_[e].to == 1 || es_[e].cap > 0) continue;
      int i = (es_[e].to - 2) / 2;
      for (;;) {
        who[i] = r;
        int nxt = -1;
        for (int f = head_[out(i)]; f >= 0; f = es_[f].next)
          if ((f & 1) == 0 && es_[f].cap == 0 && es_[f].to != 1) nxt = (es_[f].to - 2) / 2;
        if (nxt < 0) break;
        i = nxt;
      }
      ++r;
    }
    return who;
  }

 private:
  struct Edge {
    int to, next, cap;
    C cost;
  };
  int n_;
  std::vector<int> head_;
  std::vector<Edge> es_;

  int in(int i) const { return 2 + 2 * i; }
  int out(int i) const { return 3 + 2 * i; }
  void add(int u, int w, int cap, C cost) {
    es_.push_back({w, head_[u], cap, cost});
    head_[u] = static_cast<int>(es_.size()) - 1;
    es_.push_back({u, head_[w], 0, -cost});
    head_[w] = static_cast<int>(es_.size()) - 1;
  }

  void run(int k) {
    const int V = 2 * n_ + 2;
    const C inf = std::numeric_limits<C>::max() / 4;
    // potentials from the DAG order S, in_0, out_0, in_1, ..., T
    std::vector<C> h(V, inf);
    h[0] = 0;
    std::vector<int> order{0};
    for (int i = 0; i < n_; ++i) {
      order.push_back(in(i));
      order.push_back(out(i));
    }
    order.push_back(1);
    for (int u : order) {
      if (h[u] >= inf) continue;
      for (int e = head_[u]; e >= 0; e = es_[e].next)
        if (es_[e].cap > 0 && h[u] + es_[e].cost < h[es_[e].to]) h[es_[e].to] = h[u] + es_[e].cost;
    }
    std::vector<C> dist(V);
    std::vector<int> pe(V);
    using Item = std::pair<C, int>;
    for (int it = 0; it < k; ++it) {
      std::fill(dist.begin(), dist.end(), inf);
      std::fill(pe.begin(), pe.end(), -1);
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      dist[0] = 0;
      pq.push({0, 0});
      while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u]) continue;
        for (int e = head_[u]; e >= 0; e = es_[e].next) {
          if (es_[e].cap <= 0) continue;
          int w = es_[e].to;
          C rc = es_[e].cost + h[u] - h[w];
          if (rc < 0) rc = 0;  // rounding in the floating-point instantiation
          if (du + rc < dist[w]) {
            dist[w] = du + rc;
            pe[w] = e;
            pq.push({dist[w], w});
          }
        }
      }
      if (dist[1] >= inf) break;
      for (int v = 0; v < V; ++v)
        if (dist[v] < inf) h[v] += dist[v];
      for (int v = 1; v != 0; v = es_[pe[v] ^ 1].to) {
        es_[pe[v]].cap -= 1;
        es_[pe[v] ^ 1].cap += 1;
      }
    }
  }
};

template <class C>
C route_cost(const std::vector<C>& v, const std::vector<int>& who, int k) {
  std::vector<C> at(k, 0);
  C cost = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    C& p = at[who[i]];
    cost += p > v[i] ? p - v[i] : v[i] - p;
    p = v[i];
  }
  return cost;
}

template <class C>
C dp_opt(const std::vector<C>& v, int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("oracle_dp: 1 <= k <= 6");
  if (v.size() > 16) throw std::invalid_argument("oracle_dp: at most 16 requests");
  std::vector<C> pts{C(0)};
  pts.insert(pts.end(), v.begin(), v.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto id = [&](C x) { return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin()); };
  // state: sorted position ids, 8 bits each
  auto encode = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    std::uint64_t key = 0;
    for (int q : s) key = key << 8 | static_cast<std::uint64_t>(q);
    return key;
  };
  std::unordered_map<std::uint64_t, C> cur, nxt;
  cur[encode(std::vector<int>(k, id(0)))] = 0;
  std::vector<int> s(k);
  for (C x : v) {
    const int xi = id(x);
    nxt.clear();
    for (auto [key, c] : cur) {
      std::uint64_t kk = key;
      for (int j = k - 1; j >= 0; --j, kk >>= 8) s[j] = static_cast<int>(kk & 255);
      for (int j = 0; j < k; ++j) {
        C p = pts[s[j]];
        C nc = c + (p > x ? p - x : x - p);
        int old = s[j];
        s[j] = xi;
        auto [itr, fresh] = nxt.try_emplace(encode(s), nc);
        if (!fresh && nc < itr->second) itr->second = nc;
        s[j] = old;
      }
    }
    std::swap(cur, nxt);
  }
  C best = std::numeric_limits<C>::max();
  for (auto [key, c] : cur) best = std::min(best, c);
  return best;
}

void check(const KServerInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("k must be positive");
  for (double v : inst.requests)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("requests must lie in [0,1]");
}

}  // namespace

KServerSolution oracle_solution(const KServerInstance& inst) {
  check(inst);
  const int n = inst.n();
  RouteFlow<double> f(inst.requests, 2.0 * n + 2, inst.k);
  return detail::from_assignment(inst, f.routes(), inst.k);
}

double oracle_opt(const KServerInstance& inst) {
  check(inst);
  RouteFlow<double> f(inst.requests, 2.0 * inst.n() + 2, inst.k);
  return route_cost(inst.requests, f.routes(), inst.k);
}

std::int64_t oracle_opt_exact(const std::vector<std::int64_t>& num, std::int64_t den, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (auto v : num)
    if (v < 0 || v > den) throw std::invalid_argument("requests must lie in [0,1]");
  const std::int64_t n = static_cast<std::int64_t>(num.size());
  if (den > (std::int64_t(1) << 40) / (n + 1)) throw std::overflow_error("oracle_opt_exact: denominator too large");
  RouteFlow<std::int64_t> f(num, (2 * n + 2) * den, k);
  return route_cost(num, f.routes(), k);
}

double oracle_dp(const KServerInstance& inst) {
  check(inst);
  return dp_opt(inst.requests, inst.k);
}

std::int64_t oracle_dp_exact(const std::vector<std::int64_t>& num, int k) { return dp_opt(num, k); }

}  // namespace pav
