#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "pav/perm.hpp"

namespace pav {

namespace {

// Remy's growth process: uniform full binary tree with `internal` internal nodes.
struct FullTree {
  std::vector<int> left, right;
  std::vector<char> is_internal;
  int root = 0;
};

FullTree remy(int internal, std::mt19937_64& rng) {
  FullTree t;
  const int total = 2 * internal + 1;
  t.left.assign(total, -1);
  t.right.assign(total, -1);
  t.is_internal.assign(total, 0);
  std::vector<int> parent(total, -1);
  for (int i = 1; i <= internal; ++i) {
    int x = std::uniform_int_distribution<int>(0, 2 * i - 2)(rng);
    int u = 2 * i - 1, v = 2 * i;
    int par = parent[x];
    if (par < 0) {
      t.root = u;
    } else if (t.left[par] == x) {
      t.left[par] = u;
    } else {
      t.right[par] = u;
    }
    parent[u] = par;
    t.is_internal[u] = 1;
    if (rng() & 1) {
      t.left[u] = x;
      t.right[u] = v;
    } else {
      t.left[u] = v;
      t.right[u] = x;
    }
    parent[x] = parent[v] = u;
  }
  return t;
}

}  // namespace

Perm gen_random_231(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random_231: negative length");
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  FullTree t = remy(n, rng);
  // internal nodes form a uniform binary tree; preorder listing of in-order ranks avoids 231
  const int total = 2 * n + 1;
  std::vector<int> rank(total, 0);
  int next = 1;
  std::vector<int> st;
  int cur = t.root;
  while (cur >= 0 || !st.empty()) {
    while (cur >= 0 && t.is_internal[cur]) {
      st.push_back(cur);
      cur = t.left[cur];
    }
    if (st.empty()) break;
    cur = st.back();
    st.pop_back();
    rank[cur] = next++;
    cur = t.right[cur];
  }
  Perm p;
  p.reserve(n);
  st.assign(1, t.root);
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    if (!t.is_internal[v]) continue;
    p.push_back(rank[v]);
    st.push_back(t.right[v]);
    st.push_back(t.left[v]);
  }
  return p;
}

Perm gen_random_separable(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random_separable: negative length");
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  FullTree t = remy(n - 1, rng);
  const int total = 2 * n - 1;
  std::vector<char> skew(total, 0);
  for (int v = 0; v < total; ++v) skew[v] = t.is_internal[v] && (rng() & 1);
  // leaf counts, post-order via reversed preorder
  std::vector<int> order, st{t.root};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    order.push_back(v);
    if (t.is_internal[v]) {
      st.push_back(t.left[v]);
      st.push_back(t.right[v]);
    }
  }
  std::vector<int> leaves(total, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (t.is_internal[*it]) leaves[*it] = leaves[t.left[*it]] + leaves[t.right[*it]];
  std::vector<int> pos_off(total, 0), val_off(total, 0);
  Perm p(n);
  for (int v : order) {
    if (!t.is_internal[v]) {
      p[pos_off[v]] = val_off[v] + 1;
      continue;
    }
    int l = t.left[v], r = t.right[v];
    pos_off[l] = pos_off[v];
    pos_off[r] = pos_off[v] + leaves[l];
    if (skew[v]) {
      val_off[r] = val_off[v];
      val_off[l] = val_off[v] + leaves[r];
    } else {
      val_off[l] = val_off[v];
      val_off[r] = val_off[v] + leaves[l];
    }
  }
  return p;
}

namespace {

Perm bounded_tww_rec(int n, int d, std::mt19937_64& rng) {
  if (n == 1) return {1};
  int s = std::uniform_int_distribution<int>(2, std::min(n, d + 1))(rng);
  int a = std::min(d, s);
  int b = (s + a - 1) / a;
  Perm grid = canonical_grid(a, b);
  std::vector<int> idx(grid.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(s);
  std::sort(idx.begin(), idx.end());
  Seq pick;
  for (int i : idx) pick.push_back(grid[i]);
  Perm skel = perm_of(pick);
  if (rng() & 1) skel = reversal(skel);
  if (rng() & 1) skel = complement(skel);
  // random composition of n into s positive parts
  std::vector<int> cuts(n - 1);
  for (int i = 0; i < n - 1; ++i) cuts[i] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(s - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Perm> blocks;
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    int c = i + 1 < s ? cuts[i] : n;
    blocks.push_back(bounded_tww_rec(c - prev, d, rng));
    prev = c;
  }
  return inflate(skel, blocks);
}

}  // namespace

Perm gen_bounded_tww(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw std::invalid_argument("gen_bounded_tww: need n >= 0, d >= 1");
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  return bounded_tww_rec(n, d, rng);
}

namespace {

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool is_decreasing(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(p.size() - i)) return false;
  return true;
}

Perm renorm(const Perm& p) { return p.empty() ? p : perm_of(Seq(p.begin(), p.end())); }

// Ways a pattern can occur in b . X1 . X2 across both halves: X1 holds A and X2 holds B.
std::vector<std::pair<Perm, Perm>> crossing_constraints(const Perm& s) {
  std::vector<std::pair<Perm, Perm>> out;
  try {
    PatternSplit sp = split_pattern(s);
    out.push_back({sp.alpha, sp.beta});
  } catch (const ContainsPattern&) {
  }
  int mx = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    mx = std::max(mx, s[j - 1]);
    if (mx == static_cast<int>(j))
      out.push_back({renorm(Perm(s.begin(), s.begin() + j)), renorm(Perm(s.begin() + j, s.end()))});
  }
  return out;
}

using PatSet = std::set<Perm>;

bool monotone_fits(const PatSet& f, int m) {
  bool inc = true, dec = true;
  for (const Perm& p : f) {
    if (static_cast<int>(p.size()) > m) continue;
    if (is_identity(p)) inc = false;
    if (is_decreasing(p)) dec = false;
  }
  return inc || dec;
}

}  // namespace

Perm gen_av231_pi(const Perm& pi, int n, std::uint64_t seed) {
  require_perm(pi);
  if (pi.empty()) throw std::invalid_argument("gen_av231_pi: empty pattern");
  if (find_231(Seq(pi.begin(), pi.end()))) throw ContainsPattern({2, 3, 1}, {});
  if (pi.size() == 1 || n <= 0) return {};
  std::mt19937_64 rng(seed);
  std::map<Perm, std::vector<std::pair<Perm, Perm>>> cache;
  auto cons = [&](const Perm& s) -> const std::vector<std::pair<Perm, Perm>>& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, crossing_constraints(s)).first;
    return it->second;
  };

  struct Task {
    PatSet forb;
    int n, pos, off;
  };
  Perm out(n);
  std::vector<Task> work;
  work.push_back({PatSet{pi}, n, 0, 0});
  while (!work.empty()) {
    Task t = std::move(work.back());
    work.pop_back();
    if (t.n == 0) continue;
    // returns false when some crossing occurrence cannot be blocked
    auto attempt = [&](int n1, bool random_side, PatSet& f1, PatSet& f2) {
      const int n2 = t.n - 1 - n1;
      f1 = t.forb;
      f2 = t.forb;
      for (const Perm& s : t.forb)
        for (const auto& [a, b] : cons(s)) {
          if (static_cast<int>(a.size()) > n1 || static_cast<int>(b.size()) > n2) continue;
          bool can1 = a.size() >= 2, can2 = b.size() >= 2;
          if (!can1 && !can2) return false;
          bool side1 = can1 && (!can2 || (random_side ? (rng() & 1) : true));
          if (side1)
            f1.insert(a);
          else
            f2.insert(b);
        }
      return monotone_fits(f1, n1) && monotone_fits(f2, t.n - 1 - n1);
    };
    PatSet f1, f2;
    int n1 = -1;
    for (int a = 0; a < 8 && n1 < 0; ++a) {
      int c = std::uniform_int_distribution<int>(0, t.n - 1)(rng);
      if (attempt(c, true, f1, f2)) n1 = c;
    }
    if (n1 < 0 && attempt(0, false, f1, f2)) n1 = 0;
    if (n1 < 0 && attempt(t.n - 1, false, f1, f2)) n1 = t.n - 1;
    if (n1 < 0) throw std::logic_error("gen_av231_pi: no admissible split");
    out[t.pos] = t.off + n1 + 1;
    work.push_back({std::move(f2), t.n - 1 - n1, t.pos + 1 + n1, t.off + n1 + 1});
    work.push_back({std::move(f1), n1, t.pos + 1, t.off});
  }
  Seq s = perm_to_unit(out);
  if (find_231(s) || contains_in_231_avoider(s, pi))
    throw std::logic_error("gen_av231_pi: produced a sequence containing a forbidden pattern");
  return out;
}

}  // namespace pav
