// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "oracles.hpp"
#include "pav/ass.hpp"
#include "pav/decomp.hpp"
#include "pav/harness.hpp"
#include "pav/kserver.hpp"
#include "pav/tsp.hpp"

using namespace pav;

namespace {

// pinned numbers
constexpr double kCostTol = 1e-9;      // solver cost vs oracle, absolute
constexpr double kBoundRelTol = 1e-9;  // certificates, relative slack for rounding
constexpr double kLinearityRatio = 2.0;
constexpr double kFitR2 = 0.9;
constexpr double kSlopeLo = 0.6, kSlopeHi = 1.4;  // times 1/k
constexpr double kBaselineLo = 0.9, kBaselineHi = 1.1;
constexpr double kSteinerNeed = 8.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) o.fail("over the " + std::to_string(int(budget_s)) + " s budget");
  std::printf("[%s] C%-2d %-44s %7.1fs  %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool within(double cost, double bound) { return cost <= bound * (1 + kBoundRelTol); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// ---------------------------------------------------------------------------

void c1_superset_correct(Outcome& o) {
  int runs = 0, max_n = 0;
  auto one = [&](const Perm& p) {
    Decomposition dec = build_adaptive(PointSet::from_perm(p));
    SupersetResult r = build_superset(dec);
    ++runs;
    max_n = std::max(max_n, r.n_input);
    if (!is_satisfied(r.points)) o.fail("unsatisfied superset at n=" + std::to_string(p.size()));
    const long long q = 2LL * r.d + 4;
    if (r.max_added() > q * q) o.fail("step adds " + std::to_string(r.max_added()) + " > (2d+4)^2");
  };
  for (int i = 0; i < 500; ++i) one(gen_random_231(1 << (6 + i % 6), 1000 + i));
  for (int i = 0; i < 500; ++i) one(gen_random_separable(1 << (6 + i % 6), 2000 + i));
  for (int i = 0; i < 100; ++i) one(gen_bounded_tww(1 << (6 + i % 6), 2 + i % 3, 3000 + i));
  if (o.pass) o.detail = std::to_string(runs) + " supersets satisfied, n up to " + std::to_string(max_n);
}

void c2_superset_vs_opt(Outcome& o) {
  int pairs = 0;
  if (brute_force_opt_ass(PointSet::from_perm({1, 2})) != 3) o.fail("OPT(I_2) != 3");
  for (int n = 1; n <= 5; ++n)
    for (const Perm& p : oracle::all_perms(n)) {
      PointSet P = PointSet::from_perm(p);
      const int opt = brute_force_opt_ass(P);
      std::vector<Decomposition> decs{build_adaptive(P)};
      for (int t = 1; t <= n; ++t)
        if (BuildResult br = build_distance_balanced(P, t); br.ok()) decs.push_back(*br.dec);
      for (const Decomposition& d : decs) {
        ++pairs;
        const int got = static_cast<int>(build_superset(d).size());
        if (opt > got) o.fail("OPT " + std::to_string(opt) + " > superset " + std::to_string(got) + " on " + to_string(p));
      }
    }
  if (o.pass) o.detail = "OPT(I_2)=3; " + std::to_string(pairs) + " (perm, decomposition) pairs, n <= 5";
}

void c3_superset_linear(Outcome& o) {
  std::vector<double> ratios;
  std::string per;
  for (int e : {8, 10, 12, 14}) {
    const int n = 1 << e;
    std::vector<double> r;
    for (int s = 0; s < 5; ++s) {
      SupersetResult sr = build_superset(build_adaptive(PointSet::from_perm(gen_random_231(n, 500 + s))));
      r.push_back(double(sr.size()) / n);
    }
    ratios.push_back(median(r));
    per += fmt(" %.3g", ratios.back());
  }
  const double spread = *std::max_element(ratios.begin(), ratios.end()) / *std::min_element(ratios.begin(), ratios.end());
  if (!(spread < kLinearityRatio)) o.fail("max/min of median |S|/n = " + fmt("%.3f", spread));
  o.detail = "median |S|/n:" + per + fmt("  (max/min %.3f < 2)", spread) + (o.pass ? "" : "; " + o.detail);
}

void c4_decomposition(Outcome& o) {
  int builds = 0;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 2000);
    Perm p = i % 3 == 0 ? gen_random_231(n, rng()) : i % 3 == 1 ? gen_random_separable(n, rng()) : gen_bounded_tww(n, 1 + i % 4, rng());
    Decomposition dec = build_adaptive(PointSet::from_perm(p));
    ++builds;
    BalanceReport b = check_balanced(dec);
    if (!b.pass) o.fail("check_balanced: " + b.what);
    if (width(dec.merge) > 2 * dec.t) o.fail("width above 2t");
    if (!(rect_dimension_sum(dec) <= 20.0 * dec.d * harmonic(n - 1))) o.fail("dimension sum above 20 d H");
  }
  // twin-width of sums and skew sums is the larger of the parts
  std::vector<Perm> small;
  for (int n = 1; n <= 5; ++n)
    for (const Perm& p : oracle::all_perms(n)) small.push_back(p);
  std::map<Perm, int> tww;
  for (const Perm& p : small) tww[p] = brute_force_twin_width(PointSet::from_perm(p));
  int compositions = 0;
  for (const Perm& a : small)
    for (const Perm& b : small) {
      if (a.size() + b.size() > 6) continue;
      const int want = std::max(tww[a], tww[b]);
      compositions += 2;
      if (brute_force_twin_width(PointSet::from_perm(sum(a, b))) != want) o.fail("tww(" + to_string(a) + "+" + to_string(b) + ")");
      if (brute_force_twin_width(PointSet::from_perm(skew_sum(a, b))) != want) o.fail("tww(" + to_string(a) + "-" + to_string(b) + ")");
    }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      if (brute_force_twin_width(PointSet::from_perm(canonical_grid(k, l))) != std::min(k, l)) o.fail("grid twin-width");
  if (o.pass)
    o.detail = std::to_string(builds) + " builds balanced; " + std::to_string(compositions) + " sum/skew checks; grids k,l<=3";
}

void c5_kserver_exact(Outcome& o) {
  const std::vector<std::int64_t> grid{0, 1, 2, 3, 4};  // quarters
  long long instances = 0;
  auto check = [&](const std::vector<std::int64_t>& num, int k) {
    ++instances;
    const std::int64_t flow = oracle_opt_exact(num, 4, k), dp = oracle_dp_exact(num, k);
    if (flow != dp) o.fail("flow != dp");
    KServerInstance inst{{}, k};
    for (auto v : num) inst.requests.push_back(v / 4.0);
    if (std::abs(oracle_opt(inst) - dp / 4.0) > kCostTol) o.fail("float flow != dp");
  };
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n) {
      std::vector<std::int64_t> num(n, 0);
      while (true) {
        check(num, k);
        int i = n - 1;
        while (i >= 0 && num[i] == 4) num[i--] = 0;
        if (i < 0) break;
        ++num[i];
      }
    }
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 3000; ++rep) {
    std::vector<std::int64_t> num(6 + rep % 3);
    for (auto& v : num) v = grid[rng() % 5];
    check(num, 1 + rep % 3);
  }
  // every solver pays at least the optimum
  int solver_runs = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 1 + rep % 4, n = 1 + static_cast<int>(rng() % 40);
    KServerInstance inst{perm_to_unit(gen_random_231(n, rng())), k};
    const double opt = oracle_opt(inst);
    std::vector<std::pair<const char*, double>> got{
        {"baseline", baseline_intervals(inst).cost}, {"dc", double_coverage(inst).cost},
        {"greedy", greedy_single(inst).cost},        {"av231", serve_231(inst).cost},
        {"separable", serve_separable(inst, 2).cost}, {"gridded", solve_gridded(inst).cost}};
    for (auto [name, c] : got) {
      ++solver_runs;
      if (c < opt - kCostTol) o.fail(std::string(name) + " below the optimum");
    }
    // the pattern solver needs 2^{|pi|+1} servers, so it gets its own instance
    KServerInstance pinst{perm_to_unit(gen_av231_pi({2, 1}, n, rng())), 8};
    ++solver_runs;
    if (serve_231_avoiding_pi(pinst, {2, 1}).cost < oracle_opt(pinst) - kCostTol) o.fail("av231pi below the optimum");
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " flow==dp instances; " + std::to_string(solver_runs) + " solver runs >= optimum";
}

void c6_kserver_certificates(Outcome& o) {
  int runs = 0;
  auto cert = [&](const char* what, int n, double cost, double bound) {
    ++runs;
    if (!within(cost, bound)) o.fail(std::string(what) + " n=" + std::to_string(n) + fmt(" cost %.6g > %.6g", cost, bound));
  };
  std::mt19937_64 rng(6);
  std::vector<int> sizes;
  for (int n = 1; n <= 40; ++n) sizes.push_back(n);
  for (int n : {1000, 10000, 100000}) sizes.push_back(n);
  for (int n : sizes) {
    const int seeds = n <= 40 ? 5 : 3;
    for (int s = 0; s < seeds; ++s) {
      for (int k = 2; k <= 6; ++k) {
        KServerInstance inst{perm_to_unit(gen_random_231(n, rng())), k};
        cert("av231", n, serve_231(inst).cost, bound_231(n, k));
      }
      for (const Perm& pi : std::vector<Perm>{{1}, {1, 2}, {2, 1}, {2, 1, 3}}) {
        const int m = pi.size() == 1 ? 0 : n;
        KServerInstance inst{perm_to_unit(gen_av231_pi(pi, std::max(m, 1), rng())), 1 << (pi.size() + 1)};
        if (m == 0) inst.requests.clear();
        cert("av231pi", m, serve_231_avoiding_pi(inst, pi).cost, bound_av231pi(static_cast<int>(pi.size())));
      }
      for (int k : {2, 4, 8, 16}) {
        KServerInstance inst{perm_to_unit(gen_random_separable(n, rng())), k};
        cert("separable", n, serve_separable(inst, 2).cost, bound_separable(n, k, 2));
      }
      for (int k : {1, 3, 8}) {
        KServerInstance inst{perm_to_unit(gen_random_231(n, rng())), k};
        cert("baseline", n, baseline_intervals(inst).cost, bound_baseline(n, k));
      }
      for (int k : {2, 4, 9}) {
        KServerInstance inst{perm_to_unit(s % 2 ? gen_bounded_tww(n, 2, rng()) : gen_random_231(n, rng())), k};
        GriddedInfo gi;
        const double c = solve_gridded(inst, &gi).cost;
        cert("gridded", n, c, bound_gridded(n, k, gi.d, gi.t));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " certificates, n up to 1e5";
}

void c7_kserver_lower_bounds(Outcome& o) {
  std::string per;
  for (int m = 2; m <= 8; ++m) {
    RationalSeq r = lb_231_sequence(2, m);
    const std::int64_t opt = oracle_opt_exact(r.num, r.den, 2);  // optimum times den
    // opt/den >= m/4^2
    if (!(opt * 16 >= m * r.den)) o.fail("X'_2(" + std::to_string(m) + ") below m/16");
    if (m == 8) per = "X'_2(8): n=" + std::to_string(r.num.size()) + " opt=" + std::to_string(opt) + "/" + std::to_string(r.den);
  }
  int checked = 0;
  for (int m = 1; 2 * m <= 100; ++m) {
    RationalSeq r = lb_tww_sequence(1, 1, m);
    const std::int64_t n = static_cast<std::int64_t>(r.num.size());
    if (n > 100) break;
    const std::int64_t opt = oracle_opt_exact(r.num, r.den, 1);
    ++checked;
    if (!(opt * 8 >= n * r.den)) o.fail("X^1_1 of length " + std::to_string(n) + " below n/8");
  }
  if (o.pass) o.detail = per + "; X^1_1 lengths 2.." + std::to_string(2 * checked) + " all >= n/8";
}

void c8_kserver_scaling(Outcome& o) {
  for (int k = 2; k <= 4; ++k) {
    std::vector<BenchRow> rows;
    for (int e = 16; e <= 23; ++e) {
      KServerInstance inst = gen_231_lb(1LL << e, k);
      BenchRow r;
      r.n = inst.n();
      r.cost = serve_231(inst).cost;
      rows.push_back(r);
    }
    FitResult f = fit_exponent(rows, 1);  // the family is deterministic
    const bool ok = f.slope >= kSlopeLo / k && f.slope <= kSlopeHi / k;
    o.detail += fmt("k=%.0f slope %.3f ", k, f.slope);
    if (!ok) o.fail(fmt("k=%.0f slope %.3f outside window", k, f.slope));
  }
  BenchSpec s;
  s.generator = "uniform";
  s.algos = {"baseline"};
  s.k = 4;
  for (int n = 1 << 10; n <= 1 << 16; n *= 2) s.sizes.push_back(n);
  s.seeds = {1, 2, 3, 4, 5};
  FitResult f = fit_exponent(run_bench(s));
  o.detail += fmt("| baseline slope %.3f", f.slope);
  if (!(f.slope >= kBaselineLo && f.slope <= kBaselineHi)) o.fail("baseline slope outside [0.9,1.1]");
}

void c9_tsp_exact(Outcome& o) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  auto cloud = [&](int n) {
    std::vector<Point> P(n);
    for (auto& p : P) p = {u(rng), u(rng)};
    return P;
  };
  int hk = 0;
  for (int n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 40; ++rep) {
      auto P = cloud(n);
      const double want = oracle::tsp(P);
      ++hk;
      if (std::abs(held_karp(P) - want) > 1e-12 * std::max(1.0, want)) o.fail("held_karp != enumeration");
      if (std::abs(brute_force_tsp(P) - want) > 1e-12 * std::max(1.0, want)) o.fail("brute_force_tsp != enumeration");
    }
  for (int rep = 0; rep < 1000; ++rep) {
    auto P = cloud(2 + static_cast<int>(rng() % 300));
    const double nn = nn_sum(P), m = mst(P).length, t = tour_from_mst(P).length;
    if (!(nn / 2 <= m * (1 + 1e-12) && m <= t * (1 + 1e-12) && t <= 2 * m * (1 + 1e-12))) o.fail("sandwich broken");
  }
  // P_1 is a single point with no neighbour; the family starts at k = 2
  for (int k = 2; k <= 12; ++k)
    if (nn_sum_linf_int(gen_Pk(k)) < (std::int64_t(k) << (k - 2))) o.fail("NN(P_" + std::to_string(k) + ") too small");
  for (int d = 2; d <= 64; ++d)
    if (!(nn_sum(gen_Gd(d)) >= d)) o.fail("NN(G_" + std::to_string(d) + ") < d");
  if (o.pass) o.detail = std::to_string(hk) + " exact tours; 1000 sandwiches; P_2..P_12; G_2..G_64";
}

void c10_tsp_certificates(Outcome& o) {
  std::mt19937_64 rng(10);
  int trees = 0;
  BenchSpec s;
  s.problem = "tsp";
  s.generator = "random231";
  s.algos = {"decomp-tree"};
  for (int e = 6; e <= 14; ++e) s.sizes.push_back(1 << e);
  s.seeds = {1, 2, 3, 4, 5};
  auto rows = run_bench(s);
  for (const BenchRow& r : rows) {
    ++trees;
    if (r.certificate != "PASS") o.fail("decomp tree above 20 d H at n=" + std::to_string(r.n));
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3000);
    Perm p = i % 2 ? gen_random_separable(n, rng()) : gen_bounded_tww(n, 2, rng());
    Decomposition dec = build_adaptive(PointSet::from_perm(p));
    ++trees;
    if (!(spanning_tree_from_decomp(dec).length <= 20.0 * dec.d * harmonic(n - 1))) o.fail("decomp tree above 20 d H");
  }
  int steiner = 0;
  const std::vector<Perm> pats{{1}, {1, 2}, {2, 1}, {2, 1, 3}, {2, 1, 3, 4}};
  for (int i = 0; i < 200; ++i) {
    const Perm& pi = pats[i % pats.size()];
    const int n = pi.size() == 1 ? 0 : 1 + static_cast<int>(rng() % 2000);
    std::vector<Point> P;
    if (n) P = PointSet::from_perm(gen_av231_pi(pi, n, rng())).points();
    SteinerTree st = spanning_tree_231_pi(P, 1, 1, pi);
    ++steiner;
    if (!within(st.tree.length, 2.0 * pi.size() * 2)) o.fail("Steiner tree above 2|pi|(w+h) for " + to_string(pi));
    if (!is_spanning_tree(static_cast<int>(st.points.size()), st.tree.edges)) o.fail("Steiner tree not spanning");
  }
  FitResult f = fit_log(rows);
  if (!(f.r2 >= kFitR2)) o.fail(fmt("R2 %.3f < 0.9", f.r2));
  std::string med;
  for (double m : f.medians) med += fmt(" %.1f", m);
  o.detail = std::to_string(trees) + " decomp trees, " + std::to_string(steiner) + " Steiner trees; length ~ log n: " +
             fmt("slope %.3f R2 %.3f; medians", f.slope, f.r2) + med + (o.pass ? "" : " | " + o.detail);
}

void c11_steiner_lower_bound(Outcome& o) {
  auto P = gen_Pdt(40, 1);
  const double m = mst(P).length;
  o.detail = fmt("MST(P^40_1) = %.4f over %.0f points (need >= 8)", m, double(P.size()));
  if (!(m >= kSteinerNeed)) o.fail(o.detail);
}

void c12_satisfied_iff_connected(Outcome& o) {
  int sets = 0;
  for (int mask = 0; mask < (1 << 16); ++mask) {
    std::vector<Point> P;
    for (int b = 0; b < 16; ++b)
      if (mask >> b & 1) P.push_back({double(b % 4), double(b / 4)});
    ++sets;
    if (is_satisfied(P) != all_pairs_connected(P)) o.fail("disagree on 4x4 mask " + std::to_string(mask));
  }
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = static_cast<int>(rng() % 40), g = 2 + static_cast<int>(rng() % 12);
    std::vector<Point> P;
    for (int i = 0; i < n; ++i) P.push_back({double(rng() % g), double(rng() % g)});
    ++sets;
    if (is_satisfied(P) != all_pairs_connected(P)) o.fail("disagree on a random set");
  }
  if (o.pass) o.detail = std::to_string(sets) + " point sets";
}

}  // namespace

int main() {
  criterion(1, "superset satisfied, per-step additions", 300, c1_superset_correct);
  criterion(2, "brute-force OPT <= superset, n <= 5", 600, c2_superset_vs_opt);
  criterion(3, "superset size linear in n", 600, c3_superset_linear);
  criterion(4, "decompositions balanced, twin-width rules", 300, c4_decomposition);
  criterion(5, "k-server flow optimum exact", 900, c5_kserver_exact);
  criterion(6, "k-server bound certificates", 1200, c6_kserver_certificates);
  criterion(7, "k-server lower bounds, exact rationals", 300, c7_kserver_lower_bounds);
  criterion(8, "k-server scaling exponents", 1200, c8_kserver_scaling);
  criterion(9, "TSP exact small-scale and NN bounds", 600, c9_tsp_exact);
  criterion(10, "TSP upper-bound certificates", 900, c10_tsp_certificates);
  criterion(11, "Steiner lower bound at t=1", 60, c11_steiner_lower_bound);
  criterion(12, "satisfied iff all pairs connected", 300, c12_satisfied_iff_connected);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
