#include "pav/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "pav/ass.hpp"
#include "pav/decomp.hpp"
#include "pav/kserver.hpp"
#include "pav/tsp.hpp"

namespace pav {

namespace {

const double kNaN = std::nan("");

bool is_perm_gen(const std::string& g) {
  return g == "random231" || g == "separable" || g == "tww" || g == "av231pi" || g == "perm";
}

Perm make_perm(const std::string& gen, int n, std::uint64_t seed, const BenchSpec& s) {
  if (gen == "random231") return gen_random_231(n, seed);
  if (gen == "separable") return gen_random_separable(n, seed);
  if (gen == "tww") return gen_bounded_tww(n, s.d, seed);
  if (gen == "av231pi") return gen_av231_pi(s.pi, n, seed);
  Perm p = identity(n);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

bool within(double cost, double bound) { return cost <= bound * (1 + 1e-9) + 1e-12; }

struct Outcome {
  double cost = 0, bound = kNaN;
  int k_or_d = 0;
  bool pass = true;
};

Outcome run_kserver(const BenchSpec& s, const std::string& algo, const Seq& x) {
  KServerInstance inst{x, s.k};
  const int n = inst.n();
  Outcome o;
  o.k_or_d = s.k;
  if (algo == "baseline") {
    o.cost = baseline_intervals(inst).cost;
    o.bound = bound_baseline(n, s.k);
  } else if (algo == "dc") {
    o.cost = double_coverage(inst).cost;
  } else if (algo == "av231") {
    o.cost = serve_231(inst).cost;
    o.bound = bound_231(n, s.k);
  } else if (algo == "av231pi") {
    o.cost = serve_231_avoiding_pi(inst, s.pi).cost;
    o.bound = bound_av231pi(static_cast<int>(s.pi.size()));
  } else if (algo == "separable") {
    o.cost = serve_separable(inst, s.t).cost;
    o.bound = bound_separable(n, s.k, s.t);
  } else if (algo == "gridded") {
    GriddedInfo gi;
    o.cost = solve_gridded(inst, &gi).cost;
    o.bound = bound_gridded(n, s.k, gi.d, gi.t);
  } else if (algo == "oracle") {
    o.cost = oracle_opt(inst);
  } else {
    throw std::invalid_argument("unknown kserver algorithm: " + algo);
  }
  if (!std::isnan(o.bound)) o.pass = within(o.cost, o.bound);
  return o;
}

Outcome run_tsp(const BenchSpec& s, const std::string& algo, const std::vector<Point>& P) {
  Outcome o;
  const int n = static_cast<int>(P.size());
  if (algo == "mst") {
    o.cost = mst(P).length;
  } else if (algo == "tour") {
    o.cost = tour_from_mst(P).length;
    o.bound = 2 * mst(P).length;
  } else if (algo == "held-karp") {
    o.cost = held_karp(P);
  } else if (algo == "decomp-tree") {
    Decomposition dec = build_adaptive(PointSet(P));
    EdgeSet t = spanning_tree_from_decomp(dec);
    o.cost = t.length;
    o.k_or_d = dec.d;
    o.bound = 20.0 * dec.d * harmonic(n - 1);
    o.pass = is_spanning_tree(n, t.edges);
  } else if (algo == "av231pi") {
    SteinerTree st = spanning_tree_231_pi(P, 1, 1, s.pi);
    o.cost = st.tree.length;
    o.k_or_d = static_cast<int>(s.pi.size());
    o.bound = 2.0 * s.pi.size() * 2;
    o.pass = is_spanning_tree(static_cast<int>(st.points.size()), st.tree.edges);
  } else {
    throw std::invalid_argument("unknown tsp algorithm: " + algo);
  }
  if (!std::isnan(o.bound)) o.pass = o.pass && within(o.cost, o.bound);
  return o;
}

Outcome run_ass(const std::string& algo, const std::vector<Point>& P) {
  if (algo != "superset") throw std::invalid_argument("unknown ass algorithm: " + algo);
  Decomposition dec = build_adaptive(PointSet(P));
  SupersetResult r = build_superset(dec);
  Outcome o;
  o.cost = static_cast<double>(r.size());
  o.k_or_d = r.d;
  o.bound = static_cast<double>(r.bound());
  const long long q = 2LL * r.d + 4;
  o.pass = r.size() <= static_cast<std::size_t>(r.bound()) && r.max_added() <= q * q && is_satisfied(r.points);
  return o;
}

Outcome run_decomp(const BenchSpec& s, const std::string& algo, const std::vector<Point>& P) {
  const PointSet ps(P);
  Decomposition dec;
  if (algo == "adaptive") {
    dec = build_adaptive(ps);
  } else if (algo == "balanced") {
    BuildResult br = build_distance_balanced(ps, s.t);
    if (!br.ok()) throw std::runtime_error("distance-balanced build stuck");
    dec = std::move(*br.dec);
  } else {
    throw std::invalid_argument("unknown decomp algorithm: " + algo);
  }
  Outcome o;
  o.cost = rect_dimension_sum(dec);
  o.k_or_d = dec.d;
  o.bound = 20.0 * dec.d * harmonic(dec.n() - 1);
  o.pass = check_balanced(dec).pass && width(dec.merge) <= 2 * dec.t && within(o.cost, o.bound);
  return o;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void validate(const BenchSpec& s) {
  static const char* problems[] = {"ass", "kserver", "tsp", "decomp"};
  if (std::find(std::begin(problems), std::end(problems), s.problem) == std::end(problems))
    throw std::invalid_argument("unknown problem: " + s.problem);
  if (s.sizes.empty()) throw std::invalid_argument("bench: no sizes");
  for (std::size_t i = 1; i < s.sizes.size(); ++i)
    if (s.sizes[i] <= s.sizes[i - 1]) throw std::invalid_argument("bench: size ladder must be strictly increasing");
  if (s.seeds.empty()) throw std::invalid_argument("bench: no seeds");
  if (s.algos.empty()) throw std::invalid_argument("bench: no algorithms");
  if (s.k < 1 || s.d < 1 || s.t < 1 || s.threads < 1) throw std::invalid_argument("bench: k, d, t, threads must be positive");
}

Seq make_sequence(const std::string& gen, int n, std::uint64_t seed, const BenchSpec& s) {
  if (is_perm_gen(gen)) return perm_to_unit(make_perm(gen, n, seed, s));
  if (gen == "uniform") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Seq x(n);
    for (double& v : x) v = u(rng);
    return x;
  }
  if (gen == "lb231") return gen_231_lb(n, s.k).requests;
  if (gen == "lbtww") return gen_tww_lb(n, s.k, s.d).requests;
  throw std::invalid_argument("unknown sequence generator: " + gen);
}

std::vector<Point> make_points(const std::string& gen, int n, std::uint64_t seed, const BenchSpec& s) {
  if (is_perm_gen(gen)) return PointSet::from_perm(make_perm(gen, n, seed, s)).points();
  if (gen == "uniform") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point> P(n);
    for (Point& p : P) p = {u(rng), u(rng)};
    return P;
  }
  if (gen == "Pk") {
    int k = 1;
    while ((2LL << k) - 1 <= n) ++k;
    return scale_to_unit(gen_Pk(k), std::ldexp(1.0, k) - 1);
  }
  if (gen == "Gd") return gen_Gd(std::max(1, static_cast<int>(std::sqrt(double(n)))));
  if (gen == "grid") return gen_uniform_grid(n);
  throw std::invalid_argument("unknown point generator: " + gen);
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  validate(spec);
  struct Job {
    int n;
    std::uint64_t seed;
    std::string algo;
  };
  std::vector<Job> jobs;
  for (int n : spec.sizes)
    for (auto seed : spec.seeds)
      for (const auto& a : spec.algos) jobs.push_back({n, seed, a});
  std::vector<BenchRow> rows(jobs.size());
  std::vector<std::exception_ptr> errs(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const Job& j = jobs[i];
      try {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        if (spec.problem == "kserver") {
          o = run_kserver(spec, j.algo, make_sequence(spec.generator, j.n, j.seed, spec));
        } else {
          auto P = make_points(spec.generator, j.n, j.seed, spec);
          if (spec.problem == "tsp") o = run_tsp(spec, j.algo, P);
          else if (spec.problem == "ass") o = run_ass(j.algo, P);
          else o = run_decomp(spec, j.algo, P);
        }
        auto t1 = std::chrono::steady_clock::now();
        BenchRow& r = rows[i];
        r.problem = spec.problem;
        r.algo = j.algo;
        r.n = j.n;
        r.k_or_d = o.k_or_d;
        r.seed = j.seed;
        r.cost = o.cost;
        r.bound = o.bound;
        r.certificate = std::isnan(o.bound) ? "NA" : (o.pass ? "PASS" : "FAIL");
        r.wall_ms = spec.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
      } catch (const std::exception& e) {
        errs[i] = std::make_exception_ptr(std::runtime_error(spec.problem + "/" + j.algo + " on " + spec.generator +
                                                             " n=" + std::to_string(j.n) +
                                                             " seed=" + std::to_string(j.seed) + ": " + e.what()));
      }
    }
  };
  const int nt = std::min<int>(spec.threads, static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.problem, a.algo, a.n, a.seed) < std::tie(b.problem, b.algo, b.n, b.seed);
  });
  return rows;
}

bool all_certificates_pass(const std::vector<BenchRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.certificate == "FAIL"; });
}

void write_rows(std::ostream& out, const std::vector<BenchRow>& rows, char sep) {
  const char* cols[] = {"problem", "algo", "n", "k_or_d", "seed", "cost", "bound", "certificate", "wall_ms"};
  for (int i = 0; i < 9; ++i) out << (i ? std::string(1, sep) : "") << cols[i];
  out << '\n';
  for (const BenchRow& r : rows)
    out << r.problem << sep << r.algo << sep << r.n << sep << r.k_or_d << sep << r.seed << sep << fmt(r.cost) << sep
        << fmt(r.bound) << sep << r.certificate << sep << fmt(r.wall_ms) << '\n';
}

std::vector<BenchRow> read_rows(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  const char sep = line.find('\t') != std::string::npos ? '\t' : ',';
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, sep);) f.push_back(cell);
    if (line.back() == sep) f.push_back("");
    if (f.size() != 9) throw std::invalid_argument("read_rows: expected 9 fields in: " + line);
    BenchRow r;
    r.problem = f[0];
    r.algo = f[1];
    r.n = std::stoi(f[2]);
    r.k_or_d = std::stoi(f[3]);
    r.seed = std::stoull(f[4]);
    r.cost = std::stod(f[5]);
    r.bound = f[6].empty() ? kNaN : std::stod(f[6]);
    r.certificate = f[7];
    r.wall_ms = f[8].empty() ? 0.0 : std::stod(f[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m < 2 || y.size() != m) throw std::invalid_argument("fit: needs at least 2 points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m, my = std::accumulate(y.begin(), y.end(), 0.0) / m;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit: all x equal");
  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double e = y[i] - (f.intercept + f.slope * x[i]);
    ss += e * e;
  }
  f.residual = std::sqrt(ss / m);
  f.r2 = syy > 0 ? 1 - ss / syy : 1.0;
  return f;
}

namespace {

void medians(const std::vector<BenchRow>& rows, int min_seeds, std::vector<double>& n, std::vector<double>& med) {
  std::map<int, std::vector<double>> by;
  for (const BenchRow& r : rows) by[r.n].push_back(r.cost);
  if (by.size() < 3) throw std::invalid_argument("fit: needs at least 3 sizes");
  for (auto& [size, c] : by) {
    if (static_cast<int>(c.size()) < min_seeds)
      throw std::invalid_argument("fit: fewer than " + std::to_string(min_seeds) + " runs at n=" + std::to_string(size));
    std::sort(c.begin(), c.end());
    const std::size_t h = c.size() / 2;
    n.push_back(size);
    med.push_back(c.size() % 2 ? c[h] : 0.5 * (c[h - 1] + c[h]));
  }
}

}  // namespace

FitResult fit_exponent(const std::vector<BenchRow>& rows, int min_seeds) {
  std::vector<double> n, med, lx, ly;
  medians(rows, min_seeds, n, med);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (med[i] <= 0) throw std::invalid_argument("fit_exponent: non-positive median cost");
    lx.push_back(std::log(n[i]));
    ly.push_back(std::log(med[i]));
  }
  FitResult f = fit_line(lx, ly);
  f.sizes = n;
  f.medians = med;
  return f;
}

FitResult fit_log(const std::vector<BenchRow>& rows, int min_seeds) {
  std::vector<double> n, med, lx;
  medians(rows, min_seeds, n, med);
  for (double v : n) lx.push_back(std::log(v));
  FitResult f = fit_line(lx, med);
  f.sizes = n;
  f.medians = med;
  return f;
}

}  // namespace pav
