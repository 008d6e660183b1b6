#include "cli_common.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "pav/decomp.hpp"
#include "pav/kserver.hpp"
#include "pav/tsp.hpp"

namespace pav::cli {

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::vector<Point> load_points(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (l.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(l);
  if (lines.size() == 1) return PointSet::from_perm(parse_perm(lines[0])).points();
  std::istringstream again(text);
  return read_points(again);
}

Seq load_requests(const std::string& path) {
  std::istringstream in(slurp(path));
  Seq x = read_requests(in);
  bool unit = true, integral = true;
  for (double v : x) {
    unit &= v >= 0 && v <= 1;
    integral &= v == std::floor(v);
  }
  if (!unit && integral) {
    Perm p(x.begin(), x.end());
    require_perm(p);
    return perm_to_unit(p);
  }
  return x;
}

Perm load_pattern(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::istringstream in(slurp(arg));
    auto ps = read_perms(in);
    if (ps.size() != 1) throw std::runtime_error("pattern file must hold one permutation");
    return ps[0];
  }
  return parse_perm(arg);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void add_kserver_options(CLI::App& app, KServerOpts& o) {
  app.add_option("--algo", o.algo, "solver")
      ->check(CLI::IsMember({"baseline", "gridded", "av231", "av231pi", "separable", "dc", "oracle"}));
  app.add_option("--k", o.k, "number of servers")->check(CLI::PositiveNumber);
  app.add_option("--t", o.t, "separability for the separable solver")->check(CLI::Range(2, 1 << 20));
  app.add_option("--pattern", o.pattern, "pattern file or literal, for av231pi");
  app.add_option("--in", o.in, "request file, one value per line")->required();
  app.add_option("--out-csv", o.out_csv, "CSV output (default stdout)");
  app.add_option("--seed", o.seed, "seed recorded in the output");
  app.add_flag("--oracle", o.oracle, "also compute the offline optimum");
}

int run_kserver(const KServerOpts& o) {
  KServerInstance inst{load_requests(o.in), o.k};
  const int n = inst.n();
  double cost = 0, bound = std::nan("");
  std::string params;
  if (o.algo == "baseline") {
    cost = baseline_intervals(inst).cost;
    bound = bound_baseline(n, o.k);
  } else if (o.algo == "dc") {
    cost = double_coverage(inst).cost;
  } else if (o.algo == "av231") {
    cost = serve_231(inst).cost;
    bound = bound_231(n, o.k);
  } else if (o.algo == "av231pi") {
    if (o.pattern.empty()) throw std::runtime_error("av231pi needs --pattern");
    Perm pi = load_pattern(o.pattern);
    cost = serve_231_avoiding_pi(inst, pi).cost;
    bound = bound_av231pi(static_cast<int>(pi.size()));
    params = "pi=" + to_string(pi);
  } else if (o.algo == "separable") {
    cost = serve_separable(inst, o.t).cost;
    bound = bound_separable(n, o.k, o.t);
    params = "t=" + std::to_string(o.t);
  } else if (o.algo == "gridded") {
    GriddedInfo gi;
    cost = solve_gridded(inst, &gi).cost;
    bound = bound_gridded(n, o.k, gi.d, gi.t);
    params = "d=" + std::to_string(gi.d) + ";t=" + std::to_string(gi.t) + ";used=" + std::to_string(gi.servers_used);
  } else {
    cost = oracle_opt(inst);
  }
  std::string opt;
  if (o.oracle || o.algo == "oracle") {
    char b[64];
    std::snprintf(b, sizeof b, "%.12g", o.algo == "oracle" ? cost : oracle_opt(inst));
    opt = b;
  }
  const bool pass = std::isnan(bound) || cost <= bound * (1 + 1e-9);
  std::ofstream f;
  std::ostream& out = open_out(o.out_csv, f);
  char c[64];
  std::snprintf(c, sizeof c, "%.12g", cost);
  out << "n,k,algo,cost,oracle_cost,seed,params\n";
  out << n << ',' << o.k << ',' << o.algo << ',' << c << ',' << opt << ',' << o.seed << ',' << params << '\n';
  if (!std::isnan(bound))
    std::cerr << "certificate " << (pass ? "PASS" : "FAIL") << ": cost " << cost << " <= bound " << bound << '\n';
  return pass ? 0 : 1;
}

void add_tsp_options(CLI::App& app, TspOpts& o) {
  app.add_option("--algo", o.algo, "construction")
      ->check(CLI::IsMember({"mst", "decomp-tree", "tour", "held-karp", "av231pi"}));
  app.add_option("--pattern", o.pattern, "pattern file or literal, for av231pi");
  app.add_option("--in", o.in, "point file, or a permutation on one line")->required();
  app.add_option("--out-csv", o.out_csv, "CSV output (default stdout)");
}

int run_tsp(const TspOpts& o) {
  std::vector<Point> P = load_points(o.in);
  const int n = static_cast<int>(P.size());
  double len = 0, bound = std::nan("");
  bool ok = true;
  if (o.algo == "mst") {
    len = mst(P).length;
  } else if (o.algo == "tour") {
    EdgeSet t = tour_from_mst(P);
    len = t.length;
    bound = 2 * mst(P).length;
    ok = is_tour(n, t.order);
  } else if (o.algo == "held-karp") {
    len = held_karp(P);
  } else if (o.algo == "decomp-tree") {
    Decomposition dec = build_adaptive(PointSet(P));
    EdgeSet t = spanning_tree_from_decomp(dec);
    len = t.length;
    bound = 20.0 * dec.d * harmonic(n - 1);
    ok = is_spanning_tree(n, t.edges);
  } else {
    if (o.pattern.empty()) throw std::runtime_error("av231pi needs --pattern");
    Perm pi = load_pattern(o.pattern);
    double w = 0, h = 0;
    for (const Point& p : P) {
      w = std::max(w, p.x);
      h = std::max(h, p.y);
    }
    w = std::max(w, 1.0);
    h = std::max(h, 1.0);
    SteinerTree st = spanning_tree_231_pi(P, w, h, pi);
    len = st.tree.length;
    bound = 2.0 * pi.size() * (w + h);
    ok = is_spanning_tree(static_cast<int>(st.points.size()), st.tree.edges);
  }
  const bool pass = ok && (std::isnan(bound) || len <= bound * (1 + 1e-9));
  std::ofstream f;
  std::ostream& out = open_out(o.out_csv, f);
  char a[64], b[64];
  std::snprintf(a, sizeof a, "%.12g", len);
  std::snprintf(b, sizeof b, "%.12g", bound);
  out << "n,algo,length,bound,certificate\n";
  out << n << ',' << o.algo << ',' << a << ',' << (std::isnan(bound) ? "" : b) << ','
      << (std::isnan(bound) ? "NA" : pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

int guarded(const std::string& tool, int (*fn)(int, char**), int argc, char** argv) {
  try {
    return fn(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << tool << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pav::cli
