#include <cstdio>
#include <iostream>
#include <sstream>

#include "cli_common.hpp"
#include "pav/ass.hpp"
#include "pav/decomp.hpp"
#include "pav/harness.hpp"

namespace {

using namespace pav;

struct GenOpts {
  std::string gen = "random231", as = "seq", out;
  int n = 100, k = 2, d = 2;
  std::string pi;
  unsigned long long seed = 1;
};

int run_gen(const GenOpts& o) {
  BenchSpec s;
  s.k = o.k;
  s.d = o.d;
  if (!o.pi.empty()) s.pi = cli::load_pattern(o.pi);
  std::ofstream f;
  std::ostream& out = cli::open_out(o.out, f);
  if (o.as == "seq") {
    write_requests(out, make_sequence(o.gen, o.n, o.seed, s));
  } else {
    auto pts = make_points(o.gen, o.n, o.seed, s);
    if (o.as == "points") write_points(out, pts);
    else write_perm(out, PointSet(pts).to_perm());
  }
  return 0;
}

int run_decompose(const std::string& in, const std::string& out_path, int t) {
  PointSet P(cli::load_points(in));
  Decomposition dec;
  if (t > 0) {
    BuildResult br = build_distance_balanced(P, t);
    if (!br.ok()) {
      std::cerr << "stuck with " << br.stuck_live << " rectangles left at t=" << t << '\n';
      return 1;
    }
    dec = std::move(*br.dec);
  } else {
    dec = build_adaptive(P);
  }
  std::ofstream f;
  write_decomposition(cli::open_out(out_path, f), dec);
  BalanceReport b = check_balanced(dec), inv = check_invariants(dec);
  const double bound = 20.0 * dec.d * harmonic(dec.n() - 1), rds = rect_dimension_sum(dec);
  std::cerr << "t=" << dec.t << " width=" << width(dec.merge) << " balanced=" << (b.pass ? "PASS" : "FAIL " + b.what)
            << " invariants=" << (inv.pass ? "PASS" : "FAIL " + inv.what) << " dimension_sum=" << rds << " <= " << bound
            << '\n';
  return b.pass && inv.pass && rds <= bound ? 0 : 1;
}

int run_ass(const std::string& in, const std::string& out_path) {
  PointSet P(cli::load_points(in));
  SupersetResult r = build_superset(build_adaptive(P));
  std::ofstream f;
  write_superset(cli::open_out(out_path, f), r);
  const bool sat = is_satisfied(r.points);
  const long long q = 2LL * r.d + 4;
  const bool ok = sat && r.max_added() <= q * q && static_cast<long long>(r.size()) <= r.bound();
  std::cerr << "n=" << r.n_input << " superset=" << r.size() << " bound=" << r.bound() << " d=" << r.d
            << " satisfied=" << (sat ? "yes" : "no") << " max_added=" << r.max_added() << '\n';
  return ok ? 0 : 1;
}

struct BenchOpts {
  BenchSpec spec;
  std::string pi, out_csv, format = "csv";
  std::vector<unsigned long long> seeds{1, 2, 3, 4, 5};
};

int run_bench_cmd(BenchOpts& o) {
  if (!o.pi.empty()) o.spec.pi = cli::load_pattern(o.pi);
  o.spec.seeds.assign(o.seeds.begin(), o.seeds.end());
  auto rows = run_bench(o.spec);
  std::ofstream f;
  write_rows(cli::open_out(o.out_csv, f), rows, o.format == "tsv" ? '\t' : ',');
  return all_certificates_pass(rows) ? 0 : 1;
}

int run_fit(const std::string& in, const std::string& algo, bool log_growth, int min_seeds) {
  std::istringstream ss(cli::slurp(in));
  auto rows = read_rows(ss);
  if (!algo.empty()) std::erase_if(rows, [&](const BenchRow& r) { return r.algo != algo; });
  FitResult fr = log_growth ? fit_log(rows, min_seeds) : fit_exponent(rows, min_seeds);
  std::printf("%s slope=%.6g intercept=%.6g r2=%.6g residual=%.6g\n", log_growth ? "cost~log(n)" : "log(cost)~log(n)",
              fr.slope, fr.intercept, fr.r2, fr.residual);
  for (std::size_t i = 0; i < fr.sizes.size(); ++i) std::printf("  n=%.0f median=%.6g\n", fr.sizes[i], fr.medians[i]);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding inputs: decompositions, BST, k-server and TSP experiments"};
  app.require_subcommand(1);

  GenOpts g;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--gen", g.gen, "random231|separable|tww|av231pi|perm|uniform|lb231|lbtww|Pk|Gd|grid");
  gen->add_option("--as", g.as, "output kind")->check(CLI::IsMember({"seq", "points", "perm"}));
  gen->add_option("--n", g.n, "size")->check(CLI::PositiveNumber);
  gen->add_option("--k", g.k, "servers (lower-bound sequences)");
  gen->add_option("--d", g.d, "twin-width parameter");
  gen->add_option("--pi", g.pi, "pattern for av231pi");
  gen->add_option("--seed", g.seed, "random seed");
  gen->add_option("--out,--out-csv", g.out, "output file (default stdout)");

  std::string d_in = "-", d_out;
  int d_t = 0;
  auto* dc = app.add_subcommand("decompose", "distance-balanced merge sequence of a point set");
  dc->add_option("--in", d_in, "permutation or point file")->required();
  dc->add_option("--out", d_out, "decomposition output (default stdout)");
  dc->add_option("--t", d_t, "fixed t (default: smallest that works)");

  std::string a_in = "-", a_out;
  auto* as = app.add_subcommand("ass", "arborally satisfied superset from a decomposition");
  as->add_option("--in", a_in, "permutation or point file")->required();
  as->add_option("--out", a_out, "superset output (default stdout)");

  cli::KServerOpts ko;
  auto* ks = app.add_subcommand("kserver", "k-server on the line");
  cli::add_kserver_options(*ks, ko);

  cli::TspOpts to;
  auto* ts = app.add_subcommand("tsp", "spanning trees and tours");
  cli::add_tsp_options(*ts, to);

  BenchOpts bo;
  auto* bn = app.add_subcommand("bench", "benchmark sweep to CSV");
  bn->add_option("--problem", bo.spec.problem)->check(CLI::IsMember({"ass", "kserver", "tsp", "decomp"}));
  bn->add_option("--gen", bo.spec.generator, "instance generator");
  bn->add_option("--sizes", bo.spec.sizes, "size ladder")->delimiter(',')->required();
  bn->add_option("--seed,--seeds", bo.seeds, "seeds")->delimiter(',');
  bn->add_option("--algos", bo.spec.algos, "algorithms")->delimiter(',')->required();
  bn->add_option("--k", bo.spec.k, "servers");
  bn->add_option("--d", bo.spec.d, "twin-width parameter");
  bn->add_option("--t", bo.spec.t, "separability");
  bn->add_option("--pi", bo.pi, "pattern");
  bn->add_option("--threads", bo.spec.threads, "worker threads");
  bn->add_flag("--timing", bo.spec.timing, "record wall-clock time per row");
  bn->add_option("--out-csv", bo.out_csv, "output (default stdout)");
  bn->add_option("--format", bo.format)->check(CLI::IsMember({"csv", "tsv"}));

  std::string f_in = "-", f_algo;
  bool f_log = false;
  int f_min = 5;
  auto* ft = app.add_subcommand("fit", "least-squares scaling fit of bench output");
  ft->add_option("--in", f_in, "bench CSV/TSV")->required();
  ft->add_option("--algo", f_algo, "only rows of this algorithm");
  ft->add_flag("--log", f_log, "fit cost against log n instead of log-log");
  ft->add_option("--min-seeds", f_min, "runs required per size");

  CLI11_PARSE(app, argc, argv);
  if (*gen) return run_gen(g);
  if (*dc) return run_decompose(d_in, d_out, d_t);
  if (*as) return run_ass(a_in, a_out);
  if (*ks) return cli::run_kserver(ko);
  if (*ts) return cli::run_tsp(to);
  if (*bn) return run_bench_cmd(bo);
  return run_fit(f_in, f_algo, f_log, f_min);
}

}  // namespace

int main(int argc, char** argv) { return pav::cli::guarded("pav", run, argc, argv); }
