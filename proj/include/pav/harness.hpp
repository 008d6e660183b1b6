#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pav/perm.hpp"

namespace pav {

struct BenchSpec {
  std::string problem = "kserver";    // ass | kserver | tsp | decomp
  std::string generator = "random231";  // see make_sequence / make_points
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algos;
  int k = 2;  // servers
  int d = 2;  // twin-width parameter of tww generators
  int t = 2;  // separability for the separable solver
  Perm pi;    // pattern for av231pi generator and solvers
  int threads = 1;
  bool timing = false;  // wall_ms stays 0 otherwise, keeping output reproducible
};

void validate(const BenchSpec& spec);

struct BenchRow {
  std::string problem, algo;
  int n = 0;
  int k_or_d = 0;
  std::uint64_t seed = 0;
  double cost = 0;
  double bound = 0;  // NaN when the algorithm has no certificate
  std::string certificate;  // PASS | FAIL | NA
  double wall_ms = 0;
};

// Request sequences in [0,1]:
//   random231 separable tww av231pi perm  (random permutations, values (v-0.5)/n)
//   uniform (i.i.d.), lb231 (X'_k), lbtww (X^d_t); the last two ignore the seed
Seq make_sequence(const std::string& gen, int n, std::uint64_t seed, const BenchSpec& params);
// Point sets: the permutation generators above as point sets, plus
//   uniform (i.i.d. points), Pk (n -> k = floor(log2(n+1)), unit scaled), Gd (d = floor(sqrt n)), grid
std::vector<Point> make_points(const std::string& gen, int n, std::uint64_t seed, const BenchSpec& params);

std::vector<BenchRow> run_bench(const BenchSpec& spec);
bool all_certificates_pass(const std::vector<BenchRow>& rows);

void write_rows(std::ostream& out, const std::vector<BenchRow>& rows, char sep = ',');
std::vector<BenchRow> read_rows(std::istream& in);

struct FitResult {
  double slope = 0, intercept = 0;
  double r2 = 0;
  double residual = 0;  // root mean square
  std::vector<double> sizes, medians;
};
// least squares of log(median cost) on log(n)
FitResult fit_exponent(const std::vector<BenchRow>& rows, int min_seeds = 5);
// least squares of median cost on log(n)
FitResult fit_log(const std::vector<BenchRow>& rows, int min_seeds = 5);
// plain least squares on (x, y) pairs
FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pav
