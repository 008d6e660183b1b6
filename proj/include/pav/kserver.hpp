#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pav/perm.hpp"

namespace pav {

struct KServerInstance {
  Seq requests;  // values in [0,1]
  int k = 1;
  int n() const { return static_cast<int>(requests.size()); }
};

// positions after each request, row-major n x k; servers start at 0
struct KServerSolution {
  int n = 0, k = 0;
  std::vector<double> pos;
  double cost = 0;       // validated cost of the position matrix
  double plan_cost = 0;  // every move the algorithm made, counted from its own start contract
  int servers_used = 0;
  double at(int i, int j) const { return pos[static_cast<std::size_t>(i) * k + j]; }
};

class InvalidSolution : public std::runtime_error {
 public:
  InvalidSolution(int index, const std::string& why);
  int index;
};

class NotTSeparable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double validate_and_cost(const KServerInstance& inst, const KServerSolution& sol);

KServerSolution baseline_intervals(const KServerInstance& inst);
KServerSolution double_coverage(const KServerInstance& inst);
// single server visiting every request in order
KServerSolution greedy_single(const KServerInstance& inst);

KServerSolution serve_231(const KServerInstance& inst);
// needs inst.k >= 2^{|pi|+1}; extra servers stay at 0
KServerSolution serve_231_avoiding_pi(const KServerInstance& inst, const Perm& pi);
KServerSolution serve_separable(const KServerInstance& inst, int t);

struct GriddedInfo {
  int d = 0;             // t_used of the adaptive decomposition
  int t = 0;             // floor(log_d k)
  int servers_used = 0;  // d^t
  int fallbacks = 0;     // cells served by the interval baseline
};
KServerSolution solve_gridded(const KServerInstance& inst, GriddedInfo* info = nullptr);

// exact offline optimum by min-cost flow
double oracle_opt(const KServerInstance& inst);
KServerSolution oracle_solution(const KServerInstance& inst);
// integer requests num/den with 0 <= num <= den; returns the optimum times den
std::int64_t oracle_opt_exact(const std::vector<std::int64_t>& num, std::int64_t den, int k);
// exhaustive dynamic program over server multisets; small n and k only
double oracle_dp(const KServerInstance& inst);
std::int64_t oracle_dp_exact(const std::vector<std::int64_t>& num, int k);

struct RationalSeq {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  Seq values() const;
};
// X'_k(m): 231-avoiding, hard for k servers
RationalSeq lb_231_sequence(int k, int m);
// X^d_t(m): twin-width d, hard for fewer than (2d)^t servers
RationalSeq lb_tww_sequence(int t, int d, int m);
KServerInstance gen_231_lb(long long n_target, int k);
KServerInstance gen_tww_lb(long long n_target, int k, int d);

// floor(n^(a/b)) for small exponents
long long floor_pow_frac(long long n, int a, int b);
int floor_log(long long base, long long k);

double bound_baseline(int n, int k);  // n/k + k/2
double bound_231(int n, int k);
double bound_av231pi(int pattern_len);
double bound_separable(int n, int k, int t);
double bound_gridded(int n, int k, int d, int t);

}  // namespace pav
