#include <pthread.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "kserver_internal.hpp"

namespace pav {

InvalidSolution::InvalidSolution(int idx, const std::string& why)
    : std::runtime_error("invalid k-server solution at request " + std::to_string(idx) + ": " + why), index(idx) {}

double validate_and_cost(const KServerInstance& inst, const KServerSolution& sol) {
  const int n = inst.n(), k = inst.k;
  if (sol.k != k || sol.n != n || sol.pos.size() != static_cast<std::size_t>(n) * k)
    throw InvalidSolution(-1, "matrix shape does not match the instance");
  double cost = 0;
  for (int i = 0; i < n; ++i) {
    bool covered = false;
    for (int j = 0; j < k; ++j) {
      double p = sol.at(i, j);
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidSolution(i, "server position outside [0,1]");
      covered |= p == inst.requests[i];
      cost += std::fabs(p - (i ? sol.at(i - 1, j) : 0.0));
    }
    if (!covered) throw InvalidSolution(i, "no server on the request");
  }
  return cost;
}

namespace detail {

KServerSolution Tracker::finish(const KServerInstance& inst, int used) {
  if (next_ != sol_.n) throw std::logic_error("not every request was served");
  sol_.plan_cost = plan_;
  sol_.servers_used = used;
  sol_.cost = validate_and_cost(inst, sol_);
  return std::move(sol_);
}

namespace {
struct DeepCall {
  const std::function<void()>* fn;
  std::exception_ptr err;
};
void* deep_entry(void* arg) {
  auto* c = static_cast<DeepCall*>(arg);
  try {
    (*c->fn)();
  } catch (...) {
    c->err = std::current_exception();
  }
  return nullptr;
}
}  // namespace

void run_deep(const std::function<void()>& fn) {
  DeepCall call{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t(1) << 30);
  pthread_t th;
  int rc = pthread_create(&th, &attr, deep_entry, &call);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    fn();  // no thread available; try on the current stack
    return;
  }
  pthread_join(th, nullptr);
  if (call.err) std::rethrow_exception(call.err);
}

KServerSolution from_assignment(const KServerInstance& inst, const std::vector<int>& who, int used) {
  Tracker tr(inst.requests, inst.k);
  for (int i = 0; i < inst.n(); ++i) tr.serve(i, who[i]);
  return tr.finish(inst, used);
}

}  // namespace detail

KServerSolution greedy_single(const KServerInstance& inst) {
  return detail::from_assignment(inst, std::vector<int>(inst.n(), 0), 1);
}

KServerSolution baseline_intervals(const KServerInstance& inst) {
  const int k = inst.k;
  std::vector<int> who(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    // server j (0-based) covers (j/k, (j+1)/k]; 0 goes to the first
    int j = static_cast<int>(std::ceil(inst.requests[i] * k)) - 1;
    who[i] = std::clamp(j, 0, k - 1);
  }
  return detail::from_assignment(inst, who, k);
}

KServerSolution double_coverage(const KServerInstance& inst) {
  const int k = inst.k;
  detail::Tracker tr(inst.requests, k);
  std::vector<int> ord(k);
  for (int i = 0; i < inst.n(); ++i) {
    const double x = inst.requests[i];
    for (int j = 0; j < k; ++j) ord[j] = j;
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return tr.where(a) < tr.where(b); });
    int at = -1, left = -1, right = -1;
    for (int s : ord) {
      double p = tr.where(s);
      if (p == x && at < 0) at = s;
      if (p < x) left = s;  // the last one below x
      if (p > x && right < 0) right = s;
    }
    if (at >= 0) {
      tr.serve(i, at);
    } else if (left < 0) {
      tr.serve(i, right);
    } else if (right < 0) {
      tr.serve(i, left);
    } else {
      double dl = x - tr.where(left), dr = tr.where(right) - x;
      if (dl <= dr) {
        tr.move(right, tr.where(right) - dl);
        tr.serve(i, left);
      } else {
        tr.move(left, tr.where(left) + dr);
        tr.serve(i, right);
      }
    }
  }
  return tr.finish(inst, k);
}

long long floor_pow_frac(long long n, int a, int b) {
  if (n <= 0) return 0;
  if (a == 0) return 1;
  long double v = std::pow(static_cast<long double>(n), static_cast<long double>(a) / b);
  long long p = static_cast<long long>(std::floor(v));
  // p^b <= n^a, checked in logs with a margin for rounding at exact powers
  auto ok = [&](long long q) {
    return q <= 1 || b * std::log(static_cast<long double>(q)) <= a * std::log(static_cast<long double>(n)) + 1e-12L;
  };
  while (!ok(p)) --p;
  while (ok(p + 1)) ++p;
  return p;
}

int floor_log(long long base, long long k) {
  if (base < 2 || k < 1) return 0;
  int t = 0;
  long long v = 1;
  while (v <= k / base) {
    v *= base;
    ++t;
  }
  return t;
}

double bound_baseline(int n, int k) { return double(n) / k + k / 2.0; }
double bound_231(int n, int k) { return 4.0 * k * std::pow(n, 1.0 / k) + double(k) * (k - 1); }

double bound_av231pi(int len) { return std::ldexp(1.0, len + 2); }

double bound_separable(int n, int k, int t) {
  int l = floor_log(2, k);
  return std::ldexp(1.0, l + 2) * (t + 1) * (std::pow(n, 1.0 / (l + 1)) + 1);
}

double bound_gridded(int n, int k, int d, int t) {
  return std::pow(124.0, t) * std::pow(double(d), t) * std::pow(n, 1.0 / (t + 1)) + k;
}

}  // namespace pav
