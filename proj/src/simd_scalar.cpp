#include <algorithm>
#include <cmath>
#include <limits>

#include "pav/simd.hpp"

namespace pav::simd::scalar {

namespace {

int relax_argmin(const double* xs, const double* ys, double* best, int* parent, int m, double px, double py,
                 int pid) {
  int arg = -1;
  double mn = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    double dx = xs[j] - px, dy = ys[j] - py;
    double d = dx * dx + dy * dy;
    if (d < best[j]) {
      best[j] = d;
      parent[j] = pid;
    }
    if (best[j] < mn || arg < 0) {
      mn = best[j];
      arg = j;
    }
  }
  return arg;
}

double min_dist2(const double* xs, const double* ys, int n, int skip, double px, double py) {
  double mn = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    if (j == skip) continue;
    double dx = xs[j] - px, dy = ys[j] - py;
    mn = std::min(mn, dx * dx + dy * dy);
  }
  return mn;
}

double min_linf(const double* xs, const double* ys, int n, int skip, double px, double py) {
  double mn = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    if (j == skip) continue;
    mn = std::min(mn, std::max(std::fabs(xs[j] - px), std::fabs(ys[j] - py)));
  }
  return mn;
}

int count_overlapping(const double* xlo, const double* xhi, const double* ylo, const double* yhi, int m,
                      double qxlo, double qxhi, double qylo, double qyhi) {
  int c = 0;
  for (int j = 0; j < m; ++j) {
    bool xo = xlo[j] <= qxhi && qxlo <= xhi[j];
    bool yo = ylo[j] <= qyhi && qylo <= yhi[j];
    c += (xo || yo);
  }
  return c;
}

}  // namespace

const Kernels table{relax_argmin, min_dist2, min_linf, count_overlapping};

}  // namespace pav::simd::scalar
