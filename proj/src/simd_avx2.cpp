#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "pav/simd.hpp"

namespace pav::simd::avx2 {

namespace {

int relax_argmin(const double* xs, const double* ys, double* best, int* parent, int m, double px, double py,
                 int pid) {
  if (m <= 0) return -1;
  const __m256d vpx = _mm256_set1_pd(px), vpy = _mm256_set1_pd(py);
  auto relax4 = [&](int j) {
    __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), vpx);
    __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), vpy);
    __m256d d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d b = _mm256_loadu_pd(best + j);
    __m256d lt = _mm256_cmp_pd(d, b, _CMP_LT_OQ);
    int mask = _mm256_movemask_pd(lt);
    if (mask) {
      b = _mm256_blendv_pd(b, d, lt);
      _mm256_storeu_pd(best + j, b);
      for (int q = 0; q < 4; ++q)
        if (mask >> q & 1) parent[j + q] = pid;
    }
    return b;
  };
  int j = 0;
  int arg = -1;
  double mn = std::numeric_limits<double>::infinity();
  if (m >= 4) {
    __m256d vmin = relax4(0);
    __m256d vidx = _mm256_set_pd(3, 2, 1, 0);
    __m256d step = _mm256_set1_pd(4);
    __m256d cur = vidx;
    for (j = 4; j + 4 <= m; j += 4) {
      cur = _mm256_add_pd(cur, step);
      __m256d b = relax4(j);
      __m256d lt = _mm256_cmp_pd(b, vmin, _CMP_LT_OQ);
      vmin = _mm256_blendv_pd(vmin, b, lt);
      vidx = _mm256_blendv_pd(vidx, cur, lt);
    }
    alignas(32) double lm[4], li[4];
    _mm256_store_pd(lm, vmin);
    _mm256_store_pd(li, vidx);
    for (int q = 0; q < 4; ++q)
      if (lm[q] < mn || (lm[q] == mn && li[q] < arg) || arg < 0) {
        mn = lm[q];
        arg = static_cast<int>(li[q]);
      }
  }
  for (; j < m; ++j) {
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

double hmin(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return std::min(std::min(t[0], t[1]), std::min(t[2], t[3]));
}

template <bool Linf>
double min_range(const double* xs, const double* ys, int lo, int hi, double px, double py) {
  double mn = std::numeric_limits<double>::infinity();
  const __m256d vpx = _mm256_set1_pd(px), vpy = _mm256_set1_pd(py);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d vmin = _mm256_set1_pd(mn);
  int j = lo;
  for (; j + 4 <= hi; j += 4) {
    __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), vpx);
    __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), vpy);
    __m256d d;
    if constexpr (Linf)
      d = _mm256_max_pd(_mm256_andnot_pd(sign, dx), _mm256_andnot_pd(sign, dy));
    else
      d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    vmin = _mm256_min_pd(vmin, d);
  }
  mn = hmin(vmin);
  for (; j < hi; ++j) {
    double dx = xs[j] - px, dy = ys[j] - py;
    double d = Linf ? std::max(std::fabs(dx), std::fabs(dy)) : dx * dx + dy * dy;
    mn = std::min(mn, d);
  }
  return mn;
}

double min_dist2(const double* xs, const double* ys, int n, int skip, double px, double py) {
  if (skip < 0 || skip >= n) return min_range<false>(xs, ys, 0, n, px, py);
  return std::min(min_range<false>(xs, ys, 0, skip, px, py), min_range<false>(xs, ys, skip + 1, n, px, py));
}

double min_linf(const double* xs, const double* ys, int n, int skip, double px, double py) {
  if (skip < 0 || skip >= n) return min_range<true>(xs, ys, 0, n, px, py);
  return std::min(min_range<true>(xs, ys, 0, skip, px, py), min_range<true>(xs, ys, skip + 1, n, px, py));
}

int count_overlapping(const double* xlo, const double* xhi, const double* ylo, const double* yhi, int m,
                      double qxlo, double qxhi, double qylo, double qyhi) {
  const __m256d a = _mm256_set1_pd(qxlo), b = _mm256_set1_pd(qxhi);
  const __m256d c = _mm256_set1_pd(qylo), d = _mm256_set1_pd(qyhi);
  int cnt = 0, j = 0;
  for (; j + 4 <= m; j += 4) {
    __m256d xo = _mm256_and_pd(_mm256_cmp_pd(_mm256_loadu_pd(xlo + j), b, _CMP_LE_OQ),
                               _mm256_cmp_pd(a, _mm256_loadu_pd(xhi + j), _CMP_LE_OQ));
    __m256d yo = _mm256_and_pd(_mm256_cmp_pd(_mm256_loadu_pd(ylo + j), d, _CMP_LE_OQ),
                               _mm256_cmp_pd(c, _mm256_loadu_pd(yhi + j), _CMP_LE_OQ));
    cnt += __builtin_popcount(_mm256_movemask_pd(_mm256_or_pd(xo, yo)));
  }
  for (; j < m; ++j) {
    bool xo = xlo[j] <= qxhi && qxlo <= xhi[j];
    bool yo = ylo[j] <= qyhi && qylo <= yhi[j];
    cnt += (xo || yo);
  }
  return cnt;
}

}  // namespace

const Kernels table{relax_argmin, min_dist2, min_linf, count_overlapping};

}  // namespace pav::simd::avx2
