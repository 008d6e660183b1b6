#pragma once

#include <cstddef>

// Hot inner loops with a portable reference and an AVX2 variant picked at runtime.
// Both variants return bit-identical results.
namespace pav::simd {

enum class Isa { scalar, avx2 };

Isa detected();
Isa active();
void set_active(Isa isa);  // clamped to what the CPU supports
const char* name(Isa isa);

struct Kernels {
  // best[j] = min(best[j], |p - q_j|^2), parent updated on improvement; returns the first argmin (-1 if m == 0)
  int (*relax_argmin)(const double* xs, const double* ys, double* best, int* parent, int m, double px,
                      double py, int pid);
  // min over j != skip of squared L2 distance, resp. L-infinity distance
  double (*min_dist2)(const double* xs, const double* ys, int n, int skip, double px, double py);
  double (*min_linf)(const double* xs, const double* ys, int n, int skip, double px, double py);
  // rectangles whose x- or y-projection meets the query (closed intervals)
  int (*count_overlapping)(const double* xlo, const double* xhi, const double* ylo, const double* yhi, int m,
                           double qxlo, double qxhi, double qylo, double qyhi);
};

const Kernels& kernels(Isa isa);
inline const Kernels& kernels() { return kernels(active()); }

namespace scalar {
extern const Kernels table;
}
namespace avx2 {
extern const Kernels table;
}

}  // namespace pav::simd
