#include <atomic>
#include <cstdlib>
#include <cstring>

#include "pav/simd.hpp"

namespace pav::simd {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa initial() {
  Isa best = probe();
  // PAV_SIMD=scalar forces the reference path
  const char* env = std::getenv("PAV_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return best;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial()};
  return isa;
}

}  // namespace

Isa detected() {
  static const Isa d = probe();
  return d;
}

Isa active() { return current().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (isa == Isa::avx2 && detected() != Isa::avx2) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
}

const char* name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const Kernels& kernels(Isa isa) {
  if (isa == Isa::avx2 && detected() == Isa::avx2) return avx2::table;
  return scalar::table;
}

}  // namespace pav::simd
