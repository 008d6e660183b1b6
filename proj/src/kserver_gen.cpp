#include <stdexcept>

#include "pav/kserver.hpp"

namespace pav {

namespace {

void guard(std::int64_t den, std::int64_t factor) {
  if (den > (std::int64_t(1) << 50) / factor) throw std::overflow_error("lower-bound sequence: denominator overflow");
}

// S'(X, m): first m shifted copies of X rising, then m single requests falling
RationalSeq shift_up_down(const RationalSeq& X, int m) {
  const std::int64_t D = X.den;
  guard(D, 4LL * m);
  RationalSeq out;
  out.den = 4LL * m * D;
  for (int i = 0; i < m; ++i) {
    for (auto x : X.num) out.num.push_back(i * D + x);
    out.num.push_back((4LL * m - i) * D);
  }
  return out;
}

// S_d(X, m): epochs i of d rising and d falling copies
RationalSeq shift_epochs(const RationalSeq& X, int d, int m) {
  const std::int64_t D = X.den;
  guard(D, 4LL * d * m);
  RationalSeq out;
  out.den = 4LL * d * m * D;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) {
      for (auto x : X.num) out.num.push_back((4LL * m * j + i) * D + x);
      for (auto x : X.num) out.num.push_back((4LL * j * m + 3LL * m - i) * D - x);
    }
  return out;
}

}  // namespace

Seq RationalSeq::values() const {
  Seq v;
  v.reserve(num.size());
  for (auto x : num) v.push_back(static_cast<double>(x) / static_cast<double>(den));
  return v;
}

RationalSeq lb_231_sequence(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("lb_231_sequence: k, m >= 1");
  RationalSeq X;
  X.num = {1};
  X.den = 2;
  for (int i = 0; i < k; ++i) X = shift_up_down(X, m);
  return X;
}

RationalSeq lb_tww_sequence(int t, int d, int m) {
  if (t < 1 || d < 1 || m < 1) throw std::invalid_argument("lb_tww_sequence: t, d, m >= 1");
  RationalSeq X;
  X.num = {1};
  X.den = 2;
  for (int i = 0; i < t; ++i) X = shift_epochs(X, d, m);
  return X;
}

KServerInstance gen_231_lb(long long n_target, int k) {
  if (k < 1) throw std::invalid_argument("gen_231_lb: k >= 1");
  const long long m = floor_pow_frac(n_target, 1, k) / 2;
  if (m < 1) throw std::invalid_argument("gen_231_lb: n too small for k, instance would be empty");
  return {lb_231_sequence(k, static_cast<int>(m)).values(), k};
}

KServerInstance gen_tww_lb(long long n_target, int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("gen_tww_lb: k, d >= 1");
  const int t = floor_log(2LL * d, k) + 1;
  const long long m = floor_pow_frac(n_target, 1, t) / (2LL * d);
  if (m < 1) throw std::invalid_argument("gen_tww_lb: n too small for k and d, instance would be empty");
  return {lb_tww_sequence(t, d, static_cast<int>(m)).values(), k};
}

}  // namespace pav
