#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "deep.hpp"
#include "pav/kserver.hpp"

namespace pav::detail {

// Executes server moves and records a row each time a request is served.
class Tracker {
 public:
  Tracker(const Seq& x, int k) : x_(x), k_(k), pos_(k, 0.0) {
    sol_.n = static_cast<int>(x.size());
    sol_.k = k;
    sol_.pos.reserve(static_cast<std::size_t>(sol_.n) * k);
  }
  // start contract of the algorithm, free of charge
  void place(int s, double p) { pos_[s] = p; }
  void move(int s, double p) {
    plan_ += std::fabs(pos_[s] - p);
    pos_[s] = p;
  }
  void serve(int i, int s) {
    if (i != next_) throw std::logic_error("requests served out of order");
    move(s, x_[i]);
    sol_.pos.insert(sol_.pos.end(), pos_.begin(), pos_.end());
    ++next_;
  }
  double where(int s) const { return pos_[s]; }
  int served() const { return next_; }
  KServerSolution finish(const KServerInstance& inst, int used);

 private:
  const Seq& x_;
  int k_;
  std::vector<double> pos_;
  KServerSolution sol_;
  double plan_ = 0;
  int next_ = 0;
};

// solution built from a per-request server assignment, servers moving straight to their requests
KServerSolution from_assignment(const KServerInstance& inst, const std::vector<int>& who, int used);

}  // namespace pav::detail
