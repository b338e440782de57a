#pragma once

#include <cstdint>
#include <vector>

#include "gridwidth/grid.hpp"
#include "gridwidth/sweep.hpp"

namespace gridwidth {

// Product of even cycles C_{2n_1} x ... x C_{2n_d}. Only even cycles of
// length >= 4 are accepted: those tori have the same per-size minimum
// boundaries as the grid P_2^d x P_{n_1} x ... x P_{n_d}, which is what
// every width computation here reduces to.
class TorusShape {
 public:
  static TorusShape from_cycle_lengths(const std::vector<int64_t>& lengths);

  const std::vector<int64_t>& cycle_lengths() const { return cycle_lengths_; }
  const std::vector<int64_t>& half_dims() const { return half_dims_; }  // sorted ascending

 private:
  TorusShape() = default;

  std::vector<int64_t> cycle_lengths_;
  std::vector<int64_t> half_dims_;
};

// The equivalent grid: d factors of 2 plus the half dims.
GridShape reduce_torus(const TorusShape& t);

// Closed form when the largest half dim dominates, else a sweep of the
// reduced grid.
int64_t vbw_torus(const TorusShape& t, const SweepOptions& opts = {});

}  // namespace gridwidth
