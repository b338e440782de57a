#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gridwidth/grid.hpp"

namespace gridwidth {

inline constexpr uint64_t kDefaultMemoryCap = uint64_t{2} << 30;  // 2 GiB

struct SweepOptions {
  uint64_t memory_cap = kDefaultMemoryCap;
  // Runtime checks of the boundary-evolution facts (step identity, the 3D
  // monotonicity lemmas, the per-weight-class peak). On by default in debug
  // builds; a violation throws InvariantViolation.
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
};

// |boundary(I_k)| for every prefix I_k of the simplicial order, k = 0..N.
// Prefixes of that order minimize the boundary among sets of equal size, so
// the profile maximum is the vertex boundary width, which for grids equals
// pathwidth and bandwidth.
struct BoundaryProfile {
  GridShape shape;
  std::vector<int64_t> values;
  int64_t vbw = 0;
  uint64_t argmax_k = 0;  // smallest k with values[k] == vbw
};

struct SweepSummary {
  int64_t vbw = 0;
  uint64_t argmax_k = 0;
  uint64_t num_vertices = 0;
};

BoundaryProfile sweep_profile(const GridShape& s, const SweepOptions& opts = {});

// Streaming variant: no recorded profile, memory is just the two bitmaps.
SweepSummary sweep_summary(const GridShape& s, const SweepOptions& opts = {});
int64_t vbw_sweep(const GridShape& s, const SweepOptions& opts = {});

// CSV rows "k,boundary" with a header. Profiles longer than max_rows are
// thinned to a uniform stride (argmax and final row always kept) unless
// full is set. Returns the number of data rows written.
uint64_t write_profile_csv(std::ostream& out, const BoundaryProfile& p, bool full = false,
                           uint64_t max_rows = 10'000'000);

}  // namespace gridwidth
