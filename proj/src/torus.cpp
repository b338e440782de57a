#include "gridwidth/torus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gridwidth/formulas.hpp"

namespace gridwidth {

TorusShape TorusShape::from_cycle_lengths(const std::vector<int64_t>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("torus needs at least one cycle length");
  TorusShape t;
  t.cycle_lengths_ = lengths;
  t.half_dims_.reserve(lengths.size());
  for (int64_t len : lengths) {
    if (len < 4 || len % 2 != 0)
      throw std::invalid_argument("cycle lengths must be even and >= 4, got " +
                                  std::to_string(len));
    t.half_dims_.push_back(len / 2);
  }
  std::sort(t.cycle_lengths_.begin(), t.cycle_lengths_.end());
  std::sort(t.half_dims_.begin(), t.half_dims_.end());
  return t;
}

GridShape reduce_torus(const TorusShape& t) {
  std::vector<int64_t> dims(t.half_dims().size(), 2);
  dims.insert(dims.end(), t.half_dims().begin(), t.half_dims().end());
  return GridShape::from_dims(dims);
}

int64_t vbw_torus(const TorusShape& t, const SweepOptions& opts) {
  const FormulaResult lm = vbw_torus_large_max(t.half_dims());
  if (lm.applicable) return lm.value;
  return vbw_sweep(reduce_torus(t), opts);
}

}  // namespace gridwidth
