#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridwidth/grid.hpp"

namespace gridwidth {

enum class FormulaMethod {
  LargeMaxFactor,
  ThreeD,
  Cubic,
  Hypercube,
  TorusLargeMax,
  Conjecture4D,
  PeakScan3D,
};

const char* method_name(FormulaMethod m);

struct FormulaResult {
  bool applicable = false;
  int64_t value = 0;  // meaningful only when applicable
  FormulaMethod method = FormulaMethod::LargeMaxFactor;
  bool conjectured = false;
  std::string reason;  // why not, when !applicable
};

// If the largest factor dominates (sum of (n_i - 1) over the others is at
// most n_d) the width is the product of the other factors. Always applies
// for d <= 2; for the single-vertex shape the value is 0.
FormulaResult vbw_large_max(const GridShape& s);

// Exact width of the 3D grid, 2 <= n1 <= n2 <= n3:
// n1*n2 when n1+n2-2 <= n3, else n1*n2 - floor((n1+n2-n3-1)^2 / 4).
int64_t vbw_3d(int64_t n1, int64_t n2, int64_t n3);

// Cube special case: floor((3n^2 + 2n) / 4).
int64_t vbw_cubic(int64_t n);

// Boundary of the prefix ending a middle weight class r, for
// n3 <= n1+n2-2 and n3-1 <= r <= n1+n2-3. Exact integer; the quarter terms
// always combine integrally.
int64_t boundary_at_peak_candidate(int64_t n1, int64_t n2, int64_t n3, int64_t r);

// Maximum of the above over all middle classes; must equal vbw_3d.
int64_t vbw_3d_peak_scan(int64_t n1, int64_t n2, int64_t n3);

// Width of the d-cube graph: sum over k < d of C(k, floor(k/2)).
int64_t vbw_hypercube(int64_t d);

// Torus analogue of the large-max-factor case, on sorted half dims
// n1 <= ... <= nd (cycle lengths 2*n_i): if n1+...+n_{d-1} <= n_d - 1 the
// width is 2^d * n1*...*n_{d-1}.
FormulaResult vbw_torus_large_max(const std::vector<int64_t>& half_dims);

// Conjectured width of the 4D cube grid: floor((8n^3 + 3n^2 + 4n) / 12).
// Never returned as an exact answer.
int64_t conjecture_4d(int64_t n);

// Dispatch: large max factor, then the 3D theorem, then the hypercube sum.
// Not applicable for anything else (use the sweep).
FormulaResult best_formula(const GridShape& s);

// Exact overflow-checked binomial coefficient.
int64_t binomial(int64_t n, int64_t k);

}  // namespace gridwidth
