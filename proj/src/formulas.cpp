#include "gridwidth/formulas.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gridwidth/checked.hpp"
#include "gridwidth/errors.hpp"

namespace gridwidth {

namespace {

void require_sorted_triple(int64_t n1, int64_t n2, int64_t n3) {
  if (!(2 <= n1 && n1 <= n2 && n2 <= n3))
    throw std::invalid_argument("expected factor sizes with 2 <= n1 <= n2 <= n3");
}

}  // namespace

const char* method_name(FormulaMethod m) {
  switch (m) {
    case FormulaMethod::LargeMaxFactor: return "LargeMaxFactor";
    case FormulaMethod::ThreeD: return "ThreeD";
    case FormulaMethod::Cubic: return "Cubic";
    case FormulaMethod::Hypercube: return "Hypercube";
    case FormulaMethod::TorusLargeMax: return "TorusLargeMax";
    case FormulaMethod::Conjecture4D: return "Conjecture4D";
    case FormulaMethod::PeakScan3D: return "PeakScan3D";
  }
  return "?";
}

FormulaResult vbw_large_max(const GridShape& s) {
  FormulaResult r;
  r.method = FormulaMethod::LargeMaxFactor;
  const auto& dims = s.dims();
  if (dims.empty()) {  // single vertex
    r.applicable = true;
    r.value = 0;
    return r;
  }
  const size_t d = dims.size();
  int64_t sum = 0;
  for (size_t i = 0; i + 1 < d; ++i) sum = checked_add(sum, dims[i] - 1);
  if (sum <= dims[d - 1]) {
    int64_t prod = 1;
    for (size_t i = 0; i + 1 < d; ++i) prod = checked_mul(prod, dims[i]);
    r.applicable = true;
    r.value = prod;
  } else {
    r.reason = "sum of (n_i - 1) over the smaller factors is " + std::to_string(sum) +
               ", more than the largest factor " + std::to_string(dims[d - 1]);
  }
  return r;
}

int64_t vbw_3d(int64_t n1, int64_t n2, int64_t n3) {
  require_sorted_triple(n1, n2, n3);
  const int64_t prod = checked_mul(n1, n2);
  const int64_t edge_sum = checked_add(n1, n2) - 2;
  if (edge_sum <= n3) {
    if (edge_sum == n3) {
      // Both branches must agree on the boundary case: the floor term is 0.
      const int64_t a = n1 + n2 - n3 - 1;
      if ((a * a) / 4 != 0)
        throw InvariantViolation("branch disagreement at n3 = n1+n2-2");
    }
    return prod;
  }
  const int64_t a = checked_sub(checked_add(n1, n2), checked_add(n3, 1));
  return checked_sub(prod, checked_mul(a, a) / 4);
}

int64_t vbw_cubic(int64_t n) {
  if (n < 2) throw std::invalid_argument("cube formula needs n >= 2");
  const int64_t t = checked_add(checked_mul(3, checked_mul(n, n)), checked_mul(2, n));
  return t / 4;
}

int64_t boundary_at_peak_candidate(int64_t n1, int64_t n2, int64_t n3, int64_t r) {
  require_sorted_triple(n1, n2, n3);
  if (checked_add(n1, n2) - 2 < n3)
    throw std::invalid_argument("peak candidates exist only when n3 <= n1+n2-2");
  if (r < n3 - 1 || r > n1 + n2 - 3)
    throw std::invalid_argument("peak candidate index r = " + std::to_string(r) +
                                " is outside [n3-1, n1+n2-3]");
  const int64_t a = checked_sub(checked_add(n1, n2), checked_add(n3, 1));
  const int64_t b =
      checked_add(checked_sub(checked_mul(2, r), checked_add(checked_add(n1, n2), n3)), 4);
  const int64_t num = checked_sub(
      checked_sub(checked_mul(4, checked_mul(n1, n2)), checked_sub(checked_mul(a, a), 1)),
      checked_mul(b, b));
  if (num % 4 != 0)
    throw InvariantViolation("quarter terms of the peak formula did not combine integrally");
  return num / 4;
}

int64_t vbw_3d_peak_scan(int64_t n1, int64_t n2, int64_t n3) {
  require_sorted_triple(n1, n2, n3);
  if (checked_add(n1, n2) - 2 < n3)
    throw std::invalid_argument("peak scan applies only when n3 <= n1+n2-2");
  int64_t best = std::numeric_limits<int64_t>::min();
  for (int64_t r = n3 - 1; r <= n1 + n2 - 3; ++r)
    best = std::max(best, boundary_at_peak_candidate(n1, n2, n3, r));
  // The scan peaks where the falling square term is smallest.
  const int64_t r_star = (n1 + n2 + n3 - 4) / 2;
  if (best != boundary_at_peak_candidate(n1, n2, n3, r_star))
    throw InvariantViolation("peak scan maximum missed the midpoint class");
  return best;
}

int64_t binomial(int64_t n, int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial needs 0 <= k <= n");
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<int64_t>::max()))
      throw std::overflow_error("binomial coefficient exceeds the 64-bit range");
  }
  return static_cast<int64_t>(r);
}

int64_t vbw_hypercube(int64_t d) {
  if (d < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
  int64_t sum = 0;
  for (int64_t k = 0; k < d; ++k) sum = checked_add(sum, binomial(k, k / 2));
  return sum;
}

FormulaResult vbw_torus_large_max(const std::vector<int64_t>& half_dims) {
  FormulaResult r;
  r.method = FormulaMethod::TorusLargeMax;
  if (half_dims.empty()) throw std::invalid_argument("torus needs at least one factor");
  for (size_t i = 0; i < half_dims.size(); ++i) {
    if (half_dims[i] < 2) throw std::invalid_argument("half dims must be >= 2");
    if (i && half_dims[i - 1] > half_dims[i])
      throw std::invalid_argument("half dims must be sorted ascending");
  }
  const size_t d = half_dims.size();
  int64_t sum = 0;
  for (size_t i = 0; i + 1 < d; ++i) sum = checked_add(sum, half_dims[i]);
  if (sum <= half_dims[d - 1] - 1) {
    if (d >= 63) throw std::overflow_error("2^d exceeds the 64-bit range");
    int64_t value = int64_t{1} << d;
    for (size_t i = 0; i + 1 < d; ++i) value = checked_mul(value, half_dims[i]);
    r.applicable = true;
    r.value = value;
  } else {
    r.reason = "sum of the smaller half dims is " + std::to_string(sum) +
               ", more than the largest half dim minus one (" +
               std::to_string(half_dims[d - 1] - 1) + ")";
  }
  return r;
}

int64_t conjecture_4d(int64_t n) {
  if (n < 2) throw std::invalid_argument("conjectured 4D formula needs n >= 2");
  const __int128 nn = n;
  const __int128 t = 8 * nn * nn * nn + 3 * nn * nn + 4 * nn;
  const __int128 q = t / 12;
  if (q > std::numeric_limits<int64_t>::max())
    throw std::overflow_error("conjectured 4D value exceeds the 64-bit range");
  return static_cast<int64_t>(q);
}

FormulaResult best_formula(const GridShape& s) {
  FormulaResult lm = vbw_large_max(s);
  if (lm.applicable) return lm;
  const auto& dims = s.dims();
  if (dims.size() == 3) {
    FormulaResult r;
    r.applicable = true;
    r.method = FormulaMethod::ThreeD;
    r.value = vbw_3d(dims[0], dims[1], dims[2]);
    return r;
  }
  if (std::all_of(dims.begin(), dims.end(), [](int64_t n) { return n == 2; })) {
    FormulaResult r;
    r.applicable = true;
    r.method = FormulaMethod::Hypercube;
    r.value = vbw_hypercube(static_cast<int64_t>(dims.size()));
    return r;
  }
  FormulaResult r;
  r.reason = "no exact closed form applies to shape " + s.to_string() + "; use the sweep";
  return r;
}

}  // namespace gridwidth
