#include "gridwidth/sweep.hpp"

#include <ostream>
#include <string>

#include "gridwidth/bitset.hpp"
#include "gridwidth/checked.hpp"
#include "gridwidth/errors.hpp"

namespace gridwidth {

namespace {

// One pass over the simplicial order maintaining prefix and boundary
// bitmaps. Adding vertex v removes v from the boundary and inserts the
// not-yet-added neighbors of v that are not boundary members already. Only
// the +e_a neighbors can be new: the -e_a ones have smaller weight and are
// in the prefix.
SweepSummary run_sweep(const GridShape& s, const SweepOptions& opts,
                       std::vector<int64_t>* record) {
  const uint64_t n = s.num_vertices();
  uint64_t need = checked_mul_u(2, Bitset::bytes_needed(n));
  if (record) need = checked_add_u(need, checked_mul_u(checked_add_u(n, 1), 8));
  if (need > opts.memory_cap)
    throw ResourceLimitError("sweep of shape " + s.to_string() + " needs " +
                                 std::to_string(need) + " bytes but the memory cap is " +
                                 std::to_string(opts.memory_cap) + " bytes",
                             need, opts.memory_cap);

  Bitset in_prefix(n);
  Bitset in_boundary(n);
  if (record) {
    record->clear();
    record->reserve(n + 1);
    record->push_back(0);
  }

  const auto& dims = s.dims();
  const auto& strides = s.strides();
  const size_t d = dims.size();
  const bool check = opts.check_invariants;
  const bool check3d = check && d == 3;

  int64_t boundary = 0;
  int64_t prev = 0;
  int64_t best = 0;
  uint64_t best_k = 1;

  Vertex v = first_simplicial_vertex(s);
  for (uint64_t k = 1;; ++k) {
    uint64_t id = 0;
    for (size_t a = 0; a < d; ++a) id += static_cast<uint64_t>(v[a]) * strides[a];

    int64_t removed = 0;
    if (in_boundary.test(id)) {
      in_boundary.reset(id);
      --boundary;
      removed = 1;
    } else if (check && k > 1) {
      // Every vertex after the first has a smaller-weight neighbor, so it
      // must sit on the previous prefix boundary.
      throw InvariantViolation("step " + std::to_string(k) +
                               ": added vertex was not a boundary vertex");
    }
    in_prefix.set(id);

    int64_t added = 0;
    for (size_t a = 0; a < d; ++a) {
      if (v[a] + 1 < dims[a]) {
        const uint64_t u = id + strides[a];
        if (check && in_prefix.test(u))
          throw InvariantViolation("step " + std::to_string(k) +
                                   ": a heavier neighbor was already in the prefix");
        if (!in_boundary.test(u)) {
          in_boundary.set(u);
          ++boundary;
          ++added;
        }
      }
    }

    if (check) {
      if (k > 1 && boundary != prev + added - removed)
        throw InvariantViolation("step identity violated at k = " + std::to_string(k));
      const int64_t delta = boundary - prev;
      if (delta > static_cast<int64_t>(d) || delta < -1)
        throw InvariantViolation("per-step boundary change out of range at k = " +
                                 std::to_string(k));
    }

    if (check3d) {
      const int64_t n1 = dims[0];
      const int64_t n2 = dims[1];
      const int64_t n3 = dims[2];
      const int64_t w = v[0] + v[1] + v[2];
      if (w < n3 - 1 && boundary < prev)
        throw InvariantViolation("profile decreased below weight n3-1 at k = " +
                                 std::to_string(k));
      if (w >= n1 + n2 - 2 && boundary > prev)
        throw InvariantViolation("profile increased at weight >= n1+n2-2 at k = " +
                                 std::to_string(k));
      if (w >= n3 - 1 && w < n1 + n2 - 2) {
        // Inside a middle weight class the profile rises up to the class
        // peak (w-n2+2, n2-2, 0) and falls after it.
        const int64_t p0 = w - n2 + 2;
        bool at_or_before_peak;
        if (v[0] != p0) {
          at_or_before_peak = v[0] > p0;
        } else if (v[1] != n2 - 2) {
          at_or_before_peak = v[1] > n2 - 2;
        } else {
          at_or_before_peak = true;  // third coordinate is forced to 0
        }
        if (at_or_before_peak && boundary < prev)
          throw InvariantViolation("profile decreased before a class peak at k = " +
                                   std::to_string(k));
        if (!at_or_before_peak && boundary > prev)
          throw InvariantViolation("profile increased after a class peak at k = " +
                                   std::to_string(k));
      }
    }

    if (record) record->push_back(boundary);
    if (boundary > best) {
      best = boundary;
      best_k = k;
    }
    prev = boundary;
    if (!advance_simplicial(v, s)) break;
  }

  if (check && boundary != 0)
    throw InvariantViolation("boundary not empty after the final vertex");

  return SweepSummary{best, best_k, n};
}

}  // namespace

BoundaryProfile sweep_profile(const GridShape& s, const SweepOptions& opts) {
  BoundaryProfile p{s, {}, 0, 0};
  const SweepSummary sum = run_sweep(s, opts, &p.values);
  p.vbw = sum.vbw;
  p.argmax_k = sum.argmax_k;
  return p;
}

SweepSummary sweep_summary(const GridShape& s, const SweepOptions& opts) {
  return run_sweep(s, opts, nullptr);
}

int64_t vbw_sweep(const GridShape& s, const SweepOptions& opts) {
  return run_sweep(s, opts, nullptr).vbw;
}

uint64_t write_profile_csv(std::ostream& out, const BoundaryProfile& p, bool full,
                           uint64_t max_rows) {
  out << "k,boundary\n";
  const uint64_t entries = p.values.size();
  uint64_t stride = 1;
  if (!full && max_rows > 0 && entries > max_rows) stride = (entries + max_rows - 1) / max_rows;
  uint64_t rows = 0;
  for (uint64_t k = 0; k < entries; ++k) {
    if (stride == 1 || k % stride == 0 || k == p.argmax_k || k + 1 == entries) {
      out << k << ',' << p.values[k] << '\n';
      ++rows;
    }
  }
  return rows;
}

}  // namespace gridwidth
