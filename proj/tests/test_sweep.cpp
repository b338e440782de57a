#include <doctest.h>

#include <functional>
#include <sstream>

#include "gridwidth/bitset.hpp"
#include "gridwidth/errors.hpp"
#include "gridwidth/oracle.hpp"
#include "gridwidth/sweep.hpp"

using namespace gridwidth;

namespace {
SweepOptions checked_opts() {
  SweepOptions o;
  o.check_invariants = true;
  return o;
}
}  // namespace

TEST_CASE("tiny profiles by hand") {
  const BoundaryProfile p2 = sweep_profile(GridShape::from_dims({2}), checked_opts());
  CHECK(p2.values == std::vector<int64_t>{0, 1, 0});
  CHECK(p2.vbw == 1);
  CHECK(p2.argmax_k == 1);

  const BoundaryProfile cube = sweep_profile(GridShape::from_dims({2, 2, 2}), checked_opts());
  CHECK(cube.values == std::vector<int64_t>{0, 3, 4, 4, 3, 3, 2, 1, 0});
  CHECK(cube.vbw == 4);
  CHECK(cube.argmax_k == 2);

  const BoundaryProfile p33 = sweep_profile(GridShape::from_dims({3, 3}), checked_opts());
  CHECK(p33.values == std::vector<int64_t>{0, 2, 3, 3, 3, 3, 2, 2, 1, 0});
  CHECK(p33.vbw == 3);
  CHECK(p33.argmax_k == 2);
}

TEST_CASE("summary widths of reference shapes") {
  CHECK(vbw_sweep(GridShape::from_dims({2, 3, 3}), checked_opts()) == 6);
  CHECK(vbw_sweep(GridShape::from_dims({3, 3, 3}), checked_opts()) == 8);
  CHECK(vbw_sweep(GridShape::from_dims({3, 4, 4}), checked_opts()) == 11);
  CHECK(vbw_sweep(GridShape::from_dims({4, 4, 5}), checked_opts()) == 15);
  CHECK(vbw_sweep(GridShape::from_dims({4, 4, 6}), checked_opts()) == 16);
  CHECK(vbw_sweep(GridShape::from_dims({2, 2, 2, 2}), checked_opts()) == 7);
  CHECK(vbw_sweep(GridShape::from_dims({1}), checked_opts()) == 0);
}

TEST_CASE("profiles start and end at zero and move by at most the dimension") {
  for (const auto& dims : std::vector<std::vector<int64_t>>{
           {6}, {4, 7}, {2, 3, 4}, {3, 3, 3}, {2, 2, 2, 3}}) {
    const GridShape s = GridShape::from_dims(dims);
    const BoundaryProfile p = sweep_profile(s, checked_opts());
    REQUIRE(p.values.size() == s.num_vertices() + 1);
    CHECK(p.values.front() == 0);
    CHECK(p.values.back() == 0);
    const auto d = static_cast<int64_t>(s.dim());
    for (size_t k = 1; k < p.values.size(); ++k) {
      const int64_t delta = p.values[k] - p.values[k - 1];
      CHECK(delta <= d);
      CHECK(delta >= -d);
    }
    CHECK(p.values[p.argmax_k] == p.vbw);
    for (uint64_t k = 0; k < p.argmax_k; ++k) CHECK(p.values[k] < p.vbw);
  }
}

TEST_CASE("sweep prefixes are optimal: every shape up to 18 vertices matches the oracle") {
  // all sorted shapes with factors >= 2 and at most 18 vertices
  std::vector<std::vector<int64_t>> shapes;
  std::vector<int64_t> dims;
  const std::function<void(int64_t, int64_t)> rec = [&](int64_t product, int64_t lo) {
    if (!dims.empty()) shapes.push_back(dims);
    for (int64_t v = lo; v * product <= 18; ++v) {
      dims.push_back(v);
      rec(product * v, v);
      dims.pop_back();
    }
  };
  rec(1, 2);
  CHECK(shapes.size() == 35);

  for (const auto& shape : shapes) {
    const GridShape s = GridShape::from_dims(shape);
    const BoundaryProfile p = sweep_profile(s, checked_opts());
    const auto phi = brute_phi_all(grid_graph(s));
    REQUIRE(phi.size() == p.values.size());
    for (size_t k = 0; k < phi.size(); ++k) CHECK(phi[k] == p.values[k]);
  }
}

TEST_CASE("factor order does not matter") {
  const SweepSummary a = sweep_summary(GridShape::from_dims({4, 2, 3}), checked_opts());
  const SweepSummary b = sweep_summary(GridShape::from_dims({3, 4, 2}), checked_opts());
  const SweepSummary c = sweep_summary(GridShape::from_dims({2, 3, 4, 1, 1}), checked_opts());
  CHECK(a.vbw == b.vbw);
  CHECK(a.vbw == c.vbw);
  CHECK(a.argmax_k == b.argmax_k);
  CHECK(a.argmax_k == c.argmax_k);
}

TEST_CASE("memory caps are enforced with exact byte counts") {
  SweepOptions tight;
  tight.memory_cap = 8;
  try {
    vbw_sweep(GridShape::from_dims({9, 9, 9}), tight);
    FAIL("expected a resource refusal");
  } catch (const ResourceLimitError& e) {
    CHECK(e.required_bytes() == 2 * Bitset::bytes_needed(729));
    CHECK(e.cap_bytes() == 8);
  }

  // recording the profile costs (N+1) counters on top of the bitmaps
  SweepOptions medium;
  medium.memory_cap = 2 * Bitset::bytes_needed(729) + 100;
  CHECK_NOTHROW(vbw_sweep(GridShape::from_dims({9, 9, 9}), medium));
  try {
    sweep_profile(GridShape::from_dims({9, 9, 9}), medium);
    FAIL("expected a resource refusal");
  } catch (const ResourceLimitError& e) {
    CHECK(e.required_bytes() == 2 * Bitset::bytes_needed(729) + 730 * 8);
  }
}

TEST_CASE("profile csv thins long runs but keeps the peak and the tail") {
  const BoundaryProfile p = sweep_profile(GridShape::from_dims({3, 3, 3}), checked_opts());
  std::stringstream full_out;
  const uint64_t full_rows = write_profile_csv(full_out, p, true);
  CHECK(full_rows == 28);

  std::stringstream thin_out;
  const uint64_t thin_rows = write_profile_csv(thin_out, p, false, 10);
  CHECK(thin_rows <= 12);  // stride rows plus the protected peak and tail
  const std::string text = thin_out.str();
  CHECK(text.rfind("k,boundary\n", 0) == 0);
  const std::string peak_row =
      "\n" + std::to_string(p.argmax_k) + "," + std::to_string(p.vbw) + "\n";
  CHECK(text.find(peak_row) != std::string::npos);  // the peak row survives
  CHECK(text.find("\n27,0\n") != std::string::npos);  // the final row survives
}
