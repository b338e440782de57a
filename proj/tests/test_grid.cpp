#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "gridwidth/grid.hpp"

using namespace gridwidth;

TEST_CASE("shape normalization sorts factors and drops trivial ones") {
  const GridShape s = GridShape::from_dims({20, 1, 5, 9});
  CHECK(s.dims() == std::vector<int64_t>{5, 9, 20});
  CHECK(s.original_dims() == std::vector<int64_t>{20, 1, 5, 9});
  CHECK(s.dim() == 3);
  CHECK(s.num_vertices() == 900);

  const GridShape point = GridShape::from_dims({1, 1});
  CHECK(point.dim() == 0);
  CHECK(point.num_vertices() == 1);

  CHECK_THROWS_AS(GridShape::from_dims({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GridShape::from_dims({-2}), std::invalid_argument);
  CHECK_THROWS_AS(GridShape::from_dims({}), std::invalid_argument);
}

TEST_CASE("user coordinates round-trip through the normalized axes") {
  const GridShape s = GridShape::from_dims({20, 1, 5, 9});
  const std::vector<int64_t> user{7, 0, 2, 4};
  const Vertex internal = s.from_user_coords(user);
  CHECK(s.contains(internal));
  CHECK(s.to_user_coords(internal) == user);

  CHECK_THROWS_AS(s.from_user_coords({7, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(s.from_user_coords({7, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("simplicial order of the 2x3x3 grid, all 18 steps") {
  const GridShape s = GridShape::from_dims({2, 3, 3});
  const std::vector<Vertex> want = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2},
      {0, 2, 1}, {0, 1, 2}, {1, 2, 1}, {1, 1, 2}, {0, 2, 2}, {1, 2, 2},
  };
  std::vector<Vertex> got;
  Vertex v = first_simplicial_vertex(s);
  got.push_back(v);
  while (advance_simplicial(v, s)) got.push_back(v);
  CHECK(got == want);
}

TEST_CASE("successor handles weight-class openings and the last vertex") {
  const GridShape s = GridShape::from_dims({2, 3, 3});
  CHECK(simplicial_successor({0, 0, 1}, s) == Vertex{1, 1, 0});
  CHECK(simplicial_successor({0, 0, 2}, s) == Vertex{1, 2, 0});
  CHECK(simplicial_successor({1, 0, 2}, s) == Vertex{0, 2, 1});
  CHECK(simplicial_successor({0, 2, 2}, s) == Vertex{1, 2, 2});
  CHECK_FALSE(simplicial_successor({1, 2, 2}, s).has_value());

  const GridShape path = GridShape::from_dims({4});
  CHECK(simplicial_successor({0}, path) == Vertex{1});
  CHECK(simplicial_successor({2}, path) == Vertex{3});
  CHECK_FALSE(simplicial_successor({3}, path).has_value());
}

TEST_CASE("order comparisons: weight first, then larger-first at the first split") {
  const GridShape s = GridShape::from_dims({2, 3, 3});
  CHECK(simplicial_cmp({1, 0, 0}, {0, 1, 0}, s) == std::strong_ordering::less);
  CHECK(simplicial_cmp({1, 1, 1}, {1, 0, 2}, s) == std::strong_ordering::less);
  CHECK(simplicial_cmp({0, 2, 0}, {1, 0, 1}, s) == std::strong_ordering::greater);
  CHECK(simplicial_cmp({1, 1, 0}, {1, 1, 0}, s) == std::strong_ordering::equal);
  CHECK(simplicial_cmp({0, 0, 0}, {1, 2, 2}, s) == std::strong_ordering::less);
}

TEST_CASE("enumeration visits every vertex exactly once, in order") {
  for (const auto& dims : std::vector<std::vector<int64_t>>{
           {7}, {4, 5}, {2, 3, 3}, {3, 3, 3}, {2, 2, 2, 2}, {2, 2, 3, 4}}) {
    const GridShape s = GridShape::from_dims(dims);
    std::set<uint64_t> seen;
    Vertex prev;
    uint64_t count = 0;
    for_each_simplicial(s, [&](uint64_t k, uint64_t id, const Vertex& v) {
      CHECK(k == count + 1);
      CHECK(id == vertex_id(v, s));
      CHECK(id_vertex(id, s) == v);
      CHECK(seen.insert(id).second);
      if (count > 0) CHECK(simplicial_cmp(prev, v, s) == std::strong_ordering::less);
      prev = v;
      ++count;
    });
    CHECK(count == s.num_vertices());
  }
}

TEST_CASE("vertex ids are mixed-radix, most significant axis first") {
  const GridShape s = GridShape::from_dims({2, 3, 3});
  CHECK(vertex_id({0, 0, 0}, s) == 0);
  CHECK(vertex_id({0, 1, 2}, s) == 5);
  CHECK(vertex_id({1, 2, 2}, s) == 17);
  CHECK(id_vertex(5, s) == Vertex{0, 1, 2});
  CHECK_THROWS_AS(vertex_id({2, 0, 0}, s), std::invalid_argument);
  CHECK_THROWS_AS(id_vertex(18, s), std::invalid_argument);
}

TEST_CASE("neighbors are the unit steps that stay inside") {
  const GridShape s = GridShape::from_dims({2, 3, 3});
  const auto corner = neighbors({0, 0, 0}, s);
  CHECK(corner == std::vector<Vertex>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto mid = neighbors({1, 1, 1}, s);
  CHECK(mid == std::vector<Vertex>{{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {1, 1, 0}, {1, 1, 2}});
  CHECK_THROWS_AS(neighbors({0, 3, 0}, s), std::invalid_argument);
}

TEST_CASE("edge iteration lists each edge once with both ends valid") {
  const GridShape s = GridShape::from_dims({3, 4});
  std::set<std::pair<uint64_t, uint64_t>> edges;
  for_each_grid_edge(s, [&](uint64_t lo, uint64_t hi) {
    CHECK(lo < hi);
    CHECK(hi < s.num_vertices());
    CHECK(edges.emplace(lo, hi).second);
  });
  // 3x4 grid: 2*4 vertical + 3*3 horizontal
  CHECK(edges.size() == 17);
}

TEST_CASE("random pairs: the comparison is a strict weak order consistent with ranks") {
  const GridShape s = GridShape::from_dims({3, 4, 5});
  std::vector<Vertex> by_rank;
  for_each_simplicial(s, [&](uint64_t, uint64_t, const Vertex& v) { by_rank.push_back(v); });

  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<size_t> pick(0, by_rank.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    const size_t i = pick(rng), j = pick(rng);
    const auto cmp = simplicial_cmp(by_rank[i], by_rank[j], s);
    if (i < j) CHECK(cmp == std::strong_ordering::less);
    if (i == j) CHECK(cmp == std::strong_ordering::equal);
    if (i > j) CHECK(cmp == std::strong_ordering::greater);
  }
}

TEST_CASE("every edge joins consecutive weight classes") {
  const GridShape s = GridShape::from_dims({3, 3, 4});
  for_each_grid_edge(s, [&](uint64_t lo, uint64_t hi) {
    const Vertex u = id_vertex(lo, s);
    const Vertex v = id_vertex(hi, s);
    CHECK(std::abs(weight(u) - weight(v)) == 1);
    // the earlier vertex in the order is the lighter one
    const auto cmp = simplicial_cmp(u, v, s);
    if (weight(u) < weight(v)) CHECK(cmp == std::strong_ordering::less);
    if (weight(u) > weight(v)) CHECK(cmp == std::strong_ordering::greater);
  });
}

TEST_CASE("adjacent ranks differ in weight by at most one edge step") {
  const GridShape s = GridShape::from_dims({2, 3, 4});
  Vertex v = first_simplicial_vertex(s);
  Vertex prev = v;
  while (advance_simplicial(v, s)) {
    CHECK(weight(v) >= weight(prev));
    CHECK(weight(v) <= weight(prev) + 1);
    prev = v;
  }
}
