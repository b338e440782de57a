#include <doctest.h>

#include <sstream>

#include "gridwidth/errors.hpp"
#include "gridwidth/oracle.hpp"
#include "gridwidth/torus.hpp"

using namespace gridwidth;

TEST_CASE("factor graphs: paths and cycles") {
  const Graph p4 = factor_graph(FactorKind::path, 4);
  CHECK(p4.n == 4);
  CHECK(p4.num_edges() == 3);
  CHECK(p4.has_edge(0, 1));
  CHECK_FALSE(p4.has_edge(0, 3));

  const Graph c5 = factor_graph(FactorKind::cycle, 5);
  CHECK(c5.n == 5);
  CHECK(c5.num_edges() == 5);
  CHECK(c5.has_edge(0, 4));

  CHECK_THROWS_AS(factor_graph(FactorKind::path, 0), std::invalid_argument);
  CHECK_THROWS_AS(factor_graph(FactorKind::cycle, 2), std::invalid_argument);
}

TEST_CASE("cartesian products multiply vertices and share per-layer edges") {
  const Graph g = cartesian_product(factor_graph(FactorKind::path, 2),
                                    factor_graph(FactorKind::path, 3));
  CHECK(g.n == 6);
  CHECK(g.num_edges() == 7);  // 3 rungs + 2+2 rail edges
  for (uint64_t v = 0; v < g.n; ++v) CHECK(g.degree(v) >= 2);
  CHECK(g.connected());

  // the square of single edges is the 4-cycle
  const Graph square = cartesian_product(factor_graph(FactorKind::path, 2),
                                         factor_graph(FactorKind::path, 2));
  CHECK(square.n == 4);
  CHECK(square.num_edges() == 4);
  for (uint64_t v = 0; v < square.n; ++v) CHECK(square.degree(v) == 2);
}

TEST_CASE("grid and torus builders agree with the generic product") {
  const GridShape s = GridShape::from_dims({3, 3});
  const Graph direct = grid_graph(s);
  const Graph product = cartesian_product(factor_graph(FactorKind::path, 3),
                                          factor_graph(FactorKind::path, 3));
  CHECK(direct.n == product.n);
  CHECK(direct.num_edges() == product.num_edges());

  const Graph t = torus_graph({4, 6});
  CHECK(t.n == 24);
  CHECK(t.num_edges() == 48);  // 4-regular
}

TEST_CASE("boundary minima of small graphs") {
  CHECK(brute_phi(factor_graph(FactorKind::path, 4), 2) == 1);
  CHECK(brute_phi(factor_graph(FactorKind::cycle, 6), 3) == 2);
  // best 4-prefix of the 3-cube: a vertex with its three neighbors
  CHECK(brute_phi(grid_graph(GridShape::from_dims({2, 2, 2})), 4) == 3);

  const auto phi = brute_phi_all(factor_graph(FactorKind::path, 5));
  CHECK(phi == std::vector<int64_t>{0, 1, 1, 1, 1, 0});
}

TEST_CASE("brute widths of reference graphs") {
  CHECK(brute_vbw(factor_graph(FactorKind::path, 5)) == 1);
  CHECK(brute_vbw(factor_graph(FactorKind::cycle, 6)) == 2);
  CHECK(brute_vbw(grid_graph(GridShape::from_dims({2, 2, 2}))) == 4);
  CHECK(brute_vbw(torus_graph({4, 4})) == 7);

  CHECK(brute_bandwidth(factor_graph(FactorKind::path, 6)) == 1);
  CHECK(brute_bandwidth(factor_graph(FactorKind::cycle, 6)) == 2);
  CHECK(brute_bandwidth(grid_graph(GridShape::from_dims({3, 3}))) == 3);
  CHECK(brute_bandwidth(grid_graph(GridShape::from_dims({2, 2, 2}))) == 4);

  CHECK(brute_pathwidth(factor_graph(FactorKind::path, 6)) == 1);
  CHECK(brute_pathwidth(factor_graph(FactorKind::cycle, 6)) == 2);
  CHECK(brute_pathwidth(grid_graph(GridShape::from_dims({3, 3}))) == 3);
  CHECK(brute_pathwidth(grid_graph(GridShape::from_dims({2, 2, 3}))) == 4);
}

TEST_CASE("sandwich: boundary width <= pathwidth <= bandwidth") {
  std::vector<Graph> graphs;
  graphs.push_back(factor_graph(FactorKind::path, 7));
  graphs.push_back(factor_graph(FactorKind::cycle, 7));
  graphs.push_back(grid_graph(GridShape::from_dims({2, 5})));
  graphs.push_back(grid_graph(GridShape::from_dims({3, 3})));
  graphs.push_back(grid_graph(GridShape::from_dims({2, 2, 2})));
  graphs.push_back(cartesian_product(factor_graph(FactorKind::cycle, 3),
                                     factor_graph(FactorKind::path, 3)));
  graphs.push_back(cartesian_product(factor_graph(FactorKind::cycle, 5),
                                     factor_graph(FactorKind::path, 2)));
  for (const Graph& g : graphs) {
    const int64_t vbw = brute_vbw(g);
    const int64_t pw = brute_pathwidth(g);
    const int64_t bw = brute_bandwidth(g);
    CHECK(vbw <= pw);
    CHECK(pw <= bw);
  }
}

TEST_CASE("oracles refuse graphs beyond their size caps") {
  const Graph big_subset = grid_graph(GridShape::from_dims({5, 5}));  // 25 > 24
  CHECK_THROWS_AS(brute_phi_all(big_subset), ResourceLimitError);
  CHECK_THROWS_AS(brute_vbw(big_subset), ResourceLimitError);

  const Graph big_bw = factor_graph(FactorKind::path, 11);  // 11 > 10
  CHECK_THROWS_AS(brute_bandwidth(big_bw), ResourceLimitError);

  const Graph big_pw = factor_graph(FactorKind::path, 13);  // 13 > 12
  CHECK_THROWS_AS(brute_pathwidth(big_pw), ResourceLimitError);
}

TEST_CASE("width oracles insist on connectivity") {
  Graph g;
  g.n = 4;
  g.adj.assign(4, {});
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(g.connected());
  CHECK_THROWS_AS(brute_vbw(g), std::invalid_argument);
  CHECK_THROWS_AS(brute_bandwidth(g), std::invalid_argument);
  CHECK_THROWS_AS(brute_pathwidth(g), std::invalid_argument);
  // the boundary profile itself is still well defined
  CHECK(brute_phi(g, 2) == 0);
}

TEST_CASE("graph files round-trip") {
  const Graph g = torus_graph({4, 4});
  std::stringstream buf;
  write_graph_file(buf, g);
  const Graph back = read_graph_file(buf);
  CHECK(back.n == g.n);
  CHECK(back.num_edges() == g.num_edges());
  for (uint64_t v = 0; v < g.n; ++v) CHECK(back.adj[v] == g.adj[v]);

  std::stringstream bad("3 1\n0 3\n");
  CHECK_THROWS_AS(read_graph_file(bad), std::invalid_argument);
  std::stringstream trunc("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph_file(trunc), std::invalid_argument);
}

TEST_CASE("edge insertion rejects malformed edges") {
  Graph g;
  g.n = 3;
  g.adj.assign(3, {});
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);  // loop
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);  // out of range
}
