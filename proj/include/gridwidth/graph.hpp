#pragma once

#include <cstdint>
#include <vector>

namespace gridwidth {

// Simple undirected graph with sorted adjacency lists. labels optionally
// maps vertices back to product coordinates when the graph was built as a
// Cartesian product; it is empty otherwise.
struct Graph {
  uint64_t n = 0;
  std::vector<std::vector<uint64_t>> adj;
  std::vector<std::vector<int64_t>> labels;

  Graph() = default;
  explicit Graph(uint64_t n_vertices) : n(n_vertices), adj(n_vertices) {}

  void add_edge(uint64_t u, uint64_t v);
  bool has_edge(uint64_t u, uint64_t v) const;
  uint64_t num_edges() const;
  uint64_t degree(uint64_t v) const { return adj[v].size(); }
  bool connected() const;
};

}  // namespace gridwidth
