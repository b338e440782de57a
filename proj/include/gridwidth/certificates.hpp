#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridwidth/graph.hpp"
#include "gridwidth/grid.hpp"
#include "gridwidth/sweep.hpp"

// Checkable witnesses that the computed width is achieved: a vertex ordering
// whose bandwidth matches, and a path decomposition of matching width. For
// grids both come from the simplicial order.

namespace gridwidth {

struct VertexOrdering {
  GridShape shape;
  std::vector<uint64_t> order;  // order[k-1] = vertex id at rank k
};

struct PathDecomposition {
  std::vector<std::vector<uint64_t>> bags;  // each sorted ascending
  int64_t width = 0;                        // max bag size - 1
};

// The simplicial order as an explicit ordering. Materializes N ids.
VertexOrdering emit_bandwidth_ordering(const GridShape& s,
                                       uint64_t memory_cap = kDefaultMemoryCap);

// Max edge stretch |rank(u) - rank(v)| of an ordering; rejects
// non-bijective input naming the offending id.
int64_t ordering_bandwidth(const GridShape& s, const std::vector<uint64_t>& order);
int64_t ordering_bandwidth(const Graph& g, const std::vector<uint64_t>& order);

// Bag k is the k-th vertex plus the boundary of the k-th prefix; consecutive
// duplicate bags are dropped. Width equals the sweep's vbw.
PathDecomposition emit_path_decomposition(const GridShape& s,
                                          uint64_t memory_cap = kDefaultMemoryCap);

struct DecompositionCheck {
  bool ok = false;
  int64_t width = -1;          // set when ok
  int violated_condition = 0;  // 1 vertices, 2 edges, 3 intervals
  uint64_t witness_vertex = 0;
  uint64_t witness_edge_u = 0;
  uint64_t witness_edge_v = 0;
  // 1-based bag indices i < j < k with the vertex present, absent, present.
  size_t bag_i = 0, bag_j = 0, bag_k = 0;
  std::string message;
};

// Checks vertex coverage, edge coverage, and the interval property, in that
// order; reports the first violated condition with a witness.
DecompositionCheck verify_path_decomposition(const GridShape& s, const PathDecomposition& pd);
DecompositionCheck verify_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Line k: "k<TAB>c1 c2 ... cd", 1-based ranks, user axis order.
void write_ordering(std::ostream& out, const VertexOrdering& o);
VertexOrdering read_ordering(std::istream& in, const GridShape& s);

// Line i: "i<TAB>id1 id2 ... idm", 1-based bag indices, ids ascending.
void write_decomposition(std::ostream& out, const PathDecomposition& pd);
PathDecomposition read_decomposition(std::istream& in);

}  // namespace gridwidth
