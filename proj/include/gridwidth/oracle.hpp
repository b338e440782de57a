#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gridwidth/graph.hpp"
#include "gridwidth/grid.hpp"

// Exhaustive reference computations on small graphs. These are deliberately
// independent of the grid machinery: the fast paths are tested against them.

namespace gridwidth {

enum class FactorKind { path, cycle };

// Hard caps; past these the oracles refuse instead of running open-ended
// searches.
inline constexpr uint64_t kMaxSubsetVertices = 24;     // 2^n subset sweep
inline constexpr uint64_t kMaxBandwidthVertices = 10;  // ordering search
inline constexpr uint64_t kMaxPathwidthVertices = 12;  // subset DP

Graph factor_graph(FactorKind kind, int64_t n);
Graph cartesian_product(const Graph& g, const Graph& h);

// Grid as a Graph, vertex ids matching vertex_id() of the shape.
Graph grid_graph(const GridShape& s);
// Product of cycles C_{L1} x ... x C_{Lk}.
Graph torus_graph(const std::vector<int64_t>& cycle_lengths);

// phi[k] = min over all k-subsets S of |boundary(S)|, for k = 0..n.
// One Gray-code pass over all 2^n subsets with an incremental boundary
// counter, so n = 24 stays tractable.
std::vector<int64_t> brute_phi_all(const Graph& g);
int64_t brute_phi(const Graph& g, uint64_t k);
int64_t brute_vbw(const Graph& g);
int64_t brute_bandwidth(const Graph& g);
int64_t brute_pathwidth(const Graph& g);

// Text format: first line "n m", then m lines "u v" (0-based ids).
Graph read_graph_file(std::istream& in);
void write_graph_file(std::ostream& out, const Graph& g);

}  // namespace gridwidth
