#include "gridwidth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gridwidth/checked.hpp"
#include "gridwidth/errors.hpp"

namespace gridwidth {

namespace {

void require_brute_size(const Graph& g, uint64_t cap, const char* what) {
  if (g.n == 0) throw std::invalid_argument("graph has no vertices");
  if (g.n > cap)
    throw ResourceLimitError(std::string(what) + " is capped at " + std::to_string(cap) +
                             " vertices; graph has " + std::to_string(g.n));
}

void require_connected(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("width computations need a connected graph");
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> mask(g.n, 0);
  for (uint64_t v = 0; v < g.n; ++v) {
    for (uint64_t u : g.adj[v]) mask[v] |= uint32_t{1} << u;
  }
  return mask;
}

}  // namespace

Graph factor_graph(FactorKind kind, int64_t n) {
  if (kind == FactorKind::path) {
    if (n < 2) throw std::invalid_argument("a path factor needs at least 2 vertices");
    Graph g(static_cast<uint64_t>(n));
    for (int64_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (n < 3) throw std::invalid_argument("a cycle factor needs at least 3 vertices");
  Graph g(static_cast<uint64_t>(n));
  for (int64_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.n == 0 || h.n == 0) throw std::invalid_argument("product factors must be non-empty");
  const uint64_t n = checked_mul_u(g.n, h.n);
  Graph p(n);

  auto label_of = [](const Graph& f, uint64_t i) {
    return f.labels.empty() ? std::vector<int64_t>{static_cast<int64_t>(i)} : f.labels[i];
  };
  p.labels.reserve(n);
  for (uint64_t i = 0; i < g.n; ++i) {
    const auto li = label_of(g, i);
    for (uint64_t j = 0; j < h.n; ++j) {
      auto lab = li;
      const auto lj = label_of(h, j);
      lab.insert(lab.end(), lj.begin(), lj.end());
      p.labels.push_back(std::move(lab));
    }
  }

  for (uint64_t u = 0; u < g.n; ++u) {
    for (uint64_t v : g.adj[u]) {
      if (v <= u) continue;
      for (uint64_t j = 0; j < h.n; ++j) p.add_edge(u * h.n + j, v * h.n + j);
    }
  }
  for (uint64_t u = 0; u < h.n; ++u) {
    for (uint64_t v : h.adj[u]) {
      if (v <= u) continue;
      for (uint64_t i = 0; i < g.n; ++i) p.add_edge(i * h.n + u, i * h.n + v);
    }
  }
  return p;
}

Graph grid_graph(const GridShape& s) {
  Graph g(s.num_vertices());
  for_each_grid_edge(s, [&](uint64_t u, uint64_t v) { g.add_edge(u, v); });
  g.labels.reserve(g.n);
  for (uint64_t id = 0; id < g.n; ++id) g.labels.push_back(id_vertex(id, s));
  return g;
}

Graph torus_graph(const std::vector<int64_t>& cycle_lengths) {
  if (cycle_lengths.empty()) throw std::invalid_argument("torus needs at least one cycle length");
  Graph g = factor_graph(FactorKind::cycle, cycle_lengths[0]);
  for (size_t i = 1; i < cycle_lengths.size(); ++i)
    g = cartesian_product(g, factor_graph(FactorKind::cycle, cycle_lengths[i]));
  return g;
}

std::vector<int64_t> brute_phi_all(const Graph& g) {
  require_brute_size(g, kMaxSubsetVertices, "the subset oracle");
  const unsigned n = static_cast<unsigned>(g.n);

  std::vector<int64_t> best(n + 1, std::numeric_limits<int64_t>::max());
  best[0] = 0;

  // Gray-code walk: step t flips vertex countr_zero(t), so the boundary
  // counter can be maintained incrementally. cnt[u] = neighbors of u inside
  // the current set; u is a boundary vertex iff u is outside and cnt[u] > 0.
  std::vector<uint8_t> cnt(n, 0);
  uint32_t in_set = 0;
  int64_t boundary = 0;
  int popcnt = 0;
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t t = 1; t < total; ++t) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(t));
    const uint32_t bit = uint32_t{1} << b;
    if (!(in_set & bit)) {
      if (cnt[b] > 0) --boundary;  // b stops being a boundary vertex
      in_set |= bit;
      ++popcnt;
      for (uint64_t u : g.adj[b]) {
        if (++cnt[u] == 1 && !(in_set & (uint32_t{1} << u))) ++boundary;
      }
    } else {
      in_set &= ~bit;
      --popcnt;
      for (uint64_t u : g.adj[b]) {
        if (--cnt[u] == 0 && !(in_set & (uint32_t{1} << u))) --boundary;
      }
      if (cnt[b] > 0) ++boundary;  // b re-enters the boundary
    }
    if (boundary < best[popcnt]) best[popcnt] = boundary;
  }
  return best;
}

int64_t brute_phi(const Graph& g, uint64_t k) {
  require_brute_size(g, kMaxSubsetVertices, "the subset oracle");
  if (k < 1 || k > g.n)
    throw std::invalid_argument("k must be between 1 and " + std::to_string(g.n));
  return brute_phi_all(g)[k];
}

int64_t brute_vbw(const Graph& g) {
  require_brute_size(g, kMaxSubsetVertices, "the subset oracle");
  require_connected(g);
  const auto phi = brute_phi_all(g);
  int64_t best = 0;
  for (uint64_t k = 1; k <= g.n; ++k) best = std::max(best, phi[k]);
  return best;
}

namespace {

struct BandwidthSearch {
  const Graph& g;
  std::vector<int> pos;
  int n;
  int64_t best;

  explicit BandwidthSearch(const Graph& graph)
      : g(graph), pos(graph.n, -1), n(static_cast<int>(graph.n)), best(n - 1) {}

  void rec(int depth, int64_t cur_max) {
    if (cur_max >= best) return;
    if (depth == n) {
      best = cur_max;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      int64_t m = cur_max;
      for (uint64_t u : g.adj[v]) {
        if (pos[u] >= 0) m = std::max<int64_t>(m, depth - pos[u]);
      }
      if (m >= best) continue;
      pos[v] = depth;
      rec(depth + 1, m);
      pos[v] = -1;
    }
  }
};

}  // namespace

int64_t brute_bandwidth(const Graph& g) {
  require_brute_size(g, kMaxBandwidthVertices, "the bandwidth oracle");
  require_connected(g);
  if (g.n == 1) return 0;
  BandwidthSearch search(g);
  search.rec(0, 0);
  return search.best;
}

int64_t brute_pathwidth(const Graph& g) {
  require_brute_size(g, kMaxPathwidthVertices, "the pathwidth oracle");
  require_connected(g);
  const unsigned n = static_cast<unsigned>(g.n);
  const auto mask = adjacency_masks(g);
  const uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

  // Vertex separation DP: dp[S] = best over orderings that place S first of
  // the worst prefix cost, cost(S) = vertices of S with a neighbor outside.
  // Vertex separation equals pathwidth.
  std::vector<int8_t> dp(uint64_t{1} << n, 0);
  for (uint32_t set = 1;; ++set) {
    int cost = 0;
    for (uint32_t rest = set; rest;) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
      rest &= rest - 1;
      if (mask[v] & ~set) ++cost;
    }
    int prev = INT_MAX;
    for (uint32_t rest = set; rest;) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
      rest &= rest - 1;
      prev = std::min<int>(prev, dp[set & ~(uint32_t{1} << v)]);
    }
    dp[set] = static_cast<int8_t>(std::max(cost, prev));
    if (set == full) break;
  }
  return dp[full];
}

Graph read_graph_file(std::istream& in) {
  uint64_t n = 0;
  uint64_t m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("graph file must start with \"n m\"");
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  Graph g(n);
  for (uint64_t i = 0; i < m; ++i) {
    uint64_t u = 0;
    uint64_t v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("graph file ends after " + std::to_string(i) + " of " +
                                  std::to_string(m) + " edges");
    g.add_edge(u, v);
  }
  return g;
}

void write_graph_file(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.num_edges() << '\n';
  for (uint64_t u = 0; u < g.n; ++u) {
    for (uint64_t v : g.adj[u]) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace gridwidth
