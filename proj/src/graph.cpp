#include "gridwidth/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gridwidth {

void Graph::add_edge(uint64_t u, uint64_t v) {
  if (u >= n || v >= n)
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} has an endpoint outside 0.." + std::to_string(n ? n - 1 : 0));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto insert_sorted = [](std::vector<uint64_t>& list, uint64_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (!insert_sorted(adj[u], v))
    throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  insert_sorted(adj[v], u);
}

bool Graph::has_edge(uint64_t u, uint64_t v) const {
  if (u >= n || v >= n) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

uint64_t Graph::num_edges() const {
  uint64_t twice = 0;
  for (const auto& list : adj) twice += list.size();
  return twice / 2;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<uint64_t> stack{0};
  seen[0] = 1;
  uint64_t reached = 1;
  while (!stack.empty()) {
    uint64_t v = stack.back();
    stack.pop_back();
    for (uint64_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

}  // namespace gridwidth
