#include "gridwidth/certificates.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridwidth/bitset.hpp"
#include "gridwidth/checked.hpp"
#include "gridwidth/errors.hpp"

namespace gridwidth {

VertexOrdering emit_bandwidth_ordering(const GridShape& s, uint64_t memory_cap) {
  const uint64_t n = s.num_vertices();
  const uint64_t need = checked_mul_u(n, 8);
  if (need > memory_cap)
    throw ResourceLimitError("ordering of shape " + s.to_string() + " needs " +
                                 std::to_string(need) + " bytes but the memory cap is " +
                                 std::to_string(memory_cap) + " bytes",
                             need, memory_cap);
  VertexOrdering out{s, {}};
  out.order.reserve(n);
  for_each_simplicial(s, [&](uint64_t, uint64_t id, const Vertex&) { out.order.push_back(id); });
  return out;
}

namespace {

std::vector<uint64_t> rank_of(uint64_t n, const std::vector<uint64_t>& order) {
  if (order.size() != n)
    throw std::invalid_argument("ordering lists " + std::to_string(order.size()) +
                                " vertices but the graph has " + std::to_string(n));
  constexpr uint64_t kUnset = std::numeric_limits<uint64_t>::max();
  std::vector<uint64_t> rank(n, kUnset);
  for (uint64_t k = 0; k < order.size(); ++k) {
    const uint64_t id = order[k];
    if (id >= n)
      throw std::invalid_argument("ordering contains out-of-range vertex id " +
                                  std::to_string(id));
    if (rank[id] != kUnset)
      throw std::invalid_argument("ordering repeats vertex id " + std::to_string(id));
    rank[id] = k;
  }
  return rank;
}

int64_t stretch(const std::vector<uint64_t>& rank, uint64_t u, uint64_t v) {
  const uint64_t ru = rank[u];
  const uint64_t rv = rank[v];
  return static_cast<int64_t>(ru > rv ? ru - rv : rv - ru);
}

}  // namespace

int64_t ordering_bandwidth(const GridShape& s, const std::vector<uint64_t>& order) {
  const auto rank = rank_of(s.num_vertices(), order);
  int64_t bw = 0;
  for_each_grid_edge(s, [&](uint64_t u, uint64_t v) { bw = std::max(bw, stretch(rank, u, v)); });
  return bw;
}

int64_t ordering_bandwidth(const Graph& g, const std::vector<uint64_t>& order) {
  const auto rank = rank_of(g.n, order);
  int64_t bw = 0;
  for (uint64_t u = 0; u < g.n; ++u) {
    for (uint64_t v : g.adj[u]) {
      if (v > u) bw = std::max(bw, stretch(rank, u, v));
    }
  }
  return bw;
}

PathDecomposition emit_path_decomposition(const GridShape& s, uint64_t memory_cap) {
  const uint64_t n = s.num_vertices();
  const uint64_t need =
      checked_add_u(checked_mul_u(2, Bitset::bytes_needed(n)), checked_mul_u(n, 8));
  if (need > memory_cap)
    throw ResourceLimitError("decomposition of shape " + s.to_string() + " needs at least " +
                                 std::to_string(need) + " bytes but the memory cap is " +
                                 std::to_string(memory_cap) + " bytes",
                             need, memory_cap);

  const auto& dims = s.dims();
  const auto& strides = s.strides();
  const size_t d = dims.size();

  Bitset was_boundary(n);
  std::set<uint64_t> boundary;
  PathDecomposition pd;
  pd.bags.reserve(n);
  int64_t width = -1;

  for_each_simplicial(s, [&](uint64_t k, uint64_t id, const Vertex& v) {
    if (k > 1 && boundary.erase(id) != 1)
      throw InvariantViolation("added vertex was not a boundary vertex at step " +
                               std::to_string(k));
    for (size_t a = 0; a < d; ++a) {
      if (v[a] + 1 < dims[a]) {
        const uint64_t u = id + strides[a];
        if (boundary.insert(u).second) {
          // A vertex joins the boundary once, stays until its own rank, and
          // never returns; that is exactly the interval property of the bags.
          if (was_boundary.test(u))
            throw InvariantViolation("vertex " + std::to_string(u) +
                                     " re-entered the boundary");
          was_boundary.set(u);
        }
      }
    }
    std::vector<uint64_t> bag;
    bag.reserve(boundary.size() + 1);
    bool placed = false;
    for (uint64_t b : boundary) {
      if (!placed && id < b) {
        bag.push_back(id);
        placed = true;
      }
      bag.push_back(b);
    }
    if (!placed) bag.push_back(id);
    if (pd.bags.empty() || bag != pd.bags.back()) {
      width = std::max<int64_t>(width, static_cast<int64_t>(bag.size()) - 1);
      pd.bags.push_back(std::move(bag));
    }
  });

  pd.width = width;
  return pd;
}

namespace {

// Occurrence lists per vertex drive all three conditions: emptiness is a
// coverage gap, sorted intersection decides edge coverage without assuming
// contiguity, and a jump in a list is an interval break.
template <class EdgeFn>
DecompositionCheck verify_impl(uint64_t n, const PathDecomposition& pd, EdgeFn&& each_edge) {
  std::vector<std::vector<uint64_t>> bags = pd.bags;
  for (auto& bag : bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    for (uint64_t id : bag) {
      if (id >= n)
        throw std::invalid_argument("bag contains out-of-range vertex id " + std::to_string(id));
    }
  }

  std::vector<std::vector<uint64_t>> occ(n);
  for (uint64_t i = 0; i < bags.size(); ++i) {
    for (uint64_t id : bags[i]) occ[id].push_back(i);
  }

  DecompositionCheck res;

  for (uint64_t v = 0; v < n; ++v) {
    if (occ[v].empty()) {
      res.violated_condition = 1;
      res.witness_vertex = v;
      res.message = "vertex " + std::to_string(v) + " is in no bag";
      return res;
    }
  }

  bool edge_bad = false;
  uint64_t bad_u = 0;
  uint64_t bad_v = 0;
  each_edge([&](uint64_t u, uint64_t v) {
    if (edge_bad) return;
    const auto& a = occ[u];
    const auto& b = occ[v];
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return;
      if (a[i] < b[j])
        ++i;
      else
        ++j;
    }
    edge_bad = true;
    bad_u = u;
    bad_v = v;
  });
  if (edge_bad) {
    res.violated_condition = 2;
    res.witness_edge_u = bad_u;
    res.witness_edge_v = bad_v;
    res.message = "edge {" + std::to_string(bad_u) + "," + std::to_string(bad_v) +
                  "} is covered by no bag";
    return res;
  }

  for (uint64_t v = 0; v < n; ++v) {
    const auto& list = occ[v];
    for (size_t t = 0; t + 1 < list.size(); ++t) {
      if (list[t + 1] > list[t] + 1) {
        res.violated_condition = 3;
        res.witness_vertex = v;
        res.bag_i = list[t] + 1;
        res.bag_j = list[t] + 2;
        res.bag_k = list[t + 1] + 1;
        res.message = "vertex " + std::to_string(v) + " is in bags " + std::to_string(res.bag_i) +
                      " and " + std::to_string(res.bag_k) + " but not in bag " +
                      std::to_string(res.bag_j);
        return res;
      }
    }
  }

  res.ok = true;
  res.width = -1;
  for (const auto& bag : bags)
    res.width = std::max<int64_t>(res.width, static_cast<int64_t>(bag.size()) - 1);
  res.message = "valid, width " + std::to_string(res.width);
  return res;
}

}  // namespace

DecompositionCheck verify_path_decomposition(const GridShape& s, const PathDecomposition& pd) {
  return verify_impl(s.num_vertices(), pd,
                     [&](auto&& f) { for_each_grid_edge(s, std::forward<decltype(f)>(f)); });
}

DecompositionCheck verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  return verify_impl(g.n, pd, [&](auto&& f) {
    for (uint64_t u = 0; u < g.n; ++u) {
      for (uint64_t v : g.adj[u]) {
        if (v > u) f(u, v);
      }
    }
  });
}

void write_ordering(std::ostream& out, const VertexOrdering& o) {
  for (uint64_t k = 0; k < o.order.size(); ++k) {
    const auto user = o.shape.to_user_coords(id_vertex(o.order[k], o.shape));
    out << (k + 1) << '\t';
    for (size_t i = 0; i < user.size(); ++i) {
      if (i) out << ' ';
      out << user[i];
    }
    out << '\n';
  }
}

VertexOrdering read_ordering(std::istream& in, const GridShape& s) {
  const uint64_t n = s.num_vertices();
  VertexOrdering o{s, {}};
  o.order.reserve(n);
  std::string line;
  uint64_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    uint64_t rank = 0;
    if (!(ss >> rank) || rank != expected)
      throw std::invalid_argument("ordering file: expected rank " + std::to_string(expected) +
                                  " at line " + std::to_string(expected));
    std::vector<int64_t> user(s.original_dims().size());
    for (auto& c : user) {
      if (!(ss >> c))
        throw std::invalid_argument("ordering file: rank " + std::to_string(rank) + " lists " +
                                    "fewer coordinates than the shape has axes");
    }
    int64_t extra = 0;
    if (ss >> extra)
      throw std::invalid_argument("ordering file: rank " + std::to_string(rank) +
                                  " lists too many coordinates");
    o.order.push_back(vertex_id(s.from_user_coords(user), s));
    ++expected;
  }
  if (o.order.size() != n)
    throw std::invalid_argument("ordering file lists " + std::to_string(o.order.size()) +
                                " vertices but shape " + s.to_string() + " has " +
                                std::to_string(n));
  return o;
}

void write_decomposition(std::ostream& out, const PathDecomposition& pd) {
  for (uint64_t i = 0; i < pd.bags.size(); ++i) {
    out << (i + 1) << '\t';
    const auto& bag = pd.bags[i];
    for (size_t j = 0; j < bag.size(); ++j) {
      if (j) out << ' ';
      out << bag[j];
    }
    out << '\n';
  }
}

PathDecomposition read_decomposition(std::istream& in) {
  PathDecomposition pd;
  pd.width = -1;
  std::string line;
  uint64_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    uint64_t index = 0;
    if (!(ss >> index) || index != expected)
      throw std::invalid_argument("decomposition file: expected bag index " +
                                  std::to_string(expected) + " at line " +
                                  std::to_string(expected));
    std::vector<uint64_t> bag;
    uint64_t id = 0;
    while (ss >> id) bag.push_back(id);
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      throw std::invalid_argument("decomposition file: bag " + std::to_string(index) +
                                  " repeats a vertex id");
    pd.width = std::max<int64_t>(pd.width, static_cast<int64_t>(bag.size()) - 1);
    pd.bags.push_back(std::move(bag));
    ++expected;
  }
  return pd;
}

}  // namespace gridwidth
