#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridwidth {

// A grid vertex: one 0-based coordinate per normalized axis.
using Vertex = std::vector<int64_t>;

// Factor sizes of a grid (product of paths), normalized: size-1 factors
// dropped, the rest sorted ascending. The permutation back to the user's
// axis order is kept so emitted vertices can be reported in input
// coordinates. An all-ones input denotes the single-vertex grid (dim() == 0).
class GridShape {
 public:
  static GridShape from_dims(const std::vector<int64_t>& user_dims);

  const std::vector<int64_t>& dims() const { return dims_; }
  size_t dim() const { return dims_.size(); }
  uint64_t num_vertices() const { return num_vertices_; }

  // strides()[a] = product of dims after axis a; vertex ids are
  // sum over a of coords[a] * strides()[a] (row-major, axis 0 most
  // significant).
  const std::vector<uint64_t>& strides() const { return strides_; }

  // input_perm()[a] = position of normalized axis a in the user's dim list.
  const std::vector<size_t>& input_perm() const { return input_perm_; }
  const std::vector<int64_t>& original_dims() const { return original_dims_; }

  bool contains(const Vertex& v) const;
  void require_vertex(const Vertex& v) const;

  // Coordinates in the user's original axis order; dropped size-1 axes read 0.
  std::vector<int64_t> to_user_coords(const Vertex& v) const;
  Vertex from_user_coords(const std::vector<int64_t>& user) const;

  std::string to_string() const;

 private:
  GridShape() = default;

  std::vector<int64_t> dims_;
  std::vector<int64_t> original_dims_;
  std::vector<size_t> input_perm_;
  std::vector<uint64_t> strides_;
  uint64_t num_vertices_ = 1;
};

int64_t weight(const Vertex& v);

// Simplicial order: ascending weight, ties broken anti-lexicographically
// (at the first differing axis the larger coordinate comes first). Prefixes
// of this order minimize the vertex boundary among sets of their size.
std::strong_ordering simplicial_cmp(const Vertex& u, const Vertex& v, const GridShape& s);

Vertex first_simplicial_vertex(const GridShape& s);

// Advances v to its simplicial successor in place; returns false once v is
// the last vertex. Starting from (0,...,0) this streams the whole order in
// O(d) amortized per step without materializing it.
bool advance_simplicial(Vertex& v, const GridShape& s);

std::optional<Vertex> simplicial_successor(const Vertex& v, const GridShape& s);

std::vector<Vertex> neighbors(const Vertex& v, const GridShape& s);

uint64_t vertex_id(const Vertex& v, const GridShape& s);
Vertex id_vertex(uint64_t id, const GridShape& s);

// Calls f(rank, id, v) for every vertex in simplicial order, rank = 1..N.
template <class F>
void for_each_simplicial(const GridShape& s, F&& f) {
  Vertex v = first_simplicial_vertex(s);
  uint64_t rank = 0;
  while (true) {
    ++rank;
    f(rank, vertex_id(v, s), static_cast<const Vertex&>(v));
    if (!advance_simplicial(v, s)) break;
  }
}

// Calls f(lo_id, hi_id) once per grid edge, where hi = lo + e_a for some
// axis a. Iterates vertices in id (row-major) order.
template <class F>
void for_each_grid_edge(const GridShape& s, F&& f) {
  const auto& dims = s.dims();
  const auto& strides = s.strides();
  const size_t d = dims.size();
  const uint64_t n = s.num_vertices();
  Vertex c(d, 0);
  for (uint64_t id = 0; id < n; ++id) {
    for (size_t a = 0; a < d; ++a) {
      if (c[a] + 1 < dims[a]) f(id, id + strides[a]);
    }
    for (size_t a = d; a-- > 0;) {  // odometer step
      if (++c[a] < dims[a]) break;
      c[a] = 0;
    }
  }
}

}  // namespace gridwidth
