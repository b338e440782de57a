#include "gridwidth/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gridwidth {

GridShape GridShape::from_dims(const std::vector<int64_t>& user_dims) {
  if (user_dims.empty()) throw std::invalid_argument("shape needs at least one factor size");
  for (int64_t n : user_dims) {
    if (n < 1)
      throw std::invalid_argument("factor sizes must be >= 1, got " + std::to_string(n));
  }
  GridShape s;
  s.original_dims_ = user_dims;

  // Size-1 factors are product identities; drop them, sort the rest.
  std::vector<std::pair<int64_t, size_t>> kept;
  for (size_t i = 0; i < user_dims.size(); ++i) {
    if (user_dims[i] >= 2) kept.emplace_back(user_dims[i], i);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  s.dims_.reserve(kept.size());
  s.input_perm_.reserve(kept.size());
  for (const auto& [n, idx] : kept) {
    s.dims_.push_back(n);
    s.input_perm_.push_back(idx);
  }

  uint64_t count = 1;
  for (int64_t n : s.dims_) {
    if (__builtin_mul_overflow(count, static_cast<uint64_t>(n), &count))
      throw std::overflow_error("vertex count of shape " + s.to_string() +
                                " exceeds the 64-bit range");
  }
  s.num_vertices_ = count;

  s.strides_.assign(s.dims_.size(), 1);
  for (size_t a = s.dims_.size(); a-- > 1;)
    s.strides_[a - 1] = s.strides_[a] * static_cast<uint64_t>(s.dims_[a]);
  return s;
}

bool GridShape::contains(const Vertex& v) const {
  if (v.size() != dims_.size()) return false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= dims_[i]) return false;
  }
  return true;
}

void GridShape::require_vertex(const Vertex& v) const {
  if (v.size() != dims_.size())
    throw std::invalid_argument("vertex has " + std::to_string(v.size()) +
                                " coordinates but shape " + to_string() + " has " +
                                std::to_string(dims_.size()) + " axes");
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= dims_[i])
      throw std::invalid_argument("coordinate " + std::to_string(v[i]) + " on axis " +
                                  std::to_string(i) + " is outside shape " + to_string());
  }
}

std::vector<int64_t> GridShape::to_user_coords(const Vertex& v) const {
  require_vertex(v);
  std::vector<int64_t> user(original_dims_.size(), 0);
  for (size_t a = 0; a < v.size(); ++a) user[input_perm_[a]] = v[a];
  return user;
}

Vertex GridShape::from_user_coords(const std::vector<int64_t>& user) const {
  if (user.size() != original_dims_.size())
    throw std::invalid_argument("expected " + std::to_string(original_dims_.size()) +
                                " coordinates, got " + std::to_string(user.size()));
  for (size_t i = 0; i < user.size(); ++i) {
    if (user[i] < 0 || user[i] >= original_dims_[i])
      throw std::invalid_argument("coordinate " + std::to_string(user[i]) + " on input axis " +
                                  std::to_string(i) + " is outside its factor size " +
                                  std::to_string(original_dims_[i]));
  }
  Vertex v(dims_.size());
  for (size_t a = 0; a < dims_.size(); ++a) v[a] = user[input_perm_[a]];
  return v;
}

std::string GridShape::to_string() const {
  if (dims_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(dims_[i]);
  }
  return out;
}

int64_t weight(const Vertex& v) {
  return std::accumulate(v.begin(), v.end(), int64_t{0});
}

std::strong_ordering simplicial_cmp(const Vertex& u, const Vertex& v, const GridShape& s) {
  s.require_vertex(u);
  s.require_vertex(v);
  const int64_t wu = weight(u);
  const int64_t wv = weight(v);
  if (wu != wv) return wu <=> wv;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i])
      return u[i] > v[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Vertex first_simplicial_vertex(const GridShape& s) {
  return Vertex(s.dim(), 0);
}

bool advance_simplicial(Vertex& v, const GridShape& s) {
  const auto& dims = s.dims();
  const size_t d = dims.size();
  if (d == 0) return false;

  // Within a weight class the order is descending-lexicographic. The
  // successor of v is the closest tuple below it: find the rightmost
  // position p that can give one unit to its suffix (v[p] > 0 and the
  // suffix has spare capacity), decrement there, and refill the suffix
  // greedily from the left with the weight it now carries.
  int64_t suffix_weight = v[d - 1];
  int64_t suffix_cap = dims[d - 1] - 1;
  for (size_t p = d - 1; p-- > 0;) {
    if (v[p] > 0 && suffix_weight + 1 <= suffix_cap) {
      --v[p];
      int64_t rest = suffix_weight + 1;
      for (size_t i = p + 1; i < d; ++i) {
        v[i] = std::min<int64_t>(dims[i] - 1, rest);
        rest -= v[i];
      }
      return true;
    }
    suffix_weight += v[p];
    suffix_cap += dims[p] - 1;
  }

  // v closes its weight class; open the next one with its lex-largest tuple.
  const int64_t w = suffix_weight;   // now the full weight of v
  const int64_t max_w = suffix_cap;  // sum of (dims[i] - 1)
  if (w >= max_w) return false;
  int64_t rest = w + 1;
  for (size_t i = 0; i < d; ++i) {
    v[i] = std::min<int64_t>(dims[i] - 1, rest);
    rest -= v[i];
  }
  return true;
}

std::optional<Vertex> simplicial_successor(const Vertex& v, const GridShape& s) {
  s.require_vertex(v);
  Vertex next = v;
  if (!advance_simplicial(next, s)) return std::nullopt;
  return next;
}

std::vector<Vertex> neighbors(const Vertex& v, const GridShape& s) {
  s.require_vertex(v);
  const auto& dims = s.dims();
  std::vector<Vertex> out;
  out.reserve(2 * dims.size());
  for (size_t a = 0; a < dims.size(); ++a) {
    if (v[a] > 0) {
      out.push_back(v);
      --out.back()[a];
    }
    if (v[a] + 1 < dims[a]) {
      out.push_back(v);
      ++out.back()[a];
    }
  }
  return out;
}

uint64_t vertex_id(const Vertex& v, const GridShape& s) {
  s.require_vertex(v);
  const auto& strides = s.strides();
  uint64_t id = 0;
  for (size_t a = 0; a < v.size(); ++a) id += static_cast<uint64_t>(v[a]) * strides[a];
  return id;
}

Vertex id_vertex(uint64_t id, const GridShape& s) {
  if (id >= s.num_vertices())
    throw std::invalid_argument("vertex id " + std::to_string(id) + " is outside shape " +
                                s.to_string());
  const auto& strides = s.strides();
  Vertex v(s.dim());
  for (size_t a = 0; a < v.size(); ++a) {
    v[a] = static_cast<int64_t>(id / strides[a]);
    id %= strides[a];
  }
  return v;
}

}  // namespace gridwidth
