#pragma once

#include <cstdint>
#include <vector>

namespace gridwidth {

// Flat bit array sized once at construction. The sweep keeps two of these
// (prefix membership, boundary membership), so 10^8-vertex shapes need only
// tens of megabytes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint64_t n) : n_(n), words_((n + 63) >> 6, 0) {}

  uint64_t size() const { return n_; }
  bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(uint64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  static uint64_t bytes_needed(uint64_t n) { return ((n + 63) >> 6) * 8; }

 private:
  uint64_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace gridwidth
