#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridwidth {

// Refusal to start a computation whose resource needs exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what, uint64_t required_bytes = 0,
                              uint64_t cap_bytes = 0)
      : std::runtime_error(what), required_bytes_(required_bytes), cap_bytes_(cap_bytes) {}

  uint64_t required_bytes() const { return required_bytes_; }
  uint64_t cap_bytes() const { return cap_bytes_; }

 private:
  uint64_t required_bytes_;
  uint64_t cap_bytes_;
};

// A property that is supposed to hold unconditionally failed at runtime.
// Signals a bug in this library, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gridwidth
