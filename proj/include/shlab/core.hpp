#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace shlab {

// Raised for malformed documents, broken lattice axioms, incompatible
// partitions, exceeded caps -- anything where the *data* is at fault.
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised by the term/identity parser; carries a byte offset.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Global element-count cap guarding products and enumerations.
// Overridable through the SHLAB_SIZE_CAP environment variable.
inline int global_size_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("SHLAB_SIZE_CAP")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 64;
  }();
  return cap;
}

}  // namespace shlab
