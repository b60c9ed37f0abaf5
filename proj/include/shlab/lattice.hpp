#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shlab/core.hpp"

namespace shlab {

// A bounded distributive lattice on the universe {0, ..., size-1}, given by
// explicit meet/join tables.  Validation is exhaustive and runs once, in the
// constructor; instances are immutable afterwards.
class Lattice {
public:
  Lattice(int size, int zero, int one, std::vector<int> meet,
          std::vector<int> join)
      : size_(size), zero_(zero), one_(one), meet_(std::move(meet)),
        join_(std::move(join)) {
    validate();
  }

  int size() const { return size_; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  int meet(int x, int y) const { return meet_[x * size_ + y]; }
  int join(int x, int y) const { return join_[x * size_ + y]; }
  bool leq(int x, int y) const { return meet(x, y) == x; }

  const std::vector<int>& meet_table() const { return meet_; }
  const std::vector<int>& join_table() const { return join_; }

  bool is_chain() const {
    for (int x = 0; x < size_; ++x)
      for (int y = x + 1; y < size_; ++y)
        if (!leq(x, y) && !leq(y, x)) return false;
    return true;
  }

  // Length (number of edges) of a longest chain from bottom to top.
  int height() const {
    std::vector<int> h(size_, 0);
    // elements sorted by number of elements below them gives a linear
    // extension, so one pass suffices
    std::vector<int> order = linear_extension();
    for (int x : order)
      for (int y : order)
        if (y != x && leq(y, x) && h[y] + 1 > h[x]) h[x] = h[y] + 1;
    return h[one_];
  }

  // x is join-irreducible if x = a|b forces x = a or x = b.
  bool join_irreducible(int x) const {
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        if (join(a, b) == x && a != x && b != x) return false;
    return true;
  }

  // The n-element chain 0 < 1 < ... < n-1.
  static Lattice chain(int n) {
    if (n < 1) throw validation_error("chain size must be positive");
    std::vector<int> meet(n * n), join(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        meet[x * n + y] = x < y ? x : y;
        join[x * n + y] = x < y ? y : x;
      }
    return Lattice(n, 0, n - 1, std::move(meet), std::move(join));
  }

  // Builds a lattice from a reflexive order matrix leq[x*n+y] <=> x <= y.
  // Returns nullopt if the relation is not a bounded lattice order or the
  // resulting lattice is not distributive.
  static std::optional<Lattice> try_from_leq(int n,
                                             const std::vector<char>& leq) {
    if (n < 1 || static_cast<int>(leq.size()) != n * n) return std::nullopt;
    auto le = [&](int x, int y) { return leq[x * n + y] != 0; };
    for (int x = 0; x < n; ++x) {
      if (!le(x, x)) return std::nullopt;
      for (int y = 0; y < n; ++y) {
        if (x != y && le(x, y) && le(y, x)) return std::nullopt;
        for (int z = 0; z < n; ++z)
          if (le(x, y) && le(y, z) && !le(x, z)) return std::nullopt;
      }
    }
    int bot = -1, top = -1;
    for (int x = 0; x < n; ++x) {
      bool least = true, greatest = true;
      for (int y = 0; y < n; ++y) {
        least = least && le(x, y);
        greatest = greatest && le(y, x);
      }
      if (least) bot = x;
      if (greatest) top = x;
    }
    if (bot < 0 || top < 0) return std::nullopt;

    std::vector<int> meet(n * n), join(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int glb = -1, lub = -1;
        for (int z = 0; z < n; ++z) {
          if (le(z, x) && le(z, y) && (glb < 0 || le(glb, z))) glb = z;
          if (le(x, z) && le(y, z) && (lub < 0 || le(z, lub))) lub = z;
        }
        // the greatest lower bound must dominate every common lower bound
        for (int z = 0; z < n; ++z) {
          if (le(z, x) && le(z, y) && !le(z, glb)) return std::nullopt;
          if (le(x, z) && le(y, z) && !le(lub, z)) return std::nullopt;
        }
        meet[x * n + y] = glb;
        join[x * n + y] = lub;
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs = meet[x * n + join[y * n + z]];
          int rhs = join[meet[x * n + y] * n + meet[x * n + z]];
          if (lhs != rhs) return std::nullopt;
        }
    return Lattice(n, bot, top, std::move(meet), std::move(join));
  }

private:
  void validate() const {
    const int n = size_;
    if (n < 1) throw validation_error("lattice size must be positive");
    if (zero_ < 0 || zero_ >= n || one_ < 0 || one_ >= n)
      throw validation_error("zero/one index out of range");
    if (static_cast<int>(meet_.size()) != n * n ||
        static_cast<int>(join_.size()) != n * n)
      throw validation_error("meet/join tables must be size x size");
    for (int v : meet_)
      if (v < 0 || v >= n) throw validation_error("meet entry out of range");
    for (int v : join_)
      if (v < 0 || v >= n) throw validation_error("join entry out of range");

    auto fail = [](const std::string& law, int x, int y, int z = -1) {
      std::string w = law + " fails at (" + std::to_string(x) + "," +
                      std::to_string(y);
      if (z >= 0) w += "," + std::to_string(z);
      throw validation_error(w + ")");
    };
    for (int x = 0; x < n; ++x) {
      if (meet(x, x) != x) fail("meet idempotence", x, x);
      if (join(x, x) != x) fail("join idempotence", x, x);
      if (meet(zero_, x) != zero_) fail("zero is not least under meet", zero_, x);
      if (join(one_, x) != one_) fail("one is not greatest under join", one_, x);
      if (join(zero_, x) != x) fail("zero is not a join identity", zero_, x);
      if (meet(one_, x) != x) fail("one is not a meet identity", one_, x);
      for (int y = 0; y < n; ++y) {
        if (meet(x, y) != meet(y, x)) fail("meet commutativity", x, y);
        if (join(x, y) != join(y, x)) fail("join commutativity", x, y);
        if (meet(x, join(x, y)) != x) fail("meet-join absorption", x, y);
        if (join(x, meet(x, y)) != x) fail("join-meet absorption", x, y);
        for (int z = 0; z < n; ++z) {
          if (meet(meet(x, y), z) != meet(x, meet(y, z)))
            fail("meet associativity", x, y, z);
          if (join(join(x, y), z) != join(x, join(y, z)))
            fail("join associativity", x, y, z);
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
            fail("distributivity", x, y, z);
        }
      }
    }
  }

  std::vector<int> linear_extension() const {
    std::vector<int> order;
    order.reserve(size_);
    std::vector<int> below(size_, 0);
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y)
        if (y != x && leq(y, x)) ++below[x];
    for (int k = 0; k < size_; ++k)
      for (int x = 0; x < size_; ++x)
        if (below[x] == k) order.push_back(x);
    // ties broken by element index; any order refining "fewer below first"
    // is a linear extension of a finite lattice order
    return order;
  }

  int size_, zero_, one_;
  std::vector<int> meet_, join_;
};

}  // namespace shlab
