#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "shlab/core.hpp"

namespace shlab {

// A partition of {0,...,n-1} in canonical least-leader form: lead_[x] is the
// smallest element of the block containing x.  The canonical form makes
// equality, ordering and printed output bit-stable.
class Partition {
public:
  static Partition identity(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return Partition(std::move(l), tag{});
  }

  static Partition all(int n) { return Partition(std::vector<int>(n, 0), tag{}); }

  // Builds the finest partition relating x with m[x] for every x, then
  // normalizes to least leaders.
  static Partition from_map(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int x = 0; x < n; ++x) {
      if (m[x] < 0 || m[x] >= n)
        throw validation_error("partition map out of range");
      int a = find(x), b = find(m[x]);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> l(n);
    for (int x = 0; x < n; ++x) l[x] = find(x);
    // roots are class minima because unions always point to the smaller root
    return Partition(std::move(l), tag{});
  }

  int size() const { return static_cast<int>(lead_.size()); }
  int leader(int x) const { return lead_[x]; }
  bool same(int x, int y) const { return lead_[x] == lead_[y]; }

  int block_count() const {
    int c = 0;
    for (int x = 0; x < size(); ++x)
      if (lead_[x] == x) ++c;
    return c;
  }

  bool is_identity() const { return block_count() == size(); }
  bool is_all() const { return block_count() == 1; }

  // Blocks sorted by their least element.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    for (int x = 0; x < size(); ++x)
      if (lead_[x] == x) {
        std::vector<int> b;
        for (int y = x; y < size(); ++y)
          if (lead_[y] == x) b.push_back(y);
        out.push_back(std::move(b));
      }
    return out;
  }

  // this refines other: every block of this lies inside a block of other.
  bool refines(const Partition& other) const {
    for (int x = 0; x < size(); ++x)
      if (!other.same(x, lead_[x])) return false;
    return true;
  }

  // Common refinement (meet in the partition lattice).
  Partition meet_with(const Partition& other) const {
    const int n = size();
    std::vector<int> m(n);
    for (int x = 0; x < n; ++x) {
      int y = 0;
      for (; y < n; ++y)
        if (same(x, y) && other.same(x, y)) break;
      m[x] = y;
    }
    return from_map(std::move(m));
  }

  // Transitive closure of the union (join in the partition lattice).
  Partition join_with(const Partition& other) const {
    const int n = size();
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    auto find = [&](int x) {
      while (m[x] != x) x = m[x] = m[m[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a); b = find(b);
      if (a != b) m[std::max(a, b)] = std::min(a, b);
    };
    for (int x = 0; x < n; ++x) {
      unite(x, lead_[x]);
      unite(x, other.lead_[x]);
    }
    for (int x = 0; x < n; ++x) find(x);
    return from_map(std::move(m));
  }

  // Block notation, blocks sorted by least element: {0,2}{1}{3}
  std::string to_string() const {
    std::string s;
    for (const auto& b : blocks()) {
      s += '{';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b[i]);
      }
      s += '}';
    }
    return s;
  }

  const std::vector<int>& leaders() const { return lead_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.lead_ == b.lead_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.lead_ < b.lead_;
  }

private:
  struct tag {};
  Partition(std::vector<int> l, tag) : lead_(std::move(l)) {}
  std::vector<int> lead_;
};

}  // namespace shlab
