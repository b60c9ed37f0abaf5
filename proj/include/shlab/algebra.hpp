#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shlab/core.hpp"
#include "shlab/lattice.hpp"
#include "shlab/partition.hpp"

namespace shlab {

// A bounded distributive lattice expanded by an implication table and a
// unary negation.  The lattice part is validated on construction; whether
// imp/neg satisfy any further axioms is the classifier's business, so that
// deliberately broken fixtures remain loadable.
class FiniteAlgebra {
public:
  FiniteAlgebra(std::string name, Lattice lat, std::vector<int> imp,
                std::vector<int> neg)
      : name_(std::move(name)), lat_(std::move(lat)), imp_(std::move(imp)),
        neg_(std::move(neg)) {
    const int n = lat_.size();
    if (static_cast<int>(imp_.size()) != n * n)
      throw validation_error("imp table must be size x size");
    if (static_cast<int>(neg_.size()) != n)
      throw validation_error("neg table must have one entry per element");
    for (int v : imp_)
      if (v < 0 || v >= n) throw validation_error("imp entry out of range");
    for (int v : neg_)
      if (v < 0 || v >= n) throw validation_error("neg entry out of range");
  }

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return lat_; }

  int size() const { return lat_.size(); }
  int zero() const { return lat_.zero(); }
  int one() const { return lat_.one(); }

  int meet(int x, int y) const { return lat_.meet(x, y); }
  int join(int x, int y) const { return lat_.join(x, y); }
  int imp(int x, int y) const { return imp_[x * size() + y]; }
  int neg(int x) const { return neg_[x]; }
  bool leq(int x, int y) const { return lat_.leq(x, y); }

  // x* := x -> 0
  int pseudocomplement(int x) const { return imp(x, zero()); }
  // x+ := ((x')*)'
  int plus(int x) const { return neg(pseudocomplement(neg(x))); }

  const std::vector<int>& imp_table() const { return imp_; }
  const std::vector<int>& neg_table() const { return neg_; }

  FiniteAlgebra renamed(std::string name) const {
    FiniteAlgebra a = *this;
    a.name_ = std::move(name);
    return a;
  }

  bool same_tables(const FiniteAlgebra& b) const {
    return size() == b.size() && zero() == b.zero() && one() == b.one() &&
           lat_.meet_table() == b.lat_.meet_table() &&
           lat_.join_table() == b.lat_.join_table() && imp_ == b.imp_ &&
           neg_ == b.neg_;
  }

private:
  std::string name_;
  Lattice lat_;
  std::vector<int> imp_, neg_;
};

// Componentwise product on the universe of size |A|*|B|, element (a,b)
// indexed row-major as a*|B| + b.
inline FiniteAlgebra direct_product(const FiniteAlgebra& a,
                                    const FiniteAlgebra& b,
                                    int cap = global_size_cap()) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  if (n > cap)
    throw validation_error("product size " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<int> meet(n * n), join(n * n), imp(n * n), neg(n);
  for (int xa = 0; xa < na; ++xa)
    for (int xb = 0; xb < nb; ++xb) {
      int x = idx(xa, xb);
      neg[x] = idx(a.neg(xa), b.neg(xb));
      for (int ya = 0; ya < na; ++ya)
        for (int yb = 0; yb < nb; ++yb) {
          int y = idx(ya, yb);
          meet[x * n + y] = idx(a.meet(xa, ya), b.meet(xb, yb));
          join[x * n + y] = idx(a.join(xa, ya), b.join(xb, yb));
          imp[x * n + y] = idx(a.imp(xa, ya), b.imp(xb, yb));
        }
    }
  Lattice lat(n, idx(a.zero(), b.zero()), idx(a.one(), b.one()),
              std::move(meet), std::move(join));
  return FiniteAlgebra(a.name() + "x" + b.name(), std::move(lat),
                       std::move(imp), std::move(neg));
}

// Least subuniverse containing seed (constants always included), as a
// sorted element list.
inline std::vector<int> generated_subalgebra(const FiniteAlgebra& a,
                                             const std::vector<int>& seed) {
  const int n = a.size();
  std::vector<char> in(n, 0);
  in[a.zero()] = in[a.one()] = 1;
  for (int s : seed) {
    if (s < 0 || s >= n) throw validation_error("seed element out of range");
    in[s] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      if (!in[a.neg(x)]) { in[a.neg(x)] = 1; grew = true; }
      for (int y = 0; y < n; ++y) {
        if (!in[y]) continue;
        for (int v : {a.meet(x, y), a.join(x, y), a.imp(x, y), a.imp(y, x)})
          if (!in[v]) { in[v] = 1; grew = true; }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Restriction of a to a subuniverse (which must be closed).
inline FiniteAlgebra subalgebra(const FiniteAlgebra& a,
                                const std::vector<int>& elements,
                                const std::string& name = "") {
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  auto req = [&](int v) {
    if (v < 0 || v >= a.size() || pos[v] < 0)
      throw validation_error("element set is not closed under the operations");
    return pos[v];
  };
  std::vector<int> meet(m * m), join(m * m), imp(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = req(a.neg(elements[i]));
    for (int j = 0; j < m; ++j) {
      meet[i * m + j] = req(a.meet(elements[i], elements[j]));
      join[i * m + j] = req(a.join(elements[i], elements[j]));
      imp[i * m + j] = req(a.imp(elements[i], elements[j]));
    }
  }
  Lattice lat(m, req(a.zero()), req(a.one()), std::move(meet), std::move(join));
  return FiniteAlgebra(name.empty() ? a.name() + "|sub" : name, std::move(lat),
                       std::move(imp), std::move(neg));
}

// theta must identify op-results whenever it identifies arguments.
inline bool is_compatible(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) return false;
  const int n = a.size();
  for (int x = 0; x < n; ++x) {
    int lx = theta.leader(x);
    if (!theta.same(a.neg(x), a.neg(lx))) return false;
    for (int y = 0; y < n; ++y) {
      int ly = theta.leader(y);
      if (!theta.same(a.meet(x, y), a.meet(lx, ly))) return false;
      if (!theta.same(a.join(x, y), a.join(lx, ly))) return false;
      if (!theta.same(a.imp(x, y), a.imp(lx, ly))) return false;
    }
  }
  return true;
}

// Algebra on the blocks of theta; block order is by least element.
inline FiniteAlgebra quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_compatible(a, theta))
    throw validation_error("partition is not compatible with the operations");
  auto blocks = theta.blocks();
  const int m = static_cast<int>(blocks.size());
  std::vector<int> block_of(a.size());
  for (int i = 0; i < m; ++i)
    for (int e : blocks[i]) block_of[e] = i;
  std::vector<int> meet(m * m), join(m * m), imp(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    int x = blocks[i][0];
    neg[i] = block_of[a.neg(x)];
    for (int j = 0; j < m; ++j) {
      int y = blocks[j][0];
      meet[i * m + j] = block_of[a.meet(x, y)];
      join[i * m + j] = block_of[a.join(x, y)];
      imp[i * m + j] = block_of[a.imp(x, y)];
    }
  }
  Lattice lat(m, block_of[a.zero()], block_of[a.one()], std::move(meet),
              std::move(join));
  return FiniteAlgebra(a.name() + "/theta", std::move(lat), std::move(imp),
                       std::move(neg));
}

// Replaces the negation by x' = 0 if x = 1, else 1.
inline FiniteAlgebra expand_e(const FiniteAlgebra& a) {
  std::vector<int> neg(a.size(), a.one());
  neg[a.one()] = a.zero();
  return FiniteAlgebra(a.name() + "^e", a.lattice(), a.imp_table(),
                       std::move(neg));
}

namespace detail {

// Backtracking over injective partial maps, forward-checking all four
// tables and the two constants on the assigned part.
inline void embedding_search(const FiniteAlgebra& a, const FiniteAlgebra& b,
                             std::vector<int>& map, std::vector<char>& used,
                             int next,
                             const std::function<bool(const std::vector<int>&)>& yield,
                             bool& stop) {
  const int n = a.size();
  if (next == n) {
    if (!yield(map)) stop = true;
    return;
  }
  for (int t = 0; t < b.size(); ++t) {
    if (stop) return;
    if (used[t]) continue;
    if (a.zero() == next && t != b.zero()) continue;
    if (a.one() == next && t != b.one()) continue;
    map[next] = t;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x) {
      if (map[x] < 0) continue;
      int nx = a.neg(x);
      if (nx <= next && map[nx] >= 0 && b.neg(map[x]) != map[nx]) ok = false;
      for (int y = 0; y <= next && ok; ++y) {
        if (map[y] < 0) continue;
        auto chk = [&](int va, int vb) {
          if (va <= next && map[va] >= 0) return map[va] == vb;
          return true;
        };
        ok = chk(a.meet(x, y), b.meet(map[x], map[y])) &&
             chk(a.join(x, y), b.join(map[x], map[y])) &&
             chk(a.imp(x, y), b.imp(map[x], map[y])) &&
             chk(a.imp(y, x), b.imp(map[y], map[x]));
      }
    }
    if (ok) {
      used[t] = 1;
      embedding_search(a, b, map, used, next + 1, yield, stop);
      used[t] = 0;
    }
    map[next] = -1;
  }
}

}  // namespace detail

// All injective maps a -> b preserving meet, join, imp, neg, zero, one, in
// lexicographic order of the map array.
inline void for_each_embedding(const FiniteAlgebra& a, const FiniteAlgebra& b,
                               const std::function<bool(const std::vector<int>&)>& yield) {
  if (a.size() > b.size()) return;
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  bool stop = false;
  detail::embedding_search(a, b, map, used, 0, yield, stop);
}

inline std::vector<std::vector<int>> find_embeddings(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  std::vector<std::vector<int>> out;
  for_each_embedding(a, b, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// A bijective homomorphism of finite algebras is an isomorphism.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                        const FiniteAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<std::vector<int>> witness;
  for_each_embedding(a, b, [&](const std::vector<int>& m) {
    witness = m;
    return false;
  });
  return witness;
}

inline bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace shlab
