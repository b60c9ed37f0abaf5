#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "shlab/algebra.hpp"
#include "shlab/partition.hpp"

namespace shlab {

// Least congruence identifying a and b: union-find seeded with (a,b), closed
// under all unary polynomial translations.  Whenever a pair gets merged it is
// pushed through every basic operation with each fixed other argument; the
// worklist handles composed translations.
inline Partition principal_congruence(const FiniteAlgebra& alg, int a, int b) {
  const int n = alg.size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw validation_error("congruence generators out of range");
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> work;
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    int rp = find(p), rq = find(q);
    if (rp == rq) continue;
    parent[std::max(rp, rq)] = std::min(rp, rq);
    work.emplace_back(alg.neg(p), alg.neg(q));
    for (int c = 0; c < n; ++c) {
      work.emplace_back(alg.meet(p, c), alg.meet(q, c));
      work.emplace_back(alg.join(p, c), alg.join(q, c));
      work.emplace_back(alg.imp(p, c), alg.imp(q, c));
      work.emplace_back(alg.imp(c, p), alg.imp(c, q));
    }
  }
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = find(i);
  return Partition::from_map(std::move(m));
}

struct CongruenceLattice {
  // All congruences, sorted by (block count descending, leader array), so
  // the identity comes first and the all-in-one relation last.
  std::vector<Partition> elements;
  // covers[i] lists the indices of the upper covers of elements[i]
  std::vector<std::vector<int>> covers;

  int bottom_index() const { return 0; }
  int top_index() const { return static_cast<int>(elements.size()) - 1; }
};

// Join-closure of the principal congruences.  Every congruence is the join
// of the principal congruences below it, so this reaches all of them.
inline CongruenceLattice all_congruences(const FiniteAlgebra& alg,
                                         int cap = 12) {
  const int n = alg.size();
  if (n > cap)
    throw validation_error("congruence lattice cap exceeded (size " +
                           std::to_string(n) + " > " + std::to_string(cap) +
                           ")");
  std::set<Partition> seen;
  seen.insert(Partition::identity(n));
  std::vector<Partition> fresh;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Partition cg = principal_congruence(alg, a, b);
      if (seen.insert(cg).second) fresh.push_back(cg);
    }
  std::vector<Partition> frontier = fresh;
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const Partition& f : frontier)
      for (const Partition& g : std::vector<Partition>(seen.begin(), seen.end())) {
        Partition j = f.join_with(g);
        if (seen.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }

  CongruenceLattice lat;
  lat.elements.assign(seen.begin(), seen.end());
  std::sort(lat.elements.begin(), lat.elements.end(),
            [](const Partition& a, const Partition& b) {
              int ba = a.block_count(), bb = b.block_count();
              if (ba != bb) return ba > bb;
              return a.leaders() < b.leaders();
            });
  const int m = static_cast<int>(lat.elements.size());
  lat.covers.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Partition &lo = lat.elements[i], &hi = lat.elements[j];
      if (!(lo.refines(hi) && !(lo == hi))) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k) {
        if (k == i || k == j) continue;
        const Partition& mid = lat.elements[k];
        if (lo.refines(mid) && mid.refines(hi) && !(mid == lo) && !(mid == hi))
          covered = false;
      }
      if (covered) lat.covers[i].push_back(j);
    }
  return lat;
}

// Exactly two congruences.
inline bool is_simple(const FiniteAlgebra& alg, int cap = 12) {
  if (alg.size() < 2) return false;
  for (int a = 0; a < alg.size(); ++a)
    for (int b = a + 1; b < alg.size(); ++b)
      if (!principal_congruence(alg, a, b).is_all()) return false;
  (void)cap;
  return true;
}

// The monolith: least nontrivial congruence, when one exists.  A congruence
// above every generating pair's principal congruence is nontrivial iff the
// meet of all principal congruences over distinct pairs is nontrivial.
inline std::optional<Partition> monolith(const FiniteAlgebra& alg) {
  const int n = alg.size();
  if (n < 2) return std::nullopt;
  std::optional<Partition> m;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Partition cg = principal_congruence(alg, a, b);
      m = m ? m->meet_with(cg) : cg;
    }
  if (!m || m->is_identity()) return std::nullopt;
  // the meet of all nontrivial congruences equals the meet of all principal
  // congruences Cg(a,b) with a != b; it is the least nontrivial congruence
  // exactly when it is itself nontrivial
  return m;
}

inline bool is_subdirectly_irreducible(const FiniteAlgebra& alg) {
  return monolith(alg).has_value();
}

}  // namespace shlab
