#pragma once

#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shlab/algebra.hpp"
#include "shlab/congruence.hpp"
#include "shlab/semantics.hpp"
#include "shlab/term.hpp"

namespace shlab {

// ---------------------------------------------------------------------------
// Canonical form: the lexicographically least serialization of
// (meet, join, imp, neg) over all relabelings that send zero to 0 and one to
// size-1.  Two algebras are isomorphic iff their keys agree, at desk scale
// this is cheap ((n-2)! permutations).

inline std::string canonical_key(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> base(n);  // first move zero/one to the ends
  {
    int next = 1;
    base[a.zero()] = 0;
    if (n > 1) base[a.one()] = n - 1;
    for (int x = 0; x < n; ++x)
      if (x != a.zero() && x != a.one()) base[x] = next++;
  }
  std::vector<int> mid;  // images 1..n-2 get permuted
  for (int v = 1; v < n - 1; ++v) mid.push_back(v);

  std::string best;
  std::vector<int> perm(n);
  do {
    for (int x = 0; x < n; ++x) {
      int b = base[x];
      perm[x] = (b == 0 || b == n - 1) ? b : mid[b - 1];
    }
    std::string key;
    key.reserve(3 * n * n + n);
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;
    for (auto table : {&FiniteAlgebra::meet, &FiniteAlgebra::join,
                       &FiniteAlgebra::imp})
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          key.push_back(static_cast<char>(perm[(a.*table)(inv[u], inv[v])]));
    for (int u = 0; u < n; ++u)
      key.push_back(static_cast<char>(perm[a.neg(inv[u])]));
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return std::to_string(n) + ":" + best;
}

// ---------------------------------------------------------------------------
// Bounded distributive lattices of a given size, one representative per
// isomorphism class, universe 0..n-1 with zero = 0 and one = n-1.  Generated
// by assigning <, > or incomparable to each middle pair and filtering.

inline void enumerate_distributive_lattices(
    int size, const std::function<bool(const Lattice&)>& yield) {
  if (size < 1) throw validation_error("lattice size must be positive");
  const int n = size;
  if (n == 1) {
    yield(Lattice::chain(1));
    return;
  }
  std::vector<std::pair<int, int>> pairs;  // middle pairs i < j
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) pairs.emplace_back(i, j);

  std::unordered_set<std::string> seen;
  std::vector<int> choice(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  while (true) {
    std::vector<char> leq(n * n, 0);
    for (int x = 0; x < n; ++x) {
      leq[x * n + x] = 1;
      leq[0 * n + x] = 1;
      leq[x * n + (n - 1)] = 1;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (choice[k] == 1) leq[i * n + j] = 1;
      if (choice[k] == 2) leq[j * n + i] = 1;
    }
    if (auto lat = Lattice::try_from_leq(n, leq)) {
      // dedup through a placeholder expansion, reusing the algebra key
      FiniteAlgebra probe("", *lat, std::vector<int>(n * n, 0),
                          std::vector<int>(n, 0));
      if (seen.insert(canonical_key(probe)).second)
        if (!yield(*lat)) return;
    }
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
}

// ---------------------------------------------------------------------------
// All implication tables turning a bounded distributive lattice into a
// semi-Heyting algebra.  Backtracking cell by cell in row-major order with
// ascending values, so the stream is lexicographic on the table:
//  - the diagonal is pinned to 1 and the row of 1 to the identity (forced
//    by instances of SH3 and SH1)
//  - a cell (x,y) only admits v with x & v = x & y (its SH1 instance)
//  - every SH2 instance whose two cells are both assigned is re-checked as
//    soon as its last cell fills in

namespace detail {

class ShTableSearch {
public:
  ShTableSearch(const Lattice& lat,
                const std::function<bool(const FiniteAlgebra&)>& yield)
      : lat_(lat), yield_(yield), n_(lat.size()), imp_(n_ * n_, -1) {}

  void run() {
    for (int x = 0; x < n_; ++x) imp_[x * n_ + x] = lat_.one();
    for (int y = 0; y < n_; ++y) imp_[lat_.one() * n_ + y] = y;
    cells_.clear();
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (imp_[x * n_ + y] < 0) cells_.emplace_back(x, y);
    // the pinned cells already satisfy their mutual SH2 instances on every
    // bounded lattice; recheck anyway so the invariant holds at every node
    for (int x = 0; x < n_; ++x)
      if (imp_[x * n_ + x] >= 0 && !sh2_ok(x, x)) return;
    for (int y = 0; y < n_; ++y)
      if (!sh2_ok(lat_.one(), y)) return;
    stop_ = false;
    place(0);
  }

private:
  int at(int x, int y) const { return imp_[x * n_ + y]; }

  // All SH2 instances x & (y -> z) = x & ((x&y) -> (x&z)) that involve cell
  // (p,q) and whose other cell is assigned.
  bool sh2_ok(int p, int q) const {
    for (int x = 0; x < n_; ++x) {
      int c2 = at(lat_.meet(x, p), lat_.meet(x, q));
      if (c2 >= 0 && lat_.meet(x, at(p, q)) != lat_.meet(x, c2)) return false;
    }
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z) {
        if (at(y, z) < 0) continue;
        for (int x = 0; x < n_; ++x)
          if (lat_.meet(x, y) == p && lat_.meet(x, z) == q &&
              lat_.meet(x, at(y, z)) != lat_.meet(x, at(p, q)))
            return false;
      }
    return true;
  }

  void place(std::size_t k) {
    if (stop_) return;
    if (k == cells_.size()) {
      FiniteAlgebra out("", lat_, imp_, std::vector<int>(n_, lat_.one()));
      if (!yield_(out)) stop_ = true;
      return;
    }
    auto [x, y] = cells_[k];
    for (int v = 0; v < n_ && !stop_; ++v) {
      if (lat_.meet(x, v) != lat_.meet(x, y)) continue;  // SH1
      imp_[x * n_ + y] = v;
      if (sh2_ok(x, y)) place(k + 1);
      imp_[x * n_ + y] = -1;
    }
  }

  const Lattice& lat_;
  const std::function<bool(const FiniteAlgebra&)>& yield_;
  int n_;
  std::vector<int> imp_;
  std::vector<std::pair<int, int>> cells_;
  bool stop_ = false;
};

}  // namespace detail

inline void enumerate_sh_on_lattice(
    const Lattice& lat, const std::function<bool(const FiniteAlgebra&)>& yield) {
  detail::ShTableSearch(lat, yield).run();
}

// ---------------------------------------------------------------------------
// All negations making a semi-Heyting algebra dually quasi-De Morgan.  The
// four axioms constrain only the lattice and the negation:
//   (a) 0' = 1, 1' = 0      (pinned)
//   (b) (x & y)' = x' | y'  (implies order reversal, used for pruning)
//   (c) (x | y)'' = x'' | y''
//   (d) x'' <= x
// Arrays are produced in lexicographic order.

namespace detail {

class DqdNegSearch {
public:
  DqdNegSearch(const FiniteAlgebra& base,
               const std::function<bool(const FiniteAlgebra&)>& yield)
      : base_(base), yield_(yield), n_(base.size()), neg_(n_, -1) {}

  void run() {
    neg_[base_.zero()] = base_.one();
    neg_[base_.one()] = base_.zero();
    if (n_ == 1) neg_[0] = 0;
    free_.clear();
    for (int x = 0; x < n_; ++x)
      if (neg_[x] < 0) free_.push_back(x);
    stop_ = false;
    place(0);
  }

private:
  void place(std::size_t k) {
    if (stop_) return;
    if (k == free_.size()) {
      if (full_check()) {
        FiniteAlgebra out(base_.name(), base_.lattice(), base_.imp_table(),
                          neg_);
        if (!yield_(out)) stop_ = true;
      }
      return;
    }
    int x = free_[k];
    for (int v = 0; v < n_ && !stop_; ++v) {
      bool ok = true;
      for (int y = 0; y < n_ && ok; ++y) {
        if (neg_[y] < 0 || y == x) continue;
        if (base_.leq(x, y) && !base_.leq(neg_[y], v)) ok = false;
        if (base_.leq(y, x) && !base_.leq(v, neg_[y])) ok = false;
      }
      if (!ok) continue;
      neg_[x] = v;
      place(k + 1);
      neg_[x] = -1;
    }
  }

  bool full_check() const {
    for (int x = 0; x < n_; ++x) {
      if (!base_.leq(neg_[neg_[x]], x)) return false;
      for (int y = 0; y < n_; ++y) {
        if (neg_[base_.meet(x, y)] != base_.join(neg_[x], neg_[y]))
          return false;
        if (neg_[neg_[base_.join(x, y)]] !=
            base_.join(neg_[neg_[x]], neg_[neg_[y]]))
          return false;
      }
    }
    return true;
  }

  const FiniteAlgebra& base_;
  const std::function<bool(const FiniteAlgebra&)>& yield_;
  int n_;
  std::vector<int> neg_;
  std::vector<int> free_;
  bool stop_ = false;
};

}  // namespace detail

inline void enumerate_dqd_expansions(
    const FiniteAlgebra& sh, const std::function<bool(const FiniteAlgebra&)>& yield) {
  detail::DqdNegSearch(sh, yield).run();
}

// ---------------------------------------------------------------------------
// Every dually quasi-De Morgan algebra with at most size_cap elements, one
// representative per isomorphism class: lattices, then implication tables,
// then negations, deduplicated by canonical key in stream order.

inline void enumerate_dqd_upto(
    int size_cap, const std::function<bool(const FiniteAlgebra&)>& yield) {
  if (size_cap < 1 || size_cap > 6)
    throw validation_error("enumeration cap must be between 1 and 6");
  std::unordered_set<std::string> seen;
  bool stop = false;
  for (int n = 1; n <= size_cap && !stop; ++n) {
    long index = 0;
    enumerate_distributive_lattices(n, [&](const Lattice& lat) {
      enumerate_sh_on_lattice(lat, [&](const FiniteAlgebra& sh) {
        enumerate_dqd_expansions(sh, [&](const FiniteAlgebra& dqd) {
          if (seen.insert(canonical_key(dqd)).second) {
            FiniteAlgebra named = dqd.renamed(
                "dqd-" + std::to_string(n) + "-" + std::to_string(index++));
            if (!yield(named)) stop = true;
          }
          return !stop;
        });
        return !stop;
      });
      return !stop;
    });
  }
}

inline std::vector<FiniteAlgebra> dqd_universe(int size_cap) {
  std::vector<FiniteAlgebra> out;
  enumerate_dqd_upto(size_cap, [&](const FiniteAlgebra& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Ternary discriminator search.

struct DiscriminatorCheck {
  bool ok = true;
  std::array<int, 3> witness{};  // first failing triple (a, b, c)
};

// Exhaustive |A|^3 check that t(a,b,c) = c when a = b and a otherwise.
// t may mention no variables other than x, y, z.
inline DiscriminatorCheck verify_discriminator(const FiniteAlgebra& alg,
                                               const Term& t) {
  static const std::vector<std::string> order = {"x", "y", "z"};
  for (const std::string& v : t.vars())
    if (v != "x" && v != "y" && v != "z")
      throw validation_error("discriminator term must use only x, y, z (got '" +
                             v + "')");
  CompiledTerm ct(t, order);
  std::vector<int> vals(3);
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      for (int c = 0; c < alg.size(); ++c) {
        vals[0] = a; vals[1] = b; vals[2] = c;
        int expect = (a == b) ? c : a;
        if (ct.eval(alg, vals) != expect) return {false, {a, b, c}};
      }
  return {};
}

// A term realizing the discriminator on every simple algebra satisfying the
// simplicity condition: with u = (x -> y) & (y -> x), u = 1 iff x = y, and
// e = u & u'* collapses to 0 on u != 1.
inline TermPtr sc_discriminator_term() {
  TermPtr u = Term::meet(Term::imp(Term::var("x"), Term::var("y")),
                         Term::imp(Term::var("y"), Term::var("x")));
  TermPtr e = Term::meet(u, Term::star(Term::neg(u)));
  return Term::join(Term::meet(Term::var("z"), e),
                    Term::meet(Term::var("x"), Term::neg(e)));
}

struct DiscriminatorSearch {
  bool found = false;   // false means inconclusive, never "nonexistent"
  TermPtr term;         // first term in iter_terms order when found
};

// Bounded search for a discriminator term, returning the first hit in
// iter_terms order.  Candidate subterms are deduplicated by their value
// vector over all |A|^3 triples; replacing a subterm by its earliest
// semantic representative never changes a candidate's vector or pushes the
// first hit later, so the reported term equals the one a raw scan finds.
inline DiscriminatorSearch find_discriminator_term(const FiniteAlgebra& alg,
                                                   int max_nodes = 14) {
  if (!is_simple(alg))
    throw validation_error("discriminator search requires a simple algebra");
  const int n = alg.size();
  const long triples = static_cast<long>(n) * n * n;

  std::string target(triples, '\0');
  {
    long i = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          target[i++] = static_cast<char>(a == b ? c : a);
  }

  struct Rep {
    std::string vec;
    TermPtr term;
  };
  std::vector<std::vector<Rep>> reps(max_nodes + 1);
  std::unordered_set<std::string> seen;

  auto consider = [&](std::string vec, TermPtr term,
                      int size) -> DiscriminatorSearch {
    if (vec == target) return {true, term};
    if (seen.insert(vec).second)
      reps[size].push_back({std::move(vec), std::move(term)});
    return {};
  };

  // size 1: projections and constants, in enumeration order x, y, z, 0, 1
  for (int which = 0; which < 5 && max_nodes >= 1; ++which) {
    std::string vec(triples, '\0');
    long i = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int v[5] = {a, b, c, alg.zero(), alg.one()};
          vec[i++] = static_cast<char>(v[which]);
        }
    static const char* names[] = {"x", "y", "z"};
    TermPtr t = which < 3 ? Term::var(names[which])
                          : (which == 3 ? Term::zero() : Term::one());
    if (auto r = consider(std::move(vec), std::move(t), 1); r.found) return r;
  }

  for (int size = 2; size <= max_nodes; ++size) {
    for (const Rep& s : reps[size - 1]) {
      std::string vec(triples, '\0');
      for (long i = 0; i < triples; ++i)
        vec[i] = static_cast<char>(alg.neg(s.vec[i]));
      if (auto r = consider(std::move(vec), Term::neg(s.term), size); r.found)
        return r;
    }
    struct BinOp {
      TermPtr (*make)(TermPtr, TermPtr);
      int (FiniteAlgebra::*table)(int, int) const;
    };
    static const BinOp ops[] = {{&Term::meet, &FiniteAlgebra::meet},
                                {&Term::join, &FiniteAlgebra::join},
                                {&Term::imp, &FiniteAlgebra::imp}};
    for (const BinOp& op : ops)
      for (int ls = 1; ls <= size - 2; ++ls)
        for (const Rep& l : reps[ls])
          for (const Rep& r : reps[size - 1 - ls]) {
            std::string vec(triples, '\0');
            for (long i = 0; i < triples; ++i)
              vec[i] =
                  static_cast<char>((alg.*op.table)(l.vec[i], r.vec[i]));
            if (auto res = consider(std::move(vec), op.make(l.term, r.term),
                                    size);
                res.found)
              return res;
          }
  }
  return {};
}

}  // namespace shlab
