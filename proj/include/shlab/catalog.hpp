#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shlab/algebra.hpp"

namespace shlab {

namespace detail {

inline Lattice lattice_from_covers(int n, int zero, int one,
                                   const std::vector<std::pair<int, int>>& covers) {
  std::vector<char> leq(n * n, 0);
  for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [lo, hi] : covers) leq[lo * n + hi] = 1;
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq[x * n + k] && leq[k * n + y]) leq[x * n + y] = 1;
  auto lat = Lattice::try_from_leq(n, leq);
  if (!lat || lat->zero() != zero || lat->one() != one)
    throw validation_error("cover relation is not the expected lattice");
  return *lat;
}

// Four-element Boolean lattice on (0,1,a,b) = (0,1,2,3), a and b the two
// complementary atoms, with the fixed-point negation a' = a, b' = b.
inline FiniteAlgebra d_algebra(const std::string& name,
                               const std::vector<int>& imp) {
  Lattice lat = lattice_from_covers(4, 0, 1, {{0, 2}, {0, 3}, {2, 1}, {3, 1}});
  return FiniteAlgebra(name, std::move(lat), imp, {1, 0, 2, 3});
}

}  // namespace detail

// The n-element dually Stone Heyting chain: universe 0 < 1 < ... < n-1 in
// chain order, x -> y = top if x <= y else y, and x' = top for x != top,
// top' = bottom.
inline FiniteAlgebra dst_heyting_chain(int n) {
  if (n < 1) throw validation_error("cdp-n needs n >= 1");
  Lattice lat = Lattice::chain(n);
  std::vector<int> imp(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) imp[x * n + y] = x <= y ? n - 1 : y;
  FiniteAlgebra heyting("cdp-" + std::to_string(n), std::move(lat),
                        std::move(imp), std::vector<int>(n, 0));
  return expand_e(heyting).renamed("cdp-" + std::to_string(n));
}

inline std::vector<std::string> catalog_names() {
  return {"d1", "d2", "d3", "eight", "six", "two", "two-e"};
}

// Built-in algebras by name: two, two-e, d1, d2, d3, six, eight, and the
// chain family cdp-<n>.
inline FiniteAlgebra catalog_get(const std::string& name) {
  if (name == "two") {
    // two-element Boolean Heyting algebra: classical implication and negation
    return FiniteAlgebra("two", Lattice::chain(2), {1, 1, 0, 1}, {1, 0});
  }
  if (name == "two-e") {
    // the other two-element semi-Heyting chain (0 -> 1 = 0), negation forced
    return FiniteAlgebra("two-e", Lattice::chain(2), {1, 0, 0, 1}, {1, 0});
  }
  if (name == "d1") {
    return detail::d_algebra("d1", {1, 0, 3, 2,    // 0 -> _
                                    0, 1, 2, 3,    // 1 -> _
                                    3, 2, 1, 0,    // a -> _
                                    2, 3, 0, 1});  // b -> _
  }
  if (name == "d2") {
    return detail::d_algebra("d2", {1, 1, 1, 1,
                                    0, 1, 2, 3,
                                    3, 1, 1, 3,
                                    2, 1, 2, 1});
  }
  if (name == "d3") {
    return detail::d_algebra("d3", {1, 2, 1, 2,
                                    0, 1, 2, 3,
                                    3, 2, 1, 0,
                                    2, 1, 2, 1});
  }
  if (name == "six") {
    // universe (0,1,a,b,c,d) = (0,1,2,3,4,5); order 0 < b < a < 1,
    // 0 < d < a, d < c < 1, with b,d / b,c / a,c incomparable
    Lattice lat = detail::lattice_from_covers(
        6, 0, 1, {{0, 3}, {0, 5}, {3, 2}, {5, 2}, {5, 4}, {2, 1}, {4, 1}});
    std::vector<int> imp = {
        1, 1, 1, 1, 1, 1,   // 0 -> _
        0, 1, 2, 3, 4, 5,   // 1 -> _
        0, 1, 1, 3, 4, 4,   // a -> _
        4, 1, 1, 1, 4, 4,   // b -> _
        3, 1, 2, 3, 1, 2,   // c -> _
        3, 1, 1, 3, 1, 1};  // d -> _
    return FiniteAlgebra("six", std::move(lat), std::move(imp),
                         {1, 0, 3, 3, 4, 1});
  }
  if (name == "eight") {
    // universe (0,1,e,c,a,b,f,d) = (0..7); order 0 < a,b; a < c,d; b < d;
    // c < f; d < e,f; e,f < 1.  The published diagram labels one vertex "5"
    // where its tables use b; it is encoded as b here.
    Lattice lat = detail::lattice_from_covers(8, 0, 1,
                                              {{0, 4}, {0, 5}, {4, 3}, {4, 7},
                                               {5, 7}, {3, 6}, {7, 6}, {7, 2},
                                               {6, 1}, {2, 1}});
    std::vector<int> imp = {
        1, 0, 0, 5, 5, 3, 0, 0,   // 0 -> _
        0, 1, 2, 3, 4, 5, 6, 7,   // 1 -> _
        0, 1, 1, 3, 3, 5, 6, 6,   // e -> _
        5, 3, 4, 1, 2, 0, 3, 4,   // c -> _
        5, 3, 3, 1, 1, 0, 3, 3,   // a -> _
        3, 5, 5, 0, 0, 1, 5, 5,   // b -> _
        0, 1, 2, 3, 4, 5, 1, 2,   // f -> _
        0, 1, 1, 3, 3, 5, 1, 1};  // d -> _
    return FiniteAlgebra("eight", std::move(lat), std::move(imp),
                         {1, 0, 3, 2, 1, 1, 2, 1});
  }
  if (name.rfind("cdp-", 0) == 0) {
    try {
      std::size_t used = 0;
      int n = std::stoi(name.substr(4), &used);
      if (used == name.size() - 4 && n >= 1) return dst_heyting_chain(n);
    } catch (const std::exception&) {
    }
    throw validation_error("invalid chain size in '" + name + "'");
  }
  throw validation_error("unknown catalog algebra '" + name + "'");
}

inline bool is_catalog_name(const std::string& name) {
  if (name.rfind("cdp-", 0) == 0) {
    try {
      catalog_get(name);
      return true;
    } catch (const validation_error&) {
      return false;
    }
  }
  for (const std::string& n : catalog_names())
    if (n == name) return true;
  return false;
}

// Stable listing, sorted by name, one descriptive line each.
inline std::vector<std::pair<std::string, std::string>> catalog_list() {
  return {
      {"cdp-<n>", "n-element dually Stone Heyting chain (simple for n >= 2)"},
      {"d1", "4-element De Morgan Boolean semi-Heyting algebra, fixed-point negation, not Heyting"},
      {"d2", "4-element De Morgan Boolean Heyting algebra, fixed-point negation"},
      {"d3", "4-element De Morgan Boolean semi-Heyting algebra, fixed-point negation, not Heyting"},
      {"eight", "8-element dually pseudocomplemented algebra failing the level-1 identity"},
      {"six", "6-element JI-distributive witness of level 2, not of level 1"},
      {"two", "2-element Boolean Heyting algebra (classical implication)"},
      {"two-e", "dual-Stone expansion of the non-Heyting 2-element chain (0 -> 1 = 0)"},
  };
}

}  // namespace shlab
