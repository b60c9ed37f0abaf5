#include <catch2/catch_amalgamated.hpp>

#include "shlab/catalog.hpp"
#include "shlab/classify.hpp"
#include "shlab/congruence.hpp"

using namespace shlab;

TEST_CASE("catalog tables match their sources", "[catalog]") {
  FiniteAlgebra d2 = catalog_get("d2");
  for (int x = 0; x < 4; ++x) CHECK(d2.imp(0, x) == 1);
  CHECK(d2.imp(2, 0) == 3);  // a -> 0 = b
  CHECK(d2.neg(2) == 2);     // a' = a

  FiniteAlgebra d1 = catalog_get("d1");
  CHECK(d1.imp(0, 1) == 0);  // 0 -> 1 = 0 distinguishes d1 from d2
  CHECK(catalog_get("d3").imp(0, 1) == 2);  // 0 -> 1 = a in d3

  FiniteAlgebra six = catalog_get("six");
  CHECK(six.neg(2) == 3);  // a' = b
  CHECK(six.neg(3) == 3);  // b' = b
  CHECK(six.neg(5) == 1);  // d' = 1
  CHECK(six.imp(5, 0) == 3);  // d -> 0 = b

  FiniteAlgebra eight = catalog_get("eight");
  CHECK(eight.neg(2) == 3);   // e' = c
  CHECK(eight.imp(0, 1) == 0);  // 0 -> 1 = 0: not a Heyting algebra
  CHECK(eight.imp(3, 4) == 2);  // c -> a = e

  FiniteAlgebra c2 = catalog_get("cdp-2");
  CHECK(c2.same_tables(catalog_get("two")));
  CHECK(c2.imp(0, 1) == 1);
  CHECK(catalog_get("two-e").imp(0, 1) == 0);

  CHECK_THROWS_AS(catalog_get("nope"), validation_error);
  CHECK_THROWS_AS(catalog_get("cdp-0"), validation_error);
  CHECK_THROWS_AS(catalog_get("cdp-x"), validation_error);
}

TEST_CASE("catalog listing", "[catalog]") {
  auto list = catalog_list();
  REQUIRE(!list.empty());
  for (std::size_t i = 1; i < list.size(); ++i)
    CHECK(list[i - 1].first < list[i].first);
  bool six_line = false, eight_line = false;
  for (const auto& [name, line] : list) {
    if (name == "six") six_line = line.find("level 2") != std::string::npos;
    if (name == "eight") eight_line = line.find("level-1") != std::string::npos;
  }
  CHECK(six_line);
  CHECK(eight_line);
}

TEST_CASE("classification of the named algebras", "[catalog]") {
  for (const char* n : {"d1", "d2", "d3"}) {
    Profile p = classify(catalog_get(n));
    INFO(n);
    CHECK(p.holds("DQD"));
    CHECK(p.holds("DM"));
    CHECK(p.holds("Bo"));
    CHECK(p.holds("JID"));
    CHECK(p.holds("Lev1"));
    CHECK(p.holds("SC"));
  }
  CHECK(classify(catalog_get("d2")).holds("H"));
  CHECK_FALSE(classify(catalog_get("d1")).holds("H"));
  CHECK_FALSE(classify(catalog_get("d3")).holds("H"));

  for (const char* n : {"d1", "d2", "d3"}) {
    CHECK(all_congruences(catalog_get(n)).elements.size() == 2);
  }

  SECTION("the chain family") {
    for (int n = 2; n <= 7; ++n) {
      FiniteAlgebra c = catalog_get("cdp-" + std::to_string(n));
      Profile p = classify(c);
      INFO(c.name());
      for (const char* pred : {"DSt", "H", "L", "JID", "Lev1", "SC"})
        CHECK(p.holds(pred));
      CHECK(is_simple(c));
    }
  }
}
