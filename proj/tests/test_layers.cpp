#include "doctest.h"

#include "invsort/closedforms.hpp"
#include "invsort/layers.hpp"
#include "invsort/machines.hpp"

using namespace invsort;

TEST_SUITE_BEGIN("layers");

TEST_CASE("layer decomposition worked examples") {
  auto d = layer_decomposition(Word::parse("211033275"));
  REQUIRE(d.has_value());
  CHECK(d->str() == "2110|332|75");
  CHECK(d->layer_count() == 3);

  CHECK_FALSE(layer_decomposition(Word::parse("0120")).has_value());

  auto increasing = layer_decomposition(Word::parse("0123"));
  REQUIRE(increasing.has_value());
  CHECK(increasing->layer_count() == 4);
}

TEST_CASE("layer_count") {
  CHECK(layer_count(Word::parse("211033275")) == 3);
  CHECK(layer_count(Word::parse("0000")) == 1);
  CHECK(layer_count(Word::parse("0011")) == 2);
  CHECK(layer_count(Word{}) == 0);
  CHECK_FALSE(layer_count(Word::parse("0120")).has_value());
}

TEST_CASE("runs concatenate back to the word") {
  const Word w = Word::parse("2,1,1,0,3,3,2,7,5");
  Letters joined;
  for (const Word& run : weakly_decreasing_runs(w)) {
    CHECK(std::is_sorted(run.letters().rbegin(), run.letters().rend()));
    joined.insert(joined.end(), run.letters().begin(), run.letters().end());
  }
  CHECK(joined == w.letters());
}

TEST_CASE("layered iff pop stack sortable iff avoids the basis") {
  const Basis basis = Basis::parse("120+201+1010");
  auto check = [&](const Universe& u) {
    for_each_member(u, [&](const Word& w) {
      const bool layered = layer_decomposition(w).has_value();
      CHECK(layered == is_sortable(w, MachineConfig::pop_stack()));
      CHECK(layered == avoids_all(w, basis));
    });
  };
  for (int n = 0; n <= 9; ++n) check(Universe::inversion_sequences(n));
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 8; ++n) check(Universe::words(n, k));
  }
}

TEST_CASE("count_by_layer_number worked examples") {
  CHECK(count_by_layer_number(4, 1) == 1);
  CHECK(count_by_layer_number(4, 2) == 11);
  CHECK(count_by_layer_number(4, 3) == 10);
  CHECK_THROWS_AS(count_by_layer_number(4, 5), std::invalid_argument);
}

TEST_CASE("layer statistics match Eulerian and tetrahedral values, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_by_layer_number(n, 1) == eulerian(n, 1));
    if (n >= 2) {
      BigInt two_layers = 1;
      for (int i = 0; i < n; ++i) two_layers *= 2;
      two_layers -= n + 1;  // 2^n - n - 1
      CHECK(count_by_layer_number(n, 2) == eulerian(n, 2));
      CHECK(count_by_layer_number(n, 2) == two_layers);
    }
    if (n >= 2) CHECK(count_by_layer_number(n, n - 1) == tetrahedral(n));
    CHECK(count_by_layer_number(n, n) == 1);
  }
}

TEST_CASE("binary sortable inversion sequences follow the cake numbers, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    BigInt sortable = 0;
    for_each_member(Universe::words(n, 2), [&](const Word& w) {
      if (!InversionSequence::valid(w)) return;
      if (is_sortable(w, MachineConfig::pop_stack())) ++sortable;
    });
    CHECK(sortable == cake(n));
  }
}

TEST_CASE("WD parameter validation") {
  CHECK_THROWS_AS(WDParameters(3, 2, 3), std::invalid_argument);  // needs k < n
  CHECK_THROWS_AS(WDParameters(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(WDParameters(0, 0, 1), std::invalid_argument);
}

TEST_CASE("WD count worked examples") {
  CHECK(wd_count_formula(WDParameters(3, 2, 2)) == 6);
  CHECK(wd_count_brute(WDParameters(3, 2, 2)) == 6);
  CHECK(wd_count_formula(WDParameters(2, 1, 1)) == 2);
  CHECK(wd_count_brute(WDParameters(3, 2, 1)) == 5);
  CHECK(wd_count_brute(WDParameters(4, 1, 1)) == 4);
  for (int k = 1; k <= 4; ++k) CHECK(wd_count_formula(WDParameters(5, 0, k)) == 1);
}

TEST_CASE("WD formula equals brute enumeration, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (int a = 0; a <= 5; ++a) {
      for (int k = 1; k < n; ++k) {
        CHECK(wd_count_formula(WDParameters(n, a, k)) == wd_count_brute(WDParameters(n, a, k)));
      }
    }
  }
}

TEST_CASE("depth-k DP counter matches machine simulation, n <= 7") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 7; ++n) {
      BigInt brute = 0;
      for_each_member(Universe::inversion_sequences(n), [&](const Word& w) {
        if (is_sortable(w, MachineConfig::pop_stack_of_depth(k))) ++brute;
      });
      CHECK(count_depth_pop_sortable(n, k) == brute);
    }
  }
}

TEST_CASE("depth-1 DP counter gives the Catalan numbers") {
  for (int n = 0; n <= 12; ++n) CHECK(count_depth_pop_sortable(n, 1) == catalan(n));
}

TEST_SUITE_END();
