#include <map>
#include <vector>

#include "doctest.h"

#include "invsort/closedforms.hpp"
#include "invsort/patterns.hpp"

using namespace invsort;

namespace {

BigInt brute_count_words_avoiding(int n, int k, const Basis& basis) {
  BigInt total = 0;
  for_each_member(Universe::words(n, k), [&](const Word& w) {
    if (avoids_all(w, basis)) ++total;
  });
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("closedforms");

TEST_CASE("binomial conventions") {
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("catalan closed form matches the Segner convolution") {
  std::vector<BigInt> conv{1};
  for (int n = 1; n <= 20; ++n) {
    BigInt next = 0;
    for (int i = 0; i < n; ++i) next += conv[static_cast<size_t>(i)] * conv[static_cast<size_t>(n - 1 - i)];
    conv.push_back(next);
    CHECK(catalan(n) == conv.back());
  }
}

TEST_CASE("fibonacci convention F_1 = F_2 = 1") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(10) == 55);
}

TEST_CASE("eulerian numbers") {
  for (int n = 1; n <= 8; ++n) CHECK(eulerian(n, 1) == 1);
  CHECK(eulerian(4, 2) == 11);
  CHECK(eulerian(5, 3) == 66);
  CHECK_THROWS_AS(eulerian(4, 5), std::invalid_argument);
}

TEST_CASE("eulerian matches brute-force descent counting, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::map<int, BigInt> by_descents;
    for_each_member(Universe::permutations(n), [&](const Word& w) {
      int descents = 0;
      for (int i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) ++descents;
      }
      ++by_descents[descents];
    });
    for (int k = 1; k <= n; ++k) {
      BigInt expected = by_descents.count(k - 1) ? by_descents[k - 1] : 0;
      CHECK(eulerian(n, k) == expected);
    }
  }
}

TEST_CASE("tetrahedral") {
  CHECK(tetrahedral(1) == 0);
  CHECK(tetrahedral(4) == 10);
  CHECK(tetrahedral(6) == 35);
}

TEST_CASE("cake") {
  CHECK(cake(1) == 1);
  CHECK(cake(4) == 8);
  CHECK(cake(8) == 64);
}

TEST_CASE("words sortable by a depth-2 stack: closed form vs brute force") {
  const Basis basis = Basis::parse("120+210");
  for (int n = 1; n <= 5; ++n) {
    CHECK(burstein_depth2_stack_words(n, 1) == 1);
    for (int k = 1; k <= 4; ++k) {
      CHECK(burstein_depth2_stack_words(n, k) == brute_count_words_avoiding(n, k, basis));
    }
  }
  CHECK(burstein_depth2_stack_words(2, 2) == 4);
  CHECK(burstein_depth2_stack_words(3, 3) == 25);
}

TEST_CASE("bivariate series ring identities") {
  // (1 - y)(1 + y + y^2) truncated at y^2 is 1
  SeriesTable2 a(0, 2), b(0, 2), one(0, 2);
  a.set(0, 0, 1);
  a.set(0, 1, -1);
  b.set(0, 0, 1);
  b.set(0, 1, 1);
  b.set(0, 2, 1);
  one.set(0, 0, 1);
  CHECK(a * b == one);

  // invert(1 - x) truncated at x^3 is the geometric series
  SeriesTable2 c(3, 0);
  c.set(0, 0, 1);
  c.set(1, 0, -1);
  const SeriesTable2 inv = c.inverse();
  for (int i = 0; i <= 3; ++i) CHECK(inv.at(i, 0) == 1);
  CHECK((c * inv).at(0, 0) == 1);

  SeriesTable2 bad(1, 1);
  bad.set(0, 0, 2);
  CHECK_THROWS_AS(bad.inverse(), std::invalid_argument);
  CHECK_THROWS_AS(a + c, std::invalid_argument);  // truncation mismatch
}

TEST_CASE("series inverse with constant term -1") {
  SeriesTable2 s(2, 0);
  s.set(0, 0, -1);
  s.set(1, 0, 1);
  const SeriesTable2 inv = s.inverse();
  SeriesTable2 one(2, 0);
  one.set(0, 0, 1);
  CHECK(s * inv == one);
}

TEST_CASE("series print form") {
  SeriesTable2 s(1, 1);
  s.set(0, 0, 1);
  s.set(1, 1, -2);
  CHECK(s.str() == "(0,0): 1\n(1,1): -2\n");
}

TEST_CASE("Burstein generating function worked coefficients") {
  CHECK(burstein_gf_coefficient(0, 0) == 1);
  CHECK(burstein_gf_coefficient(1, 1) == 1);
  CHECK(burstein_gf_coefficient(2, 2) == 4);
}

TEST_CASE("Burstein generating function vs brute force, n <= 5, k <= 4") {
  const Basis basis = Basis::parse("120+201+210");
  const SeriesTable2 table = burstein_gf_table(5, 4);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= 4; ++k) {
      const BigInt expected =
          k == 0 ? BigInt(n == 0 ? 1 : 0) : brute_count_words_avoiding(n, k, basis);
      CHECK(table.at(n, k) == expected);
    }
  }
}

TEST_CASE("F reconstructs its defining fraction: F*D - N vanishes") {
  const int nx = 6, ny = 6;
  SeriesTable2 numerator(nx, ny), denominator(nx, ny);
  numerator.set(0, 0, 1);
  numerator.set(1, 0, -3);
  numerator.set(2, 0, 2);
  numerator.set(0, 1, -1);
  numerator.set(1, 1, 3);
  numerator.set(2, 1, -3);
  denominator.set(0, 0, 1);
  denominator.set(1, 0, -3);
  denominator.set(2, 0, 2);
  denominator.set(0, 1, -2);
  denominator.set(1, 1, 5);
  denominator.set(2, 1, -3);
  denominator.set(0, 2, 1);
  denominator.set(1, 2, -2);
  const SeriesTable2 f = burstein_gf_table(nx, ny);
  CHECK((f * denominator - numerator).is_zero());
}

TEST_SUITE_END();
