#pragma once

#include <map>
#include <string>
#include <utility>

#include "invsort/bigint.hpp"

namespace invsort {

/// C(x, y) with the convention that the value is 0 when y < 0 or y > x.
BigInt binomial(int x, int y);

/// C_n = C(2n, n) / (n + 1).
BigInt catalan(int n);

/// F_1 = F_2 = 1 convention; F_0 = 0.
BigInt fibonacci(int n);

/// E(n, k): permutations of length n with k-1 descents, 1 <= k <= n.
BigInt eulerian(int n, int k);

/// C(n+1, 3).
BigInt tetrahedral(int n);

/// C(n-1,0) + C(n-1,1) + C(n-1,2) + C(n-1,3).
BigInt cake(int n);

/// Words of length n over a k-letter alphabet avoiding {120, 210}:
/// (1 - (-1)^k)/2 + 2^n * sum_{i=0..floor((k-2)/2)} C(n+k-3-2i, n-1).
BigInt burstein_depth2_stack_words(int n, int k);

/// Exact truncated bivariate polynomial with BigInt coefficients. Entries are
/// kept only for degrees within the truncation orders; absent means zero.
class SeriesTable2 {
 public:
  using Key = std::pair<int, int>;

  SeriesTable2(int max_x, int max_y);

  int max_x() const { return max_x_; }
  int max_y() const { return max_y_; }

  BigInt at(int dx, int dy) const;
  void set(int dx, int dy, BigInt value);
  void add_to(int dx, int dy, const BigInt& value);

  const std::map<Key, BigInt>& terms() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }

  SeriesTable2 operator+(const SeriesTable2& other) const;
  SeriesTable2 operator-(const SeriesTable2& other) const;
  SeriesTable2 operator*(const SeriesTable2& other) const;

  /// Multiplicative inverse within the truncated ring; requires constant
  /// term +1 or -1. Computed by the geometric series of (1 - D/d0).
  SeriesTable2 inverse() const;

  /// Sparse "(n,k): coefficient" lines in lexicographic degree order.
  std::string str() const;

  bool operator==(const SeriesTable2&) const = default;

 private:
  void check_compatible(const SeriesTable2& other) const;

  int max_x_;
  int max_y_;
  std::map<Key, BigInt> coefficients_;
};

/// Burstein's generating function for words over [k] avoiding {120,201,210},
/// expanded to the given truncation orders:
///   F(x,y) = ((1-x)(1-2x) - ((1-x)(1-2x)+x^2) y)
///          / ((1-x)(1-2x) - (1-x)(2-3x) y + (1-2x) y^2).
SeriesTable2 burstein_gf_table(int max_x, int max_y);

/// Coefficient of x^n y^k in F(x, y).
BigInt burstein_gf_coefficient(int n, int k);

}  // namespace invsort
