#include "invsort/closedforms.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace invsort {

BigInt binomial(int x, int y) {
  if (y < 0 || y > x) return 0;
  y = std::min(y, x - y);
  BigInt result = 1;
  for (int i = 1; i <= y; ++i) {
    result *= x - y + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci needs n >= 0");
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigInt eulerian(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("eulerian needs 1 <= k <= n");
  // row[j] = permutations of length m with j descents
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      if (j < m - 1) next[static_cast<size_t>(j)] += (j + 1) * row[static_cast<size_t>(j)];
      if (j >= 1) next[static_cast<size_t>(j)] += (m - j) * row[static_cast<size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k - 1)];
}

BigInt tetrahedral(int n) {
  if (n < 1) throw std::invalid_argument("tetrahedral needs n >= 1");
  return binomial(n + 1, 3);
}

BigInt cake(int n) {
  if (n < 1) throw std::invalid_argument("cake needs n >= 1");
  BigInt total = 0;
  for (int i = 0; i <= 3; ++i) total += binomial(n - 1, i);
  return total;
}

BigInt burstein_depth2_stack_words(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("needs n >= 1, k >= 1");
  BigInt total = (k % 2 == 1) ? 1 : 0;  // (1 - (-1)^k) / 2
  BigInt pow2 = 1;
  for (int i = 0; i < n; ++i) pow2 *= 2;
  BigInt sum = 0;
  for (int i = 0; 2 * i <= k - 2; ++i) {
    sum += binomial(n + k - 3 - 2 * i, n - 1);
  }
  return total + pow2 * sum;
}

SeriesTable2::SeriesTable2(int max_x, int max_y) : max_x_(max_x), max_y_(max_y) {
  if (max_x < 0 || max_y < 0) throw std::invalid_argument("truncation orders must be >= 0");
}

BigInt SeriesTable2::at(int dx, int dy) const {
  auto it = coefficients_.find({dx, dy});
  return it == coefficients_.end() ? BigInt(0) : it->second;
}

void SeriesTable2::set(int dx, int dy, BigInt value) {
  if (dx < 0 || dy < 0 || dx > max_x_ || dy > max_y_) {
    throw std::invalid_argument("degree outside truncation");
  }
  if (value == 0) {
    coefficients_.erase({dx, dy});
  } else {
    coefficients_[{dx, dy}] = std::move(value);
  }
}

void SeriesTable2::add_to(int dx, int dy, const BigInt& value) { set(dx, dy, at(dx, dy) + value); }

void SeriesTable2::check_compatible(const SeriesTable2& other) const {
  if (max_x_ != other.max_x_ || max_y_ != other.max_y_) {
    throw std::invalid_argument("series truncation orders differ");
  }
}

SeriesTable2 SeriesTable2::operator+(const SeriesTable2& other) const {
  check_compatible(other);
  SeriesTable2 result = *this;
  for (const auto& [key, c] : other.coefficients_) result.add_to(key.first, key.second, c);
  return result;
}

SeriesTable2 SeriesTable2::operator-(const SeriesTable2& other) const {
  check_compatible(other);
  SeriesTable2 result = *this;
  for (const auto& [key, c] : other.coefficients_) result.add_to(key.first, key.second, -c);
  return result;
}

SeriesTable2 SeriesTable2::operator*(const SeriesTable2& other) const {
  check_compatible(other);
  SeriesTable2 result(max_x_, max_y_);
  for (const auto& [ka, ca] : coefficients_) {
    for (const auto& [kb, cb] : other.coefficients_) {
      const int dx = ka.first + kb.first;
      const int dy = ka.second + kb.second;
      if (dx > max_x_ || dy > max_y_) continue;
      result.add_to(dx, dy, ca * cb);
    }
  }
  return result;
}

SeriesTable2 SeriesTable2::inverse() const {
  const BigInt c0 = at(0, 0);
  if (c0 != 1 && c0 != -1) {
    throw std::invalid_argument("series inverse requires constant term +1 or -1");
  }
  // 1/(c0 - E) = (1/c0) * sum_m (E/c0)^m with E carrying no constant term.
  SeriesTable2 eps(max_x_, max_y_);
  for (const auto& [key, c] : coefficients_) {
    if (key.first == 0 && key.second == 0) continue;
    eps.set(key.first, key.second, c0 == 1 ? -c : c);
  }
  SeriesTable2 result(max_x_, max_y_);
  SeriesTable2 power(max_x_, max_y_);
  result.set(0, 0, 1);
  power.set(0, 0, 1);
  for (int m = 1; m <= max_x_ + max_y_; ++m) {
    power = power * eps;
    if (power.is_zero()) break;
    result = result + power;
  }
  if (c0 == -1) {
    SeriesTable2 negated(max_x_, max_y_);
    for (const auto& [key, c] : result.terms()) negated.set(key.first, key.second, -c);
    result = negated;
  }
  return result;
}

std::string SeriesTable2::str() const {
  std::ostringstream out;
  for (const auto& [key, c] : coefficients_) {
    out << "(" << key.first << "," << key.second << "): " << c << "\n";
  }
  return out.str();
}

SeriesTable2 burstein_gf_table(int max_x, int max_y) {
  // (1-x)(1-2x) = 1 - 3x + 2x^2 and (1-x)(2-3x) = 2 - 5x + 3x^2
  SeriesTable2 numerator(max_x, max_y);
  numerator.set(0, 0, 1);
  if (max_x >= 1) numerator.set(1, 0, -3);
  if (max_x >= 2) numerator.set(2, 0, 2);
  if (max_y >= 1) {
    numerator.set(0, 1, -1);
    if (max_x >= 1) numerator.set(1, 1, 3);
    if (max_x >= 2) numerator.set(2, 1, -3);  // -(2x^2 + x^2)
  }

  SeriesTable2 denominator(max_x, max_y);
  denominator.set(0, 0, 1);
  if (max_x >= 1) denominator.set(1, 0, -3);
  if (max_x >= 2) denominator.set(2, 0, 2);
  if (max_y >= 1) {
    denominator.set(0, 1, -2);
    if (max_x >= 1) denominator.set(1, 1, 5);
    if (max_x >= 2) denominator.set(2, 1, -3);
  }
  if (max_y >= 2) {
    denominator.set(0, 2, 1);
    if (max_x >= 1) denominator.set(1, 2, -2);
  }

  return numerator * denominator.inverse();
}

BigInt burstein_gf_coefficient(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("needs n >= 0, k >= 0");
  return burstein_gf_table(n, k).at(n, k);
}

}  // namespace invsort
