#include "invsort/layers.hpp"

#include <map>
#include <tuple>

#include "invsort/closedforms.hpp"

namespace invsort {

std::vector<Word> weakly_decreasing_runs(const Word& w) {
  const Letters& v = w.letters();
  std::vector<Word> runs;
  size_t i = 0;
  while (i < v.size()) {
    size_t j = i + 1;
    while (j < v.size() && v[j] <= v[j - 1]) ++j;
    runs.emplace_back(Letters(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(j)));
    i = j;
  }
  return runs;
}

std::string LayerDecomposition::str() const {
  bool compact = true;
  for (const Word& layer : layers) compact = compact && layer.max_letter() <= 9;
  std::string out;
  for (size_t i = 0; i < layers.size(); ++i) {
    if (i) out += '|';
    if (compact) {
      for (int x : layers[i].letters()) out += static_cast<char>('0' + x);
    } else {
      out += layers[i].str();
    }
  }
  return out;
}

std::optional<LayerDecomposition> layer_decomposition(const Word& w) {
  std::vector<Word> runs = weakly_decreasing_runs(w);
  for (size_t i = 0; i + 1 < runs.size(); ++i) {
    // last (smallest) letter of the next run vs first (largest) of this one
    if (runs[i + 1].letters().back() < runs[i].letters().front()) return std::nullopt;
  }
  return LayerDecomposition{std::move(runs)};
}

std::optional<int> layer_count(const Word& w) {
  auto decomposition = layer_decomposition(w);
  if (!decomposition) return std::nullopt;
  return decomposition->layer_count();
}

BigInt count_by_layer_number(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const Universe u = Universe::inversion_sequences(n);
  check_universe_guard(u);
  BigInt total = 0;
  for_each_member(u, [&](const Word& w) {
    auto count = layer_count(w);
    if (count && *count == k) ++total;
  });
  return total;
}

WDParameters::WDParameters(int n_, int a_, int k_) : n(n_), a(a_), k(k_) {
  if (n < 1 || a < 0 || k < 1 || k >= n) {
    throw std::invalid_argument("WD parameters need n >= 1, a >= 0, 1 <= k < n");
  }
}

BigInt wd_count_formula(const WDParameters& p) {
  BigInt total = 1;
  for (int j = 1; j <= p.k; ++j) {
    total += binomial(p.n - 1, j) * binomial(p.a, j);
  }
  return total;
}

namespace {

void wd_rec(int remaining, int prev, int descents, int max_descents, BigInt& total) {
  if (remaining == 0) {
    ++total;
    return;
  }
  for (int x = prev; x >= 0; --x) {
    const int d = descents + (x < prev ? 1 : 0);
    if (d > max_descents) break;  // smaller x only adds more descents
    wd_rec(remaining - 1, x, d, max_descents, total);
  }
}

}  // namespace

BigInt wd_count_brute(const WDParameters& p) {
  BigInt total = 0;
  wd_rec(p.n - 1, p.a, 0, p.k, total);
  return total;
}

BigInt count_depth_pop_sortable(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("need n >= 0, k >= 1");
  if (n > 100) throw ResourceLimitError("depth-pop DP guard exceeded (max n=100)");
  if (n == 0) return 1;

  // State after placing i letters: (max of previous layer, first letter of the
  // current layer, last letter of the current layer, distinct values in it).
  // Every letter of the current layer must be >= the previous layer's max, so
  // the inter-layer bound can be enforced letter by letter.
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, BigInt> states;
  states[{-1, 0, 0, 1}] = 1;  // e_1 = 0
  for (int i = 1; i < n; ++i) {
    std::map<Key, BigInt> next;
    for (const auto& [key, ways] : states) {
      const auto [prev_max, cur_first, cur_last, distinct] = key;
      for (int x = 0; x <= i; ++x) {  // e_{i+1} <= i
        if (x <= cur_last) {
          if (x < prev_max) continue;
          const int d = distinct + (x < cur_last ? 1 : 0);
          if (d > k) continue;
          next[{prev_max, cur_first, x, d}] += ways;
        } else if (x >= cur_first) {
          next[{cur_first, x, x, 1}] += ways;  // strict ascent starts a layer
        }
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [key, ways] : states) total += ways;
  return total;
}

}  // namespace invsort
