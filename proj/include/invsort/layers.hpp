#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsort/bigint.hpp"
#include "invsort/core.hpp"

namespace invsort {

/// Maximal weakly decreasing runs of w, in order. Concatenation restores w.
std::vector<Word> weakly_decreasing_runs(const Word& w);

struct LayerDecomposition {
  std::vector<Word> layers;

  int layer_count() const { return static_cast<int>(layers.size()); }
  /// Layers joined by '|', e.g. "2110|332|75" (compact digits when <= 9).
  std::string str() const;
};

/// Splits w into maximal weakly decreasing runs and accepts iff every run's
/// last (smallest) letter is >= the previous run's first (largest) letter.
/// nullopt means not layered.
std::optional<LayerDecomposition> layer_decomposition(const Word& w);

std::optional<int> layer_count(const Word& w);

/// Layered inversion sequences of length n with exactly k layers, by
/// exhaustive filtering over I_n.
BigInt count_by_layer_number(int n, int k);

/// Parameters for counting weakly decreasing words: length n, first value a,
/// at most k descents.
struct WDParameters {
  int n = 1;
  int a = 0;
  int k = 1;

  WDParameters(int n_, int a_, int k_);
};

/// Closed form 1 + sum_{j=1..k} C(n-1,j) C(a,j).
BigInt wd_count_formula(const WDParameters& p);

/// Direct enumeration oracle for wd_count_formula.
BigInt wd_count_brute(const WDParameters& p);

/// Inversion sequences of length n sortable by a pop stack of depth k,
/// counted by dynamic programming over (previous layer max, current layer
/// first/last value, distinct values used). Polynomial in n; cross-checked
/// against machine simulation in the tests.
BigInt count_depth_pop_sortable(int n, int k);

}  // namespace invsort
