#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invsort/bigint.hpp"
#include "invsort/core.hpp"

namespace invsort {

/// Dense rank reduction: each letter replaced by its rank among the distinct
/// letters present, so the result uses exactly {0..d-1}.
Word reduce(const Word& w);

/// A word in reduced form, used as a forbidden pattern.
class Pattern {
 public:
  explicit Pattern(Word w);
  static Pattern parse(std::string_view text) { return Pattern(Word::parse(text)); }

  const Word& word() const { return word_; }
  int size() const { return word_.size(); }
  std::string str() const;

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;

 private:
  Word word_;
};

/// The strictly decreasing pattern (m-1)(m-2)...0 of length m.
Pattern decreasing_pattern(int m);

/// A finite set of forbidden patterns.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Pattern> patterns);

  /// Patterns separated by '+', e.g. "120+201+1010".
  static Basis parse(std::string_view text);

  const std::vector<Pattern>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }

  /// False when some pattern contains another pattern of the set.
  /// Non-minimality is reported as a warning, never an error.
  bool is_minimal() const;

  std::string str() const;

  bool operator==(const Basis&) const = default;

 private:
  std::vector<Pattern> patterns_;
};

/// Containment with word semantics: a subsequence whose pairwise comparisons
/// match the pattern's exactly (equal letters map to equal letters, strict
/// orders to strict orders).
bool contains(const Word& w, const Pattern& p);

bool avoids_all(const Word& w, const Basis& b);

/// Number of index tuples witnessing containment.
long long occurrence_count(const Word& w, const Pattern& p);

/// True iff some occurrence of p uses the last position of w as its final
/// element. Extending an avoider stays avoiding iff this is false for every
/// basis pattern.
bool occurrence_ends_at_back(const Word& w, const Pattern& p);

/// Exact number of members of u avoiding every pattern of b. Prefix-pruned
/// depth-first count; honors INVSORT_THREADS by partitioning on the first
/// branching letters.
BigInt count_avoiders(const Universe& u, const Basis& b);

/// Plain enumerate-and-filter route, kept as the independent oracle for
/// count_avoiders.
BigInt count_avoiders_brute(const Universe& u, const Basis& b);

}  // namespace invsort
