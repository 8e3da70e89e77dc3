#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invsort/bigint.hpp"
#include "invsort/patterns.hpp"

namespace invsort {

/// The three succession-rule systems. Each is named by the basis whose
/// avoiders its tree counts.
enum class RuleSet { Av120_201_210, Av120_201_1010, Av120_201_210_1010 };

std::string ruleset_name(RuleSet rs);
std::optional<RuleSet> ruleset_from_string(std::string_view name);
Basis ruleset_basis(RuleSet rs);

/// Node labels: A(m) stands for the prefix 0^m, B(m,j) for 0^m j with
/// 1 <= j <= m, C2(m) for 0^m 1 0, and C3(m,j) for 0^m j (j-1).
struct TreeLabel {
  enum class Kind { A, B, C2, C3 };

  Kind kind = Kind::A;
  int m = 1;
  int j = 0;  // unused (0) for A and C2

  static TreeLabel a(int m) { return {Kind::A, m, 0}; }
  static TreeLabel b(int m, int j) { return {Kind::B, m, j}; }
  static TreeLabel c2(int m) { return {Kind::C2, m, 0}; }
  static TreeLabel c3(int m, int j) { return {Kind::C3, m, j}; }

  bool structurally_valid() const;
  bool valid_for(RuleSet rs) const;
  /// Length of the represented prefix; a label at tree level n has length n.
  int prefix_length() const;
  std::string str() const;

  auto operator<=>(const TreeLabel&) const = default;
};

/// Children of a label with multiplicities (the rule displays' exponents).
using ChildList = std::vector<std::pair<TreeLabel, int>>;

ChildList expand(const TreeLabel& label, RuleSet rs);

/// Multiplicity-compressed contents of one tree level.
struct LevelProfile {
  int level = 1;
  std::map<TreeLabel, BigInt> multiplicities;

  BigInt total() const;
};

LevelProfile root_profile();
LevelProfile advance(const LevelProfile& profile, RuleSet rs);

/// Node counts for levels 1..max_level; the count at level n equals the
/// number of length-n inversion sequences avoiding the ruleset's basis.
std::vector<BigInt> level_counts(RuleSet rs, int max_level, int guard = 200);

/// Structural audit: every label with m <= max_m must expand to exactly
/// prefix_length() + 1 children (one per one-letter extension), all valid.
struct RuleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

RuleReport rule_consistency_check(RuleSet rs, int max_m);

}  // namespace invsort
