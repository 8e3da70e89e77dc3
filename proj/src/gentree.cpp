#include "invsort/gentree.hpp"

#include <stdexcept>

namespace invsort {

std::string ruleset_name(RuleSet rs) {
  switch (rs) {
    case RuleSet::Av120_201_210: return "av-120-201-210";
    case RuleSet::Av120_201_1010: return "av-120-201-1010";
    case RuleSet::Av120_201_210_1010: return "av-120-201-210-1010";
  }
  return {};
}

std::optional<RuleSet> ruleset_from_string(std::string_view name) {
  if (name == "av-120-201-210") return RuleSet::Av120_201_210;
  if (name == "av-120-201-1010") return RuleSet::Av120_201_1010;
  if (name == "av-120-201-210-1010") return RuleSet::Av120_201_210_1010;
  return std::nullopt;
}

Basis ruleset_basis(RuleSet rs) {
  switch (rs) {
    case RuleSet::Av120_201_210: return Basis::parse("120+201+210");
    case RuleSet::Av120_201_1010: return Basis::parse("120+201+1010");
    case RuleSet::Av120_201_210_1010: return Basis::parse("120+201+210+1010");
  }
  throw std::invalid_argument("unknown ruleset");
}

bool TreeLabel::structurally_valid() const {
  switch (kind) {
    case Kind::A:
    case Kind::C2:
      return m >= 1 && j == 0;
    case Kind::B:
    case Kind::C3:
      return m >= 1 && 1 <= j && j <= m;
  }
  return false;
}

bool TreeLabel::valid_for(RuleSet rs) const {
  if (!structurally_valid()) return false;
  switch (kind) {
    case Kind::A:
    case Kind::B:
      return true;
    case Kind::C2:
      return rs == RuleSet::Av120_201_210_1010;
    case Kind::C3:
      return rs == RuleSet::Av120_201_1010;
  }
  return false;
}

int TreeLabel::prefix_length() const {
  switch (kind) {
    case Kind::A: return m;          // 0^m
    case Kind::B: return m + 1;      // 0^m j
    case Kind::C2: return m + 2;     // 0^m 1 0
    case Kind::C3: return m + 2;     // 0^m j (j-1)
  }
  return 0;
}

std::string TreeLabel::str() const {
  switch (kind) {
    case Kind::A: return "a_" + std::to_string(m);
    case Kind::B: return "b_{" + std::to_string(m) + "," + std::to_string(j) + "}";
    case Kind::C2: return "c_" + std::to_string(m);
    case Kind::C3: return "c_{" + std::to_string(m) + "," + std::to_string(j) + "}";
  }
  return {};
}

ChildList expand(const TreeLabel& label, RuleSet rs) {
  if (!label.valid_for(rs)) {
    throw std::invalid_argument("label " + label.str() + " invalid for " + ruleset_name(rs));
  }
  const int m = label.m;
  const int j = label.j;
  ChildList children;
  children.reserve(static_cast<size_t>(m) + 3);

  switch (label.kind) {
    case TreeLabel::Kind::A:
      // a_m ~> a_{m+1}, b_{m,1}, ..., b_{m,m}
      children.push_back({TreeLabel::a(m + 1), 1});
      for (int t = 1; t <= m; ++t) children.push_back({TreeLabel::b(m, t), 1});
      break;

    case TreeLabel::Kind::B:
      switch (rs) {
        case RuleSet::Av120_201_210:
          // b_{m,j} ~> (b_{m+2-j,1})^j, b_{m+1,j}, b_{m+1-j,1}, ..., b_{m+1-j,m+1-j}
          children.push_back({TreeLabel::b(m + 2 - j, 1), j});
          break;
        case RuleSet::Av120_201_1010:
          // b_{m,j} ~> c_{m+1-j,1}, ..., c_{m,j}, b_{m+1,j}, b_{m+1-j,1}, ...
          for (int t = 1; t <= j; ++t) children.push_back({TreeLabel::c3(m - j + t, t), 1});
          break;
        case RuleSet::Av120_201_210_1010:
          // b_{m,j} ~> (c_{m+1-j})^j, b_{m+1,j}, b_{m+1-j,1}, ...
          children.push_back({TreeLabel::c2(m + 1 - j), j});
          break;
      }
      children.push_back({TreeLabel::b(m + 1, j), 1});
      for (int t = 1; t <= m + 1 - j; ++t) children.push_back({TreeLabel::b(m + 1 - j, t), 1});
      break;

    case TreeLabel::Kind::C2:
      // c_m ~> c_{m+1}, a_{m+2}, b_{m+1,1}, ..., b_{m+1,m+1}
      children.push_back({TreeLabel::c2(m + 1), 1});
      children.push_back({TreeLabel::a(m + 2), 1});
      for (int t = 1; t <= m + 1; ++t) children.push_back({TreeLabel::b(m + 1, t), 1});
      break;

    case TreeLabel::Kind::C3:
      // c_{m,j} ~> c_{m+2-j,1}, ..., c_{m+1,j}, a_{m+3-j}, b_{m+2-j,1}, ...
      for (int t = 1; t <= j; ++t) children.push_back({TreeLabel::c3(m + 1 - j + t, t), 1});
      children.push_back({TreeLabel::a(m + 3 - j), 1});
      for (int t = 1; t <= m + 2 - j; ++t) children.push_back({TreeLabel::b(m + 2 - j, t), 1});
      break;
  }

  // normalize to a sorted multiset: one entry per label, copies summed
  std::map<TreeLabel, int> merged;
  for (const auto& [child, copies] : children) merged[child] += copies;
  children.assign(merged.begin(), merged.end());
  return children;
}

BigInt LevelProfile::total() const {
  BigInt sum = 0;
  for (const auto& [label, count] : multiplicities) sum += count;
  return sum;
}

LevelProfile root_profile() {
  LevelProfile profile;
  profile.level = 1;
  profile.multiplicities[TreeLabel::a(1)] = 1;
  return profile;
}

LevelProfile advance(const LevelProfile& profile, RuleSet rs) {
  LevelProfile next;
  next.level = profile.level + 1;
  for (const auto& [label, count] : profile.multiplicities) {
    for (const auto& [child, copies] : expand(label, rs)) {
      next.multiplicities[child] += count * copies;
    }
  }
  return next;
}

std::vector<BigInt> level_counts(RuleSet rs, int max_level, int guard) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  if (max_level > guard) {
    throw ResourceLimitError("generating-tree guard exceeded (max level " + std::to_string(guard) +
                             ")");
  }
  std::vector<BigInt> counts;
  counts.reserve(static_cast<size_t>(max_level));
  LevelProfile profile = root_profile();
  counts.push_back(profile.total());
  for (int level = 2; level <= max_level; ++level) {
    profile = advance(profile, rs);
    counts.push_back(profile.total());
  }
  return counts;
}

RuleReport rule_consistency_check(RuleSet rs, int max_m) {
  RuleReport report;
  auto audit = [&](const TreeLabel& label) {
    const ChildList children = expand(label, rs);
    long long total = 0;
    for (const auto& [child, copies] : children) {
      total += copies;
      if (!child.valid_for(rs)) {
        report.ok = false;
        report.violations.push_back(label.str() + " produced invalid child " + child.str());
      }
    }
    const long long expected = label.prefix_length() + 1;
    if (total != expected) {
      report.ok = false;
      report.violations.push_back(label.str() + " has " + std::to_string(total) +
                                  " children, expected " + std::to_string(expected));
    }
  };

  for (int m = 1; m <= max_m; ++m) {
    audit(TreeLabel::a(m));
    for (int j = 1; j <= m; ++j) audit(TreeLabel::b(m, j));
    if (rs == RuleSet::Av120_201_210_1010) audit(TreeLabel::c2(m));
    if (rs == RuleSet::Av120_201_1010) {
      for (int j = 1; j <= m; ++j) audit(TreeLabel::c3(m, j));
    }
  }
  return report;
}

}  // namespace invsort
