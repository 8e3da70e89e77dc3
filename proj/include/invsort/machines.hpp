#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsort/core.hpp"
#include "invsort/patterns.hpp"

namespace invsort {

enum class MachineKind { Stack, PopStack, TortoisePopStack, GeneralizedPopStack };

std::string machine_kind_name(MachineKind kind);
std::optional<MachineKind> machine_kind_from_string(std::string_view name);

/// Which device, with its depth bound (distinct values) and insertion reach r.
struct MachineConfig {
  MachineKind kind = MachineKind::Stack;
  std::optional<int> depth;  // distinct-value bound; nullopt = unbounded
  int r = 1;                 // value positions reachable by a push

  static MachineConfig stack() { return {MachineKind::Stack, std::nullopt, 1}; }
  static MachineConfig stack_of_depth(int k) { return {MachineKind::Stack, k, 1}; }
  static MachineConfig pop_stack() { return {MachineKind::PopStack, std::nullopt, 1}; }
  static MachineConfig pop_stack_of_depth(int k) { return {MachineKind::PopStack, k, 1}; }
  static MachineConfig tortoise() { return {MachineKind::TortoisePopStack, std::nullopt, 1}; }
  static MachineConfig generalized_pop_stack(int r, std::optional<int> depth) {
    return {MachineKind::GeneralizedPopStack, depth, r};
  }

  void validate() const;
  std::string str() const;
};

/// One simulator step, recorded after the action took effect. The multiset of
/// remaining input + stack + output is always the input's multiset.
struct TraceStep {
  enum class Action { Push, PopOne, PopAll, Drain };
  Action action;
  int letter = -1;  // pushed letter, -1 for pops
  int cursor = 0;   // input positions consumed so far
  Letters stack;    // bottom to top
  Letters output;
};

struct Trace {
  std::vector<TraceStep> steps;

  /// Pop operations performed, counting a pop-all or drain as one pop.
  int pop_count() const;
  std::string str() const;
};

Word stack_sort(const Word& w, Trace* trace = nullptr);
Word pop_stack_sort(const Word& w, Trace* trace = nullptr);
Word depth_limited_stack_sort(const Word& w, int k, Trace* trace = nullptr);
Word depth_limited_pop_stack_sort(const Word& w, int k, Trace* trace = nullptr);
Word two_one_pop_stack_depth2_sort(const Word& w, Trace* trace = nullptr);
Word tortoise_pop_stack_sort(const Word& w, Trace* trace = nullptr);

/// Pop stack output computed as the reversal of each maximal weakly
/// decreasing run; independent route used to cross-check pop_stack_sort.
Word pop_stack_sort_by_runs(const Word& w);

/// Dispatch over the six supported greedy configurations.
Word simulate(const Word& w, const MachineConfig& config, Trace* trace = nullptr);

bool is_sortable(const Word& w, const MachineConfig& config);

/// Characterization basis of the sortable class for a supported config.
Basis sortable_basis(const MachineConfig& config);

/// Nondeterministic reachability oracle: true iff some legal move sequence
/// sorts w. Pushes may enter any of the top min(r, value groups + 1) value
/// positions subject to the depth bound (and, for the tortoise, the no-equal-
/// entries rule); pops emit the top entry (stack) or the whole stack (pop
/// stack kinds). States whose output is already non-sorted are pruned.
bool sortable_by_search(const Word& w, const MachineConfig& config, int guard = 8);

}  // namespace invsort
