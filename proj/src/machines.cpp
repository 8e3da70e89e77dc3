#include "invsort/machines.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace invsort {

namespace {

int distinct_count_of(const Letters& v) {
  std::set<int> s(v.begin(), v.end());
  return static_cast<int>(s.size());
}

int distinct_with(const Letters& stack, int x) {
  std::set<int> s(stack.begin(), stack.end());
  s.insert(x);
  return static_cast<int>(s.size());
}

// Shared simulator scaffolding; the stack vector runs bottom to top.
struct Sim {
  const Letters& input;
  Trace* trace;
  Letters stack;
  Letters output;
  int cursor = 0;

  Sim(const Word& w, Trace* t) : input(w.letters()), trace(t) {}

  bool input_left() const { return cursor < static_cast<int>(input.size()); }
  int next() const { return input[static_cast<size_t>(cursor)]; }
  int top() const { return stack.back(); }

  void record(TraceStep::Action action, int letter) {
    if (trace) trace->steps.push_back({action, letter, cursor, stack, output});
  }

  void push_top() {
    const int x = next();
    stack.push_back(x);
    ++cursor;
    record(TraceStep::Action::Push, x);
  }

  // 1-based position counted from the top; position p+1 sits one entry
  // deeper than position p.
  void push_at_position(int pos_from_top) {
    const int x = next();
    const size_t idx = stack.size() - static_cast<size_t>(pos_from_top - 1);
    stack.insert(stack.begin() + static_cast<long>(idx), x);
    ++cursor;
    record(TraceStep::Action::Push, x);
  }

  void pop_one() {
    output.push_back(stack.back());
    stack.pop_back();
    record(TraceStep::Action::PopOne, -1);
  }

  void pop_all() {
    while (!stack.empty()) {
      output.push_back(stack.back());
      stack.pop_back();
    }
    record(TraceStep::Action::PopAll, -1);
  }

  Word drain() {
    if (!stack.empty()) {
      while (!stack.empty()) {
        output.push_back(stack.back());
        stack.pop_back();
      }
      record(TraceStep::Action::Drain, -1);
    }
    return Word(std::move(output));
  }
};

}  // namespace

std::string machine_kind_name(MachineKind kind) {
  switch (kind) {
    case MachineKind::Stack: return "stack";
    case MachineKind::PopStack: return "pop-stack";
    case MachineKind::TortoisePopStack: return "tortoise-pop-stack";
    case MachineKind::GeneralizedPopStack: return "generalized-pop-stack";
  }
  return {};
}

std::optional<MachineKind> machine_kind_from_string(std::string_view name) {
  if (name == "stack") return MachineKind::Stack;
  if (name == "pop-stack" || name == "popstack") return MachineKind::PopStack;
  if (name == "tortoise-pop-stack" || name == "tortoise") return MachineKind::TortoisePopStack;
  if (name == "generalized-pop-stack" || name == "r1-pop-stack") return MachineKind::GeneralizedPopStack;
  return std::nullopt;
}

void MachineConfig::validate() const {
  if (r < 1) throw std::invalid_argument("machine r must be >= 1");
  if (depth && *depth < 1) throw std::invalid_argument("machine depth must be >= 1");
  if (r != 1 && kind != MachineKind::GeneralizedPopStack) {
    throw std::invalid_argument("r > 1 requires the generalized pop stack");
  }
}

std::string MachineConfig::str() const {
  std::string out = machine_kind_name(kind);
  if (depth) out += " depth=" + std::to_string(*depth);
  if (kind == MachineKind::GeneralizedPopStack) out += " r=" + std::to_string(r);
  return out;
}

int Trace::pop_count() const {
  int count = 0;
  for (const TraceStep& s : steps) {
    if (s.action != TraceStep::Action::Push) ++count;
  }
  return count;
}

std::string Trace::str() const {
  std::ostringstream out;
  for (const TraceStep& s : steps) {
    switch (s.action) {
      case TraceStep::Action::Push: out << "push " << s.letter; break;
      case TraceStep::Action::PopOne: out << "pop"; break;
      case TraceStep::Action::PopAll: out << "pop-all"; break;
      case TraceStep::Action::Drain: out << "drain"; break;
    }
    out << " | stack=" << Word(s.stack).str() << " | output=" << Word(s.output).str() << "\n";
  }
  return out.str();
}

Word stack_sort(const Word& w, Trace* trace) {
  Sim sim(w, trace);
  while (sim.input_left()) {
    if (sim.stack.empty() || sim.next() <= sim.top()) {
      sim.push_top();
    } else {
      sim.pop_one();
    }
  }
  return sim.drain();
}

Word pop_stack_sort(const Word& w, Trace* trace) {
  Sim sim(w, trace);
  while (sim.input_left()) {
    if (sim.stack.empty() || sim.next() <= sim.top()) {
      sim.push_top();
    } else {
      sim.pop_all();
    }
  }
  return sim.drain();
}

Word depth_limited_stack_sort(const Word& w, int k, Trace* trace) {
  if (k < 1) throw std::invalid_argument("depth must be >= 1");
  Sim sim(w, trace);
  while (sim.input_left()) {
    if (sim.stack.empty()) {
      sim.push_top();
    } else if (sim.next() <= sim.top() && distinct_with(sim.stack, sim.next()) <= k) {
      sim.push_top();
    } else {
      sim.pop_one();
    }
  }
  return sim.drain();
}

Word depth_limited_pop_stack_sort(const Word& w, int k, Trace* trace) {
  if (k < 1) throw std::invalid_argument("depth must be >= 1");
  Sim sim(w, trace);
  while (sim.input_left()) {
    if (sim.stack.empty()) {
      sim.push_top();
    } else if (sim.next() <= sim.top() && distinct_with(sim.stack, sim.next()) <= k) {
      sim.push_top();
    } else {
      sim.pop_all();
    }
  }
  return sim.drain();
}

Word two_one_pop_stack_depth2_sort(const Word& w, Trace* trace) {
  Sim sim(w, trace);
  int smallest_copies = 0;  // the s counter: copies of the smallest value held
  while (sim.input_left()) {
    const int x = sim.next();
    if (sim.stack.empty()) {
      sim.push_top();
      smallest_copies = 1;
      continue;
    }
    const int top = sim.top();            // smallest value by invariant
    const int bottom = sim.stack.front();  // largest value by invariant
    const bool two_distinct = bottom != top;
    if (x == top) {
      sim.push_top();
      ++smallest_copies;
    } else if (two_distinct && x == bottom) {
      // matches the larger value group: slot in just below the smallest ones
      sim.push_at_position(smallest_copies + 1);
    } else if (two_distinct) {
      sim.pop_all();
    } else if (x < top) {
      sim.push_top();
      smallest_copies = 1;
    } else {
      sim.pop_all();
    }
  }
  return sim.drain();
}

Word tortoise_pop_stack_sort(const Word& w, Trace* trace) {
  Sim sim(w, trace);
  while (sim.input_left()) {
    if (sim.stack.empty() || sim.next() < sim.top()) {
      sim.push_top();
    } else {
      sim.pop_all();
    }
  }
  return sim.drain();
}

Word pop_stack_sort_by_runs(const Word& w) {
  const Letters& v = w.letters();
  Letters out;
  out.reserve(v.size());
  size_t i = 0;
  while (i < v.size()) {
    size_t j = i + 1;
    while (j < v.size() && v[j] <= v[j - 1]) ++j;  // maximal weakly decreasing run
    for (size_t t = j; t > i; --t) out.push_back(v[t - 1]);
    i = j;
  }
  return Word(std::move(out));
}

Word simulate(const Word& w, const MachineConfig& config, Trace* trace) {
  config.validate();
  switch (config.kind) {
    case MachineKind::Stack:
      return config.depth ? depth_limited_stack_sort(w, *config.depth, trace)
                          : stack_sort(w, trace);
    case MachineKind::PopStack:
      return config.depth ? depth_limited_pop_stack_sort(w, *config.depth, trace)
                          : pop_stack_sort(w, trace);
    case MachineKind::TortoisePopStack:
      if (config.depth) throw std::invalid_argument("depth-limited tortoise is not supported");
      return tortoise_pop_stack_sort(w, trace);
    case MachineKind::GeneralizedPopStack:
      if (config.r == 1) {
        return config.depth ? depth_limited_pop_stack_sort(w, *config.depth, trace)
                            : pop_stack_sort(w, trace);
      }
      if (config.r == 2 && config.depth && *config.depth == 2) {
        return two_one_pop_stack_depth2_sort(w, trace);
      }
      throw std::invalid_argument("no greedy simulator for " + config.str() +
                                  "; use sortable_by_search");
  }
  throw std::invalid_argument("unknown machine kind");
}

bool is_sortable(const Word& w, const MachineConfig& config) {
  return is_sorted(simulate(w, config));
}

Basis sortable_basis(const MachineConfig& config) {
  config.validate();
  const Pattern p120 = Pattern::parse("120");
  const Pattern p201 = Pattern::parse("201");
  const Pattern p1010 = Pattern::parse("1010");
  switch (config.kind) {
    case MachineKind::Stack: {
      std::vector<Pattern> ps{p120};
      if (config.depth) ps.push_back(decreasing_pattern(*config.depth + 1));
      return Basis(std::move(ps));
    }
    case MachineKind::PopStack: {
      std::vector<Pattern> ps{p120, p201, p1010};
      if (config.depth) ps.push_back(decreasing_pattern(*config.depth + 1));
      return Basis(std::move(ps));
    }
    case MachineKind::TortoisePopStack:
      if (config.depth) break;
      return Basis({p120, p201, Pattern::parse("110"), Pattern::parse("100")});
    case MachineKind::GeneralizedPopStack:
      if (config.r == 1) return sortable_basis({MachineKind::PopStack, config.depth, 1});
      if (config.r == 2 && config.depth && *config.depth == 2) {
        return Basis({p120, p201, Pattern::parse("210")});
      }
      break;
  }
  throw std::invalid_argument("no characterization basis for " + config.str());
}

namespace {

struct SearchState {
  int pos;
  int last;
  Letters stack;
  bool operator==(const SearchState&) const = default;
};

struct SearchStateHash {
  size_t operator()(const SearchState& s) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<size_t>(s.pos));
    mix(static_cast<size_t>(s.last) + 7919);
    for (int x : s.stack) mix(static_cast<size_t>(x) + 1);
    return h;
  }
};

// Start indices of the value groups, counted from the top of the stack.
std::vector<int> group_starts_from_top(const Letters& stack) {
  std::vector<int> starts;
  int i = static_cast<int>(stack.size()) - 1;
  while (i >= 0) {
    int j = i;
    while (j > 0 && stack[static_cast<size_t>(j - 1)] == stack[static_cast<size_t>(i)]) --j;
    starts.push_back(j);
    i = j - 1;
  }
  return starts;
}

struct Searcher {
  const Letters& input;
  MachineKind kind;
  std::optional<int> depth;
  int reach;
  bool pop_all;
  std::unordered_set<SearchState, SearchStateHash> visited;

  bool run(SearchState state) {
    if (state.pos == static_cast<int>(input.size()) && state.stack.empty()) return true;
    if (!visited.insert(state).second) return false;

    if (state.pos < static_cast<int>(input.size())) {
      const int v = input[static_cast<size_t>(state.pos)];
      bool legal_value = true;
      if (kind == MachineKind::TortoisePopStack) {
        legal_value = std::find(state.stack.begin(), state.stack.end(), v) == state.stack.end();
      }
      if (depth && distinct_with(state.stack, v) > *depth) legal_value = false;
      if (legal_value) {
        const std::vector<int> starts = group_starts_from_top(state.stack);
        const int positions = std::min(reach, static_cast<int>(starts.size()) + 1);
        for (int p = 1; p <= positions; ++p) {
          SearchState next = state;
          ++next.pos;
          const size_t idx =
              p == 1 ? next.stack.size() : static_cast<size_t>(starts[static_cast<size_t>(p - 2)]);
          next.stack.insert(next.stack.begin() + static_cast<long>(idx), v);
          if (run(std::move(next))) return true;
        }
      }
    }

    if (!state.stack.empty()) {
      if (pop_all) {
        // Emitting top to bottom keeps the output sorted only when the stack
        // is weakly decreasing bottom to top and the top is >= the last output.
        bool ok = state.stack.back() >= state.last;
        for (size_t i = 0; ok && i + 1 < state.stack.size(); ++i) {
          ok = state.stack[i] >= state.stack[i + 1];
        }
        if (ok) {
          SearchState next{state.pos, state.stack.front(), {}};
          if (run(std::move(next))) return true;
        }
      } else {
        const int t = state.stack.back();
        if (t >= state.last) {
          SearchState next = state;
          next.last = t;
          next.stack.pop_back();
          if (run(std::move(next))) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

bool sortable_by_search(const Word& w, const MachineConfig& config, int guard) {
  config.validate();
  if (w.size() > guard) {
    throw ResourceLimitError("search guard exceeded: length " + std::to_string(w.size()) +
                             " > " + std::to_string(guard));
  }
  Searcher searcher{w.letters(),
                    config.kind,
                    config.depth,
                    config.kind == MachineKind::GeneralizedPopStack ? config.r : 1,
                    config.kind != MachineKind::Stack,
                    {}};
  return searcher.run(SearchState{0, 0, {}});
}

}  // namespace invsort
