#include <algorithm>
#include <map>

#include "doctest.h"

#include "invsort/layers.hpp"
#include "invsort/machines.hpp"

using namespace invsort;

namespace {

const std::vector<MachineConfig>& all_greedy_configs() {
  static const std::vector<MachineConfig> configs = {
      MachineConfig::stack(),
      MachineConfig::pop_stack(),
      MachineConfig::stack_of_depth(1),
      MachineConfig::stack_of_depth(2),
      MachineConfig::stack_of_depth(3),
      MachineConfig::pop_stack_of_depth(1),
      MachineConfig::pop_stack_of_depth(2),
      MachineConfig::pop_stack_of_depth(3),
      MachineConfig::generalized_pop_stack(2, 2),
      MachineConfig::tortoise(),
  };
  return configs;
}

Letters sorted_copy(const Word& w) {
  Letters v = w.letters();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("machines");

TEST_CASE("stack sort") {
  CHECK(stack_sort(Word::parse("120")).str() == "1,0,2");
  CHECK(stack_sort(Word::parse("010")).str() == "0,0,1");
  CHECK(stack_sort(Word::parse("000")).str() == "0,0,0");
}

TEST_CASE("pop stack sort") {
  CHECK(pop_stack_sort(Word::parse("1010")).str() == "0,1,0,1");
  CHECK(pop_stack_sort(Word::parse("0110")).str() == "0,0,1,1");
  CHECK(pop_stack_sort(Word{}) == Word{});
}

TEST_CASE("depth limited stack sort") {
  CHECK_FALSE(is_sorted(depth_limited_stack_sort(Word::parse("210"), 2)));
  CHECK(depth_limited_stack_sort(Word::parse("1100"), 2).str() == "0,0,1,1");
  CHECK(depth_limited_stack_sort(Word::parse("10"), 1).str() == "1,0");
  CHECK_THROWS_AS(depth_limited_stack_sort(Word::parse("10"), 0), std::invalid_argument);
}

TEST_CASE("depth limited pop stack sort") {
  CHECK(depth_limited_pop_stack_sort(Word::parse("210"), 2).str() == "1,2,0");
  CHECK(depth_limited_pop_stack_sort(Word::parse("10"), 1).str() == "1,0");
  CHECK(depth_limited_pop_stack_sort(Word::parse("1100"), 2).str() == "0,0,1,1");
}

TEST_CASE("(2,1)-pop stack of depth 2") {
  CHECK(two_one_pop_stack_depth2_sort(Word::parse("021")).str() == "0,1,2");
  CHECK(two_one_pop_stack_depth2_sort(Word::parse("201")).str() == "0,2,1");
  // the middle insertion at position s+1
  CHECK(two_one_pop_stack_depth2_sort(Word::parse("1011")).str() == "0,1,1,1");
}

TEST_CASE("tortoise pop stack sort") {
  CHECK(tortoise_pop_stack_sort(Word::parse("100")).str() == "0,1,0");
  CHECK(tortoise_pop_stack_sort(Word::parse("110")).str() == "1,0,1");
  CHECK(tortoise_pop_stack_sort(Word::parse("10")).str() == "0,1");
}

TEST_CASE("is_sortable dispatch") {
  CHECK_FALSE(is_sortable(Word::parse("0120"), MachineConfig::pop_stack()));
  CHECK(is_sortable(Word::parse("0101"), MachineConfig::pop_stack()));
  for (const auto& cfg : all_greedy_configs()) {
    CHECK(is_sortable(Word::parse("00000"), cfg));  // constant words always sort
  }
}

TEST_CASE("unsupported configurations are rejected") {
  CHECK_THROWS_AS(simulate(Word::parse("10"), MachineConfig::generalized_pop_stack(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate(Word::parse("10"), {MachineKind::TortoisePopStack, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate(Word::parse("10"), {MachineKind::Stack, std::nullopt, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sortable_basis(MachineConfig::generalized_pop_stack(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("search oracle examples") {
  CHECK(sortable_by_search(Word::parse("021"), MachineConfig::generalized_pop_stack(2, 2)));
  CHECK_FALSE(sortable_by_search(Word::parse("201"), MachineConfig::generalized_pop_stack(2, 2)));
  CHECK(sortable_by_search(Word::parse("10"), MachineConfig::stack()));
  CHECK_THROWS_AS(sortable_by_search(Word::parse("010101010"), MachineConfig::stack()),
                  ResourceLimitError);
}

TEST_CASE("multiset preservation, n <= 8") {
  auto check = [&](const Universe& u) {
    for_each_member(u, [&](const Word& w) {
      for (const auto& cfg : all_greedy_configs()) {
        CHECK(sorted_copy(simulate(w, cfg)) == sorted_copy(w));
      }
    });
  };
  for (int n = 0; n <= 8; ++n) {
    check(Universe::words(n, 3));
    check(Universe::inversion_sequences(n));
  }
}

TEST_CASE("trace records conserve the input multiset") {
  const Word w = Word::parse("2,1,1,0,3,3,2,7,5");
  for (const auto& cfg : all_greedy_configs()) {
    Trace trace;
    simulate(w, cfg, &trace);
    for (const TraceStep& step : trace.steps) {
      Letters combined(w.letters().begin() + step.cursor, w.letters().end());
      combined.insert(combined.end(), step.stack.begin(), step.stack.end());
      combined.insert(combined.end(), step.output.begin(), step.output.end());
      std::sort(combined.begin(), combined.end());
      CHECK(combined == sorted_copy(w));
    }
  }
}

TEST_CASE("basis characterizations, inversion sequences n <= 7 and words n <= 6") {
  auto check = [&](const Universe& u) {
    for_each_member(u, [&](const Word& w) {
      for (const auto& cfg : all_greedy_configs()) {
        CHECK(is_sortable(w, cfg) == avoids_all(w, sortable_basis(cfg)));
      }
    });
  };
  for (int n = 0; n <= 7; ++n) check(Universe::inversion_sequences(n));
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 6; ++n) check(Universe::words(n, k));
  }
}

TEST_CASE("greedy simulators agree with the search oracle, n <= 6") {
  auto check = [&](const Universe& u) {
    for_each_member(u, [&](const Word& w) {
      for (const auto& cfg : all_greedy_configs()) {
        CHECK(is_sortable(w, cfg) == sortable_by_search(w, cfg));
      }
    });
  };
  for (int n = 0; n <= 6; ++n) check(Universe::inversion_sequences(n));
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 6; ++n) check(Universe::words(n, k));
  }
}

TEST_CASE("r beyond the depth adds no sorting power, n <= 6") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 6; ++n) {
      for_each_member(Universe::words(n, k), [&](const Word& w) {
        CHECK(sortable_by_search(w, MachineConfig::generalized_pop_stack(3, 2)) ==
              sortable_by_search(w, MachineConfig::generalized_pop_stack(2, 2)));
      });
    }
  }
}

TEST_CASE("pop stack output equals run reversal, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for_each_member(Universe::words(n, 3), [&](const Word& w) {
      CHECK(pop_stack_sort(w) == pop_stack_sort_by_runs(w));
    });
    for_each_member(Universe::inversion_sequences(n), [&](const Word& w) {
      CHECK(pop_stack_sort(w) == pop_stack_sort_by_runs(w));
    });
  }
}

TEST_CASE("layer count equals pop count including the drain, n <= 8") {
  auto check = [&](const Universe& u) {
    for_each_member(u, [&](const Word& w) {
      auto layers = layer_count(w);
      if (!layers) return;
      Trace trace;
      pop_stack_sort(w, &trace);
      CHECK(*layers == trace.pop_count());
    });
  };
  for (int n = 0; n <= 8; ++n) {
    check(Universe::words(n, 3));
    check(Universe::inversion_sequences(n));
  }
}

TEST_CASE("trace text shows actions, stack, and output") {
  Trace trace;
  pop_stack_sort(Word::parse("0,1,1,0"), &trace);
  const std::string text = trace.str();
  CHECK(text.find("push 0") != std::string::npos);
  CHECK(text.find("drain") != std::string::npos);
  CHECK(text.find("output=0,0,1,1") != std::string::npos);
}

TEST_SUITE_END();
