// invsort: sorting machines over words and inversion sequences.
//
// Subcommands:
//   sort     run one greedy simulator on a word
//   count    count avoiders / sortable members of a universe per length
//   gentree  expand a succession-rule system into level counts
//   verify   run the cross-validation suites

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invsort/closedforms.hpp"
#include "invsort/core.hpp"
#include "invsort/gentree.hpp"
#include "invsort/layers.hpp"
#include "invsort/machines.hpp"
#include "invsort/patterns.hpp"

using invsort::Basis;
using invsort::BigInt;
using invsort::MachineConfig;
using invsort::RuleSet;
using invsort::Universe;
using invsort::Word;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit_report(const std::string& command, const json& parameters, const json& payload,
                 const Clock& clock) {
  json report;
  report["command"] = command;
  report["parameters"] = parameters;
  report["payload"] = payload;
  report["elapsed_ms"] = clock.elapsed_ms();
  report["version"] = kVersion;
  std::cout << report.dump(2) << "\n";
}

MachineConfig build_machine(const std::string& name, int depth, int r) {
  auto kind = invsort::machine_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown machine '" + name + "'");
  MachineConfig config{*kind, depth > 0 ? std::optional<int>(depth) : std::nullopt, r};
  config.validate();
  return config;
}

Universe build_universe(const std::string& name, int n, int k) {
  if (name == "inv" || name == "inversion-sequences") return Universe::inversion_sequences(n);
  if (name == "words" || name == "word") return Universe::words(n, k);
  if (name == "perms" || name == "permutations") return Universe::permutations(n);
  throw std::invalid_argument("unknown universe '" + name + "'");
}

BigInt count_sortable(const Universe& u, const MachineConfig& config) {
  BigInt total = 0;
  invsort::for_each_member(u, [&](const Word& w) {
    if (invsort::is_sortable(w, config)) ++total;
  });
  return total;
}

// --- verify suites ---------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

const std::vector<MachineConfig>& machine_suite() {
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

std::vector<Universe> verify_universes(int max_n, int max_k, int word_cap) {
  std::vector<Universe> universes;
  for (int n = 0; n <= max_n; ++n) universes.push_back(Universe::inversion_sequences(n));
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 0; n <= std::min(max_n, word_cap); ++n) universes.push_back(Universe::words(n, k));
  }
  return universes;
}

std::vector<CheckResult> suite_basis_equivalence(int max_n, int max_k) {
  std::vector<CheckResult> results;
  for (const MachineConfig& cfg : machine_suite()) {
    CheckResult result{"basis-equivalence/" + cfg.str(), true, ""};
    const Basis basis = invsort::sortable_basis(cfg);
    long long checks = 0;
    for (const Universe& u : verify_universes(max_n, max_k, 8)) {
      if (!result.pass) break;
      invsort::for_each_member(u, [&](const Word& w) {
        if (!result.pass) return;
        ++checks;
        if (invsort::is_sortable(w, cfg) != invsort::avoids_all(w, basis)) {
          result.pass = false;
          result.detail = "counterexample=" + w.str() + " in " + u.str();
        }
      });
    }
    if (result.pass) result.detail = std::to_string(checks) + " checks";
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<CheckResult> suite_greedy_optimality(int max_n, int max_k) {
  std::vector<CheckResult> results;
  const int capped = std::min(max_n, 8);  // search guard
  for (const MachineConfig& cfg : machine_suite()) {
    CheckResult result{"greedy-optimality/" + cfg.str(), true, ""};
    long long checks = 0;
    for (const Universe& u : verify_universes(capped, max_k, capped)) {
      if (!result.pass) break;
      invsort::for_each_member(u, [&](const Word& w) {
        if (!result.pass) return;
        ++checks;
        if (invsort::is_sortable(w, cfg) != invsort::sortable_by_search(w, cfg)) {
          result.pass = false;
          result.detail = "counterexample=" + w.str() + " in " + u.str();
        }
      });
    }
    if (result.pass) result.detail = std::to_string(checks) + " checks";
    results.push_back(std::move(result));
  }
  CheckResult collapse{"greedy-optimality/r3-depth2-collapse", true, ""};
  long long checks = 0;
  for (const Universe& u : verify_universes(capped, max_k, capped)) {
    if (!collapse.pass) break;
    invsort::for_each_member(u, [&](const Word& w) {
      if (!collapse.pass) return;
      ++checks;
      if (invsort::sortable_by_search(w, MachineConfig::generalized_pop_stack(3, 2)) !=
          invsort::sortable_by_search(w, MachineConfig::generalized_pop_stack(2, 2))) {
        collapse.pass = false;
        collapse.detail = "counterexample=" + w.str() + " in " + u.str();
      }
    });
  }
  if (collapse.pass) collapse.detail = std::to_string(checks) + " checks";
  results.push_back(std::move(collapse));
  return results;
}

std::vector<CheckResult> suite_closed_forms(int max_n) {
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    results.push_back({"closed-forms/" + name, pass, detail});
  };

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(max_n, 12) && pass; ++n) {
      if (invsort::count_avoiders(Universe::inversion_sequences(n), Basis::parse("10")) !=
          invsort::catalan(n)) {
        pass = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("catalan-depth1-pop", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= std::min(max_n, 10) && pass; ++n) {
      if (invsort::count_by_layer_number(n, 1) != invsort::eulerian(n, 1) ||
          invsort::count_by_layer_number(n, 2) != invsort::eulerian(n, 2)) {
        pass = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("eulerian-layers", pass, detail);
  }
  {
    bool pass = invsort::tetrahedral(1) == 0;
    std::string detail;
    for (int n = 2; n <= std::min(max_n, 10) && pass; ++n) {
      if (invsort::count_by_layer_number(n, n - 1) != invsort::tetrahedral(n)) {
        pass = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("tetrahedral-layers", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= std::min(max_n, 12) && pass; ++n) {
      BigInt sortable = 0;
      invsort::for_each_member(Universe::words(n, 2), [&](const Word& w) {
        if (invsort::InversionSequence::valid(w) &&
            invsort::is_sortable(w, MachineConfig::pop_stack())) {
          ++sortable;
        }
      });
      if (sortable != invsort::cake(n)) {
        pass = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("cake-binary", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(max_n, 8) && pass; ++n) {
      if (count_sortable(Universe::permutations(n), MachineConfig::generalized_pop_stack(2, 2)) !=
          invsort::fibonacci(n + 1)) {
        pass = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("fibonacci-permutations", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= std::min(max_n, 8) && pass; ++n) {
      for (int a = 0; a <= 6 && pass; ++a) {
        for (int k = 1; k < n && pass; ++k) {
          const invsort::WDParameters p(n, a, k);
          if (invsort::wd_count_formula(p) != invsort::wd_count_brute(p)) {
            pass = false;
            detail = "n=" + std::to_string(n) + " a=" + std::to_string(a);
          }
        }
      }
    }
    add("wd-closed-form", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    const int nmax = std::min(max_n, 6);
    const invsort::SeriesTable2 table = invsort::burstein_gf_table(nmax, 5);
    const Basis depth2_stack = Basis::parse("120+210");
    const Basis two_one_pop = Basis::parse("120+201+210");
    for (int k = 1; k <= 5 && pass; ++k) {
      for (int n = 1; n <= nmax && pass; ++n) {
        BigInt stack2 = 0, pop21 = 0;
        invsort::for_each_member(Universe::words(n, k), [&](const Word& w) {
          if (invsort::avoids_all(w, depth2_stack)) ++stack2;
          if (invsort::avoids_all(w, two_one_pop)) ++pop21;
        });
        if (invsort::burstein_depth2_stack_words(n, k) != stack2 || table.at(n, k) != pop21) {
          pass = false;
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    add("burstein-word-formulas", pass, detail);
  }
  return results;
}

std::vector<CheckResult> suite_gentree(int max_n) {
  std::vector<CheckResult> results;
  for (RuleSet rs : {RuleSet::Av120_201_210, RuleSet::Av120_201_1010,
                     RuleSet::Av120_201_210_1010}) {
    CheckResult result{"gentree/" + invsort::ruleset_name(rs), true, ""};
    const invsort::RuleReport report = invsort::rule_consistency_check(rs, 30);
    if (!report.ok) {
      result.pass = false;
      result.detail = report.violations.front();
    } else {
      const int levels = std::min(max_n, 10);
      const std::vector<BigInt> counts = invsort::level_counts(rs, levels);
      const Basis basis = invsort::ruleset_basis(rs);
      for (int n = 1; n <= levels && result.pass; ++n) {
        const BigInt direct = invsort::count_avoiders(Universe::inversion_sequences(n), basis);
        if (counts[static_cast<size_t>(n - 1)] != direct) {
          result.pass = false;
          result.detail = "level " + std::to_string(n) + " tree=" +
                          counts[static_cast<size_t>(n - 1)].str() + " direct=" + direct.str();
        }
      }
      if (result.pass) result.detail = std::to_string(levels) + " levels vs direct counts";
    }
    results.push_back(std::move(result));
  }
  return results;
}

int report_checks(const std::vector<CheckResult>& results, const std::string& format,
                  const json& parameters, const Clock& clock) {
  int failures = 0;
  for (const CheckResult& r : results) failures += r.pass ? 0 : 1;
  if (format == "json") {
    json payload;
    payload["checks"] = json::array();
    for (const CheckResult& r : results) {
      payload["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    payload["failures"] = failures;
    emit_report("verify", parameters, payload, clock);
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
    if (failures == 0) {
      std::cout << "all pass (" << results.size() << " checks)\n";
    } else {
      std::cout << failures << " of " << results.size() << " checks failed\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sorting machines, pattern avoidance, and generating trees over words and inversion sequences"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // --- sort ---
  auto* sort_cmd = app.add_subcommand("sort", "run a greedy sorting machine on one word");
  std::string sort_machine;
  int sort_depth = 0;
  int sort_r = 1;
  std::string sort_input;
  bool sort_trace = false;
  std::string sort_format = "plain";
  sort_cmd->add_option("--machine", sort_machine,
                       "stack | pop-stack | tortoise-pop-stack | generalized-pop-stack")
      ->required();
  sort_cmd->add_option("--depth", sort_depth, "distinct-value depth bound (0 = unbounded)");
  sort_cmd->add_option("--r", sort_r, "insertion reach (generalized pop stack)");
  sort_cmd->add_option("--input", sort_input, "word, e.g. 0,1,1,0 or 0110")->required();
  sort_cmd->add_flag("--trace", sort_trace, "print one line per machine step");
  sort_cmd->add_option("--format", sort_format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  // --- count ---
  auto* count_cmd = app.add_subcommand("count", "count avoiders / sortable members per length");
  std::string count_universe = "inv";
  int count_n = 0;
  int count_k = 1;
  int count_min_n = 0;
  std::string count_basis;
  std::string count_machine;
  int count_depth = 0;
  int count_r = 1;
  std::string count_format = "plain";
  int count_offset = 0;
  count_cmd->add_option("--universe", count_universe, "inv | words | perms")->required();
  count_cmd->add_option("--n", count_n, "maximum length")->required();
  count_cmd->add_option("--k", count_k, "alphabet size (words universe)");
  count_cmd->add_option("--min-n", count_min_n, "first length to report (default 0)");
  count_cmd->add_option("--basis", count_basis, "forbidden patterns, e.g. 120+201+1010");
  count_cmd->add_option("--machine", count_machine, "count members sorted by this machine");
  count_cmd->add_option("--depth", count_depth, "machine depth (0 = unbounded)");
  count_cmd->add_option("--r", count_r, "machine insertion reach");
  count_cmd->add_option("--format", count_format, "plain | json | csv | bfile")
      ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));
  count_cmd->add_option("--offset", count_offset, "shift printed indices (bfile)");

  // --- gentree ---
  auto* gentree_cmd = app.add_subcommand("gentree", "succession-rule level counts");
  std::string gentree_ruleset;
  int gentree_levels = 0;
  std::string gentree_format = "plain";
  int gentree_offset = 0;
  gentree_cmd
      ->add_option("--ruleset", gentree_ruleset,
                   "av-120-201-210 | av-120-201-1010 | av-120-201-210-1010")
      ->required();
  gentree_cmd->add_option("--levels", gentree_levels, "levels to expand")->required();
  gentree_cmd->add_option("--format", gentree_format, "plain | json | csv | bfile")
      ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));
  gentree_cmd->add_option("--offset", gentree_offset, "shift printed indices (bfile)");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
  std::string verify_suite;
  int verify_max_n = 7;
  int verify_max_k = 3;
  std::string verify_format = "plain";
  verify_cmd
      ->add_option("--suite", verify_suite,
                   "basis-equivalence | greedy-optimality | closed-forms | gentree | all")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n, "length bound");
  verify_cmd->add_option("--max-k", verify_max_k, "alphabet bound for word universes");
  verify_cmd->add_option("--format", verify_format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  CLI11_PARSE(app, argc, argv);
  Clock clock;

  try {
    if (sort_cmd->parsed()) {
      const MachineConfig config = build_machine(sort_machine, sort_depth, sort_r);
      const Word input = Word::parse(sort_input);
      invsort::Trace trace;
      const Word output = invsort::simulate(input, config, sort_trace ? &trace : nullptr);
      const bool sorted = invsort::is_sorted(output);
      if (sort_format == "json") {
        json payload;
        payload["output"] = output.str();
        payload["sorted"] = sorted;
        if (sort_trace) {
          payload["trace"] = json::array();
          std::istringstream lines(trace.str());
          for (std::string line; std::getline(lines, line);) payload["trace"].push_back(line);
        }
        emit_report("sort",
                    {{"machine", config.str()}, {"input", input.str()}},
                    payload, clock);
      } else {
        if (sort_trace) std::cout << trace.str();
        if (!output.empty()) std::cout << output.str() << ' ';
        std::cout << "sorted=" << (sorted ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (count_cmd->parsed()) {
      if (count_basis.empty() && count_machine.empty()) {
        throw std::invalid_argument("count needs --basis and/or --machine");
      }
      std::optional<Basis> basis;
      if (!count_basis.empty()) basis = Basis::parse(count_basis);
      std::optional<MachineConfig> machine;
      if (!count_machine.empty()) machine = build_machine(count_machine, count_depth, count_r);
      if (basis && !basis->is_minimal()) {
        std::cerr << "warning: basis " << basis->str() << " is not minimal\n";
      }
      if (count_min_n < 0 || count_min_n > count_n) {
        throw std::invalid_argument("--min-n must lie in [0, n]");
      }

      std::vector<std::pair<int, BigInt>> table;
      for (int n = count_min_n; n <= count_n; ++n) {
        const Universe u = build_universe(count_universe, n, count_k);
        std::optional<BigInt> by_basis, by_machine;
        if (basis) by_basis = invsort::count_avoiders(u, *basis);
        if (machine) by_machine = count_sortable(u, *machine);
        if (by_basis && by_machine && *by_basis != *by_machine) {
          std::string counterexample = "?";
          invsort::UniverseStream stream(u);
          while (auto w = stream.next()) {
            if (invsort::avoids_all(*w, *basis) != invsort::is_sortable(*w, *machine)) {
              counterexample = w->str();
              break;
            }
          }
          std::cerr << "basis/machine disagree at n=" << n << ": basis=" << *by_basis
                    << " machine=" << *by_machine << " counterexample=" << counterexample << "\n";
          return 1;
        }
        table.emplace_back(n, by_basis ? *by_basis : *by_machine);
      }

      if (count_format == "json") {
        json payload;
        payload["universe"] = count_universe;
        payload["counts"] = json::array();
        for (const auto& [n, value] : table) {
          payload["counts"].push_back({{"n", n}, {"count", value.str()}});
        }
        json parameters{{"universe", count_universe}, {"n", count_n}, {"min_n", count_min_n}};
        if (basis) parameters["basis"] = basis->str();
        if (machine) parameters["machine"] = machine->str();
        if (count_universe == "words") parameters["k"] = count_k;
        emit_report("count", parameters, payload, clock);
      } else if (count_format == "bfile") {
        for (const auto& [n, value] : table) {
          std::cout << n + count_offset << " " << value << "\n";
        }
      } else if (count_format == "csv") {
        std::cout << "n,count\n";
        for (const auto& [n, value] : table) std::cout << n << "," << value << "\n";
      } else {
        for (size_t i = 0; i < table.size(); ++i) {
          if (i) std::cout << ',';
          std::cout << table[i].second;
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (gentree_cmd->parsed()) {
      const auto rs = invsort::ruleset_from_string(gentree_ruleset);
      if (!rs) throw std::invalid_argument("unknown ruleset '" + gentree_ruleset + "'");
      const std::vector<BigInt> counts = invsort::level_counts(*rs, gentree_levels);
      if (gentree_format == "json") {
        json payload;
        payload["ruleset"] = gentree_ruleset;
        payload["counts"] = json::array();
        for (const BigInt& c : counts) payload["counts"].push_back(c.str());
        emit_report("gentree", {{"ruleset", gentree_ruleset}, {"levels", gentree_levels}}, payload,
                    clock);
      } else if (gentree_format == "bfile") {
        for (size_t i = 0; i < counts.size(); ++i) {
          std::cout << static_cast<int>(i) + 1 + gentree_offset << " " << counts[i] << "\n";
        }
      } else if (gentree_format == "csv") {
        std::cout << "level,count\n";
        for (size_t i = 0; i < counts.size(); ++i) std::cout << i + 1 << "," << counts[i] << "\n";
      } else {
        for (const BigInt& c : counts) std::cout << c << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<CheckResult> results;
      auto run_suite = [&](const std::string& suite) {
        std::vector<CheckResult> chunk;
        if (suite == "basis-equivalence") chunk = suite_basis_equivalence(verify_max_n, verify_max_k);
        else if (suite == "greedy-optimality") chunk = suite_greedy_optimality(verify_max_n, verify_max_k);
        else if (suite == "closed-forms") chunk = suite_closed_forms(verify_max_n);
        else if (suite == "gentree") chunk = suite_gentree(verify_max_n);
        else throw std::invalid_argument("unknown suite '" + suite + "'");
        results.insert(results.end(), chunk.begin(), chunk.end());
      };
      if (verify_suite == "all") {
        for (const char* s : {"basis-equivalence", "greedy-optimality", "closed-forms", "gentree"}) {
          run_suite(s);
        }
      } else {
        run_suite(verify_suite);
      }
      json parameters{{"suite", verify_suite}, {"max_n", verify_max_n}, {"max_k", verify_max_k}};
      return report_checks(results, verify_format, parameters, clock);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
