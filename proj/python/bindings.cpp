#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invsort/closedforms.hpp"
#include "invsort/core.hpp"
#include "invsort/gentree.hpp"
#include "invsort/layers.hpp"
#include "invsort/machines.hpp"
#include "invsort/patterns.hpp"

namespace py = pybind11;
using namespace invsort;

namespace {

py::object to_pyint(const BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

Word to_word(const std::vector<int>& letters) { return Word(letters); }

Basis to_basis(const std::string& text) { return Basis::parse(text); }

Universe to_universe(const std::string& kind, int n, int k) {
  if (kind == "inv") return Universe::inversion_sequences(n);
  if (kind == "words") return Universe::words(n, k);
  if (kind == "perms") return Universe::permutations(n);
  throw std::invalid_argument("universe kind must be inv, words, or perms");
}

MachineConfig to_machine(const std::string& name, int depth, int r) {
  auto kind = machine_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown machine '" + name + "'");
  MachineConfig config{*kind, depth > 0 ? std::optional<int>(depth) : std::nullopt, r};
  config.validate();
  return config;
}

RuleSet to_ruleset(const std::string& name) {
  auto rs = ruleset_from_string(name);
  if (!rs) throw std::invalid_argument("unknown ruleset '" + name + "'");
  return *rs;
}

}  // namespace

PYBIND11_MODULE(_invsort, m) {
  m.doc() = "sorting machines, pattern avoidance, and generating trees over "
            "words and inversion sequences";

  m.def("encode", [](const std::vector<int>& perm) {
    return encode(Permutation(perm)).word().letters();
  }, py::arg("permutation"),
    "Inversion sequence of a permutation of 1..n: e_i counts earlier larger entries.");

  m.def("decode", [](const std::vector<int>& seq) {
    return decode(InversionSequence(Word(seq))).entries();
  }, py::arg("sequence"), "Permutation whose inversion sequence is the given word.");

  m.def("is_sorted", [](const std::vector<int>& w) { return is_sorted(to_word(w)); },
        py::arg("word"));

  m.def("is_inversion_sequence",
        [](const std::vector<int>& w) { return InversionSequence::valid(to_word(w)); },
        py::arg("word"));

  m.def("enumerate_universe", [](const std::string& kind, int n, int k) {
    std::vector<std::vector<int>> members;
    for_each_member(to_universe(kind, n, k),
                    [&](const Word& w) { members.push_back(w.letters()); });
    return members;
  }, py::arg("kind"), py::arg("n"), py::arg("k") = 1,
    "All members of inv(n), words(n, k), or perms(n) in lexicographic order.");

  m.def("contains", [](const std::vector<int>& w, const std::vector<int>& p) {
    return contains(to_word(w), Pattern(to_word(p)));
  }, py::arg("word"), py::arg("pattern"));

  m.def("occurrence_count", [](const std::vector<int>& w, const std::vector<int>& p) {
    return occurrence_count(to_word(w), Pattern(to_word(p)));
  }, py::arg("word"), py::arg("pattern"));

  m.def("avoids_all", [](const std::vector<int>& w, const std::string& basis) {
    return avoids_all(to_word(w), to_basis(basis));
  }, py::arg("word"), py::arg("basis"), "Basis text form, e.g. '120+201+1010'.");

  m.def("count_avoiders", [](const std::string& kind, int n, int k, const std::string& basis) {
    return to_pyint(count_avoiders(to_universe(kind, n, k), to_basis(basis)));
  }, py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("basis"));

  m.def("sort_with_machine",
        [](const std::vector<int>& w, const std::string& machine, int depth, int r) {
          return simulate(to_word(w), to_machine(machine, depth, r)).letters();
        },
        py::arg("word"), py::arg("machine"), py::arg("depth") = 0, py::arg("r") = 1,
        "Greedy simulator output; depth 0 means unbounded.");

  m.def("is_sortable", [](const std::vector<int>& w, const std::string& machine, int depth, int r) {
    return is_sortable(to_word(w), to_machine(machine, depth, r));
  }, py::arg("word"), py::arg("machine"), py::arg("depth") = 0, py::arg("r") = 1);

  m.def("sortable_by_search",
        [](const std::vector<int>& w, const std::string& machine, int depth, int r, int guard) {
          return sortable_by_search(to_word(w), to_machine(machine, depth, r), guard);
        },
        py::arg("word"), py::arg("machine"), py::arg("depth") = 0, py::arg("r") = 1,
        py::arg("guard") = 8);

  m.def("machine_basis", [](const std::string& machine, int depth, int r) {
    return sortable_basis(to_machine(machine, depth, r)).str();
  }, py::arg("machine"), py::arg("depth") = 0, py::arg("r") = 1);

  m.def("layer_decomposition", [](const std::vector<int>& w) -> py::object {
    auto d = layer_decomposition(to_word(w));
    if (!d) return py::none();
    std::vector<std::vector<int>> layers;
    for (const Word& layer : d->layers) layers.push_back(layer.letters());
    return py::cast(layers);
  }, py::arg("word"));

  m.def("layer_count", [](const std::vector<int>& w) -> py::object {
    auto count = layer_count(to_word(w));
    if (!count) return py::none();
    return py::int_(*count);
  }, py::arg("word"));

  m.def("count_by_layer_number",
        [](int n, int k) { return to_pyint(count_by_layer_number(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("wd_count",
        [](int n, int a, int k) { return to_pyint(wd_count_formula(WDParameters(n, a, k))); },
        py::arg("n"), py::arg("a"), py::arg("k"),
        "Weakly decreasing words of length n, first value a, at most k descents.");

  m.def("count_depth_pop_sortable",
        [](int n, int k) { return to_pyint(count_depth_pop_sortable(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("catalan", [](int n) { return to_pyint(catalan(n)); }, py::arg("n"));
  m.def("fibonacci", [](int n) { return to_pyint(fibonacci(n)); }, py::arg("n"));
  m.def("eulerian", [](int n, int k) { return to_pyint(eulerian(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("tetrahedral", [](int n) { return to_pyint(tetrahedral(n)); }, py::arg("n"));
  m.def("cake", [](int n) { return to_pyint(cake(n)); }, py::arg("n"));
  m.def("burstein_depth2_stack_words",
        [](int n, int k) { return to_pyint(burstein_depth2_stack_words(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("burstein_gf_coefficient",
        [](int n, int k) { return to_pyint(burstein_gf_coefficient(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("level_counts", [](const std::string& ruleset, int levels) {
    std::vector<py::object> counts;
    for (const BigInt& c : level_counts(to_ruleset(ruleset), levels)) counts.push_back(to_pyint(c));
    return counts;
  }, py::arg("ruleset"), py::arg("levels"),
    "Generating-tree level counts; level n counts length-n avoiders.");

  m.def("ruleset_basis",
        [](const std::string& ruleset) { return ruleset_basis(to_ruleset(ruleset)).str(); },
        py::arg("ruleset"));
}
