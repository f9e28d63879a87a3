// Python bindings. Structured results cross the boundary as the same JSON the
// CLI writes, decoded into dicts and lists on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commdom/cache.hpp"
#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/formulas.hpp"
#include "commdom/io.hpp"
#include "commdom/verify.hpp"

namespace py = pybind11;
using namespace commdom;
using json = nlohmann::ordered_json;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

SimpleGraph graph_of(const GroupTable& g, const std::string& kind) {
  if (kind == "commuting") return commuting_graph(g);
  if (kind == "proper-commuting") return proper_commuting_graph(g).graph;
  if (kind == "epg") return enhanced_power_graph(g);
  if (kind == "proper-epg") return proper_enhanced_power_graph(g).graph;
  throw PreconditionError("unknown graph kind '" + kind + "'");
}

py::object solve(const SimpleGraph& g, bool total, double budget) {
  const SolverOptions opts{budget};
  DominationResult r;
  {
    py::gil_scoped_release release;
    r = total ? exact_total_domination_number(g, opts) : exact_domination_number(g, opts);
  }
  return to_py(to_json(r, g.labels(), true));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Commuting graphs of finite groups: domination numbers and closed-form checks";
  m.attr("__version__") = kToolVersion;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<FormulaIntegrityError>(m, "FormulaIntegrityError", base.ptr());

  py::class_<GroupTable>(m, "Group")
      .def(py::init([](const std::string& descriptor) { return make_group(descriptor); }), py::arg("descriptor"))
      .def_static(
          "from_json", [](const py::object& o) { return group_from_json(from_py(o)); }, py::arg("obj"),
          "Validated group from a group-file object.")
      .def_static("load", &load_group_file, py::arg("path"))
      .def("save", [](const GroupTable& g, const std::string& path) { save_group_file(g, path); }, py::arg("path"))
      .def("to_json", [](const GroupTable& g) { return to_py(group_to_json(g)); })
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("descriptor", &GroupTable::descriptor)
      .def_property_readonly("labels", &GroupTable::labels)
      .def("mul", &GroupTable::mul)
      .def("invariants", [](const GroupTable& g) { return to_py(invariants_to_json(compute_invariants(g))); })
      .def(
          "graph", [](const GroupTable& g, const std::string& kind) { return to_py(graph_to_json(graph_of(g, kind))); },
          py::arg("kind") = "proper-commuting")
      .def(
          "gamma",
          [](const GroupTable& g, bool total, double budget) {
            return solve(proper_commuting_graph(g).graph, total, budget);
          },
          py::arg("total") = false, py::arg("budget") = kDefaultBudgetSeconds)
      .def(
          "theorem_suite",
          [](const GroupTable& g, double budget) { return to_py(to_json(run_theorem_suite(g, {budget}))); },
          py::arg("budget") = kDefaultBudgetSeconds)
      .def("predictions",
           [](const GroupTable& g) {
             py::list out;
             for (const auto& p : predictions_for(g)) out.append(to_py(to_json(p)));
             return out;
           })
      .def("__repr__", [](const GroupTable& g) { return "Group('" + g.descriptor() + "')"; });

  m.def(
      "solve_graph",
      [](const py::object& graph, bool total, double budget) { return solve(graph_from_json(from_py(graph)), total, budget); },
      py::arg("graph"), py::arg("total") = false, py::arg("budget") = kDefaultBudgetSeconds,
      "Domination (or total domination) number of a graph given as {n, edges}.");

  m.def("family_names", &family_names);
  m.def("formula_ids", &formula_ids);
  m.def(
      "evaluate_formula",
      [](const std::string& id, const std::vector<std::size_t>& params) {
        return to_py(to_json(evaluate_formula(id, params)));
      },
      py::arg("theorem_id"), py::arg("params"));
  m.def(
      "suzuki_summands",
      [](std::size_t n) {
        py::list out;
        for (const auto& s : suzuki_summands(n)) out.append(py::int_(py::str(s.str())));
        return out;
      },
      py::arg("n"));

  m.def(
      "sweep",
      [](std::size_t max_order, double budget, std::size_t workers) {
        SweepReport rep;
        {
          py::gil_scoped_release release;
          rep = run_family_sweep(default_corpus(max_order), {budget, workers});
        }
        return to_py(to_json(rep));
      },
      py::arg("max_order") = 200, py::arg("budget") = kDefaultBudgetSeconds, py::arg("workers") = 1);
  m.def(
      "product_laws",
      [](std::uint64_t seed, std::size_t trials, std::size_t factors) {
        return to_py(to_json(strong_product_property_tests(seed, trials, factors)));
      },
      py::arg("seed") = 1, py::arg("trials") = 200, py::arg("factors") = 2);
}
