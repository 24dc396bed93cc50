#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conjposet/analysis.hpp"
#include "conjposet/errors.hpp"
#include "conjposet/group_spec.hpp"
#include "conjposet/report.hpp"
#include "conjposet/verifier.hpp"

namespace py = pybind11;
using namespace conjposet;

namespace {

Limits make_limits(std::size_t max_order, std::size_t max_subgroups) {
  return Limits{max_order, max_subgroups};
}

std::vector<std::vector<Element>> subgroup_lists(const GroupTable& g,
                                                 const Limits& limits) {
  const SubgroupLattice lat = enumerate_subgroups(g, limits);
  std::vector<std::vector<Element>> out;
  for (const auto& h : lat.subs()) out.push_back(h.elems);
  return out;
}

PosetKind kind_arg(const std::string& text) {
  const auto kind = parse_poset_kind(text);
  if (!kind) throw py::value_error("unknown poset kind: " + text);
  return *kind;
}

py::dict witness_dict(const GroupAnalysis& a, const PosetView& p,
                      const IntervalCoverWitness& w) {
  py::dict d;
  d["M"] = p.labels[w.m_idx];
  d["N"] = p.labels[w.n_idx];
  if (p.kind == PosetKind::kLbar) {
    d["M_elements"] = a.lbar_rep(w.m_idx).elems;
    d["N_elements"] = a.lbar_rep(w.n_idx).elems;
  }
  d["pairs"] = w.all_pairs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_conjposet, m) {
  m.doc() = "Subgroup lattices and conjugacy-class posets of finite groups";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SpecParseError>(m, "SpecParseError", error.ptr());
  py::register_exception<SpecInvalid>(m, "SpecInvalid", error.ptr());
  auto cap = py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", cap.ptr());
  py::register_exception<SubgroupCapExceeded>(m, "SubgroupCapExceeded", cap.ptr());
  py::register_exception<PrimeNotInOrder>(m, "PrimeNotInOrder", error.ptr());
  py::register_exception<NotComparable>(m, "NotComparable", error.ptr());

  static const Limits defaults;
  m.attr("DEFAULT_MAX_ORDER") = defaults.max_order;
  m.attr("DEFAULT_MAX_SUBGROUPS") = defaults.max_subgroups;

  py::class_<GroupTable>(m, "Group")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("spec", &GroupTable::spec)
      .def_property_readonly("labels", &GroupTable::labels)
      .def("mul", &GroupTable::mul, py::arg("a"), py::arg("b"))
      .def("inv", &GroupTable::inv, py::arg("a"))
      .def("element_order",
           [](const GroupTable& g, Element a) { return element_order(g, a); },
           py::arg("a"))
      .def("is_abelian", &GroupTable::is_abelian)
      .def("table",
           [](const GroupTable& g) {
             std::vector<std::vector<Element>> rows(g.order());
             for (Element a = 0; a < g.order(); ++a) {
               for (Element b = 0; b < g.order(); ++b) rows[a].push_back(g.mul(a, b));
             }
             return rows;
           })
      .def("validate", [](const GroupTable& g) {
        const ValidationResult r = validate_group(g);
        return std::make_pair(r.ok(), r.message);
      })
      .def("__len__", &GroupTable::order)
      .def("__repr__",
           [](const GroupTable& g) { return "<Group " + g.spec() + ">"; });

  m.def("canonical_spec",
        [](const std::string& text) { return to_string(parse_spec(text)); },
        py::arg("spec"));

  m.def("build_group",
        [](const std::string& spec, std::size_t max_order) {
          return build_group(spec, make_limits(max_order, defaults.max_subgroups));
        },
        py::arg("spec"), py::arg("max_order") = defaults.max_order);

  m.def("enumerate_subgroups",
        [](const std::string& spec, std::size_t max_order, std::size_t max_subgroups) {
          const Limits limits = make_limits(max_order, max_subgroups);
          return subgroup_lists(build_group(spec, limits), limits);
        },
        py::arg("spec"), py::arg("max_order") = defaults.max_order,
        py::arg("max_subgroups") = defaults.max_subgroups);

  m.def("breaking_points",
        [](const std::string& spec, const std::string& kind) {
          const GroupAnalysis a(build_group(spec), defaults);
          const PosetView& p = a.poset(kind_arg(kind));
          std::vector<std::string> out;
          for (std::size_t x : breaking_points(p)) out.push_back(p.labels[x]);
          return out;
        },
        py::arg("spec"), py::arg("kind") = "Lbar");

  m.def("two_interval_cover",
        [](const std::string& spec, const std::string& kind) -> py::object {
          const GroupAnalysis a(build_group(spec), defaults);
          const PosetView& p = a.poset(kind_arg(kind));
          const auto w = two_interval_cover(p, true);
          if (!w) return py::none();
          return witness_dict(a, p, *w);
        },
        py::arg("spec"), py::arg("kind") = "Lbar");

  m.def("hasse_dot",
        [](const std::string& spec, const std::string& kind) {
          const GroupAnalysis a(build_group(spec), defaults);
          return to_dot(a.poset(kind_arg(kind)), kind);
        },
        py::arg("spec"), py::arg("kind") = "Lbar");

  m.def("analyze_json",
        [](const std::string& spec, bool all_witnesses) {
          const auto start = std::chrono::steady_clock::now();
          const GroupAnalysis a(build_group(spec), defaults);
          const std::chrono::duration<double, std::milli> elapsed =
              std::chrono::steady_clock::now() - start;
          return to_json(make_report(a, all_witnesses, elapsed.count())).dump();
        },
        py::arg("spec"), py::arg("all_witnesses") = false);

  m.def("suite_names", &suite_names);

  m.def("verify_json",
        [](const std::vector<std::string>& names) {
          AnalysisCache cache;
          std::vector<SuiteResult> results;
          for (const auto& name : names.empty() ? suite_names() : names) {
            auto r = run_suite(name, cache);
            if (!r) throw py::value_error("unknown suite: " + name);
            results.push_back(std::move(*r));
          }
          return to_json(results).dump();
        },
        py::arg("suites") = std::vector<std::string>{});

  m.def("scan_json",
        [](std::size_t max_order, const std::vector<std::string>& families) {
          return to_json(scan_class_c(max_order, families)).dump();
        },
        py::arg("max_order") = 32, py::arg("families") = std::vector<std::string>{});
}
