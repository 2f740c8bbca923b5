#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdcage/bounds.hpp"
#include "gdcage/canon.hpp"
#include "gdcage/constructions.hpp"
#include "gdcage/generator.hpp"
#include "gdcage/graph6.hpp"
#include "gdcage/metrics.hpp"
#include "gdcage/oracle.hpp"

namespace py = pybind11;
using namespace gdcage;

PYBIND11_MODULE(_gdcage, m) {
  m.doc() = "girth-diameter cages: bounds, exhaustive generation, "
            "certificate constructions";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("graph6_encode", &graph6_encode);
  m.def("graph6_decode", &graph6_decode);

  m.def("girth", &girth);
  m.def("diameter", &diameter);
  m.def("is_connected", &is_connected);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_kgd_graph", &is_kgd_graph, py::arg("g"), py::arg("k"),
        py::arg("girth"), py::arg("diameter"));
  m.attr("INF_DIST") = kInfDist;

  m.def("moore", &moore);
  m.def("lower_bound", &lower_bound);
  m.def("exact_order_3_4", &exact_order_3_4);
  m.def("exact_count_3_4", &exact_count_3_4);
  m.def("exact_order_3_5", &exact_order_3_5);
  m.def("exact_count_3_5", &exact_count_3_5);
  m.def("exact_order_k_3_3", &exact_order_k_3_3);
  m.def("bounds_report", [](int k, int g, int d) {
    BoundsReport r = bounds_report(k, g, d);
    py::dict out;
    out["k"] = r.k;
    out["g"] = r.g;
    out["d"] = r.d;
    out["moore"] = r.moore_kg;
    out["m_prime"] = r.m_prime;
    out["m_double_prime"] =
        r.m_double_prime ? py::cast(*r.m_double_prime) : py::none();
    out["lower_bound"] = r.combined;
    out["exact_order"] = r.exact_order ? py::cast(*r.exact_order) : py::none();
    out["exact_count"] = r.exact_count ? py::cast(*r.exact_count) : py::none();
    return out;
  });

  m.def("canonical_key", [](const Graph& g) {
    return py::bytes(canonical_key(g));
  });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "generate_all",
      [](int k, int g, int d, int n, int workers, double budget_seconds) {
        GeneratorOptions opts;
        opts.workers = workers;
        opts.budget_seconds = budget_seconds;
        GenerationResult res;
        {
          py::gil_scoped_release release;
          res = generate_all(k, g, d, n, opts);
        }
        py::dict out;
        out["order"] = res.order;
        out["exhaustive"] = res.exhaustive;
        out["diagnostic"] = res.diagnostic;
        out["cages"] = res.cages;
        out["nodes"] = res.stats.nodes;
        return out;
      },
      py::arg("k"), py::arg("g"), py::arg("d"), py::arg("n"),
      py::arg("workers") = 1, py::arg("budget_seconds") = 0.0);

  m.def(
      "find_cage",
      [](int k, int g, int d, std::optional<int> n_max, int workers,
         double budget_seconds) {
        GeneratorOptions opts;
        opts.workers = workers;
        opts.budget_seconds = budget_seconds;
        int n = 0;
        GenerationResult res;
        {
          py::gil_scoped_release release;
          std::tie(n, res) = find_cage(k, g, d, n_max, opts);
        }
        py::dict out;
        out["order"] = n;
        out["exhaustive"] = res.exhaustive;
        out["diagnostic"] = res.diagnostic;
        out["cages"] = res.cages;
        return out;
      },
      py::arg("k"), py::arg("g"), py::arg("d"),
      py::arg("n_max") = py::none(), py::arg("workers") = 1,
      py::arg("budget_seconds") = 0.0);

  m.def("build_k_3_3", &build_k_3_3);
  m.def("build_3_4_extremal", &build_3_4_extremal);
  m.def("build_3_5_extremal", &build_3_5_extremal);
  m.def("chain_construction", &chain_construction, py::arg("k"), py::arg("g"),
        py::arg("r"), py::arg("cage"), py::arg("aux_cage"));

  m.def(
      "cross_validate_ok",
      [](int k, int n_ceiling) {
        py::gil_scoped_release release;
        return cross_validate(k, n_ceiling).ok();
      },
      py::arg("k"), py::arg("n_ceiling"));
}
