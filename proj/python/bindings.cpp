#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "throttle/constructive.hpp"
#include "throttle/graph_io.hpp"
#include "throttle/isomorphism.hpp"
#include "throttle/suites.hpp"

namespace py = pybind11;
using namespace throttle;

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& members) { return VertexSet(g.order(), members); }

std::optional<int> finite(PropagationTime t) {
  if (!t.is_finite()) return std::nullopt;
  return t.value();
}

py::dict throttle_dict(const ThrottlingResult& r) {
  py::dict out;
  out["value"] = r.value;
  out["witness"] = r.witness.members();
  out["pt"] = r.witness_pt;
  if (!r.per_k.empty()) out["per_k"] = r.per_k;
  return out;
}

}  // namespace

PYBIND11_MODULE(_throttling, m) {
  m.doc() = "Exact throttling numbers for zero forcing, PSD forcing and power domination";
  m.attr("__version__") = THROTTLE_VERSION;

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.emplace_back(u, v);
             return Graph(order, es);
           }),
           py::arg("order"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighborhood(v).members(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("fixture", [](const std::string& name) {
        NamedGraph g = fixture(name);
        std::map<std::string, std::pair<Vertex, Vertex>> edges;
        for (const auto& [k, e] : g.edges) edges[k] = {e.u, e.v};
        return py::make_tuple(g.graph, g.vertices, edges);
      },
      py::arg("name"), "Named fixture as (graph, named vertices, named edges).");
  m.def("fixture_names", &fixture_names);
  m.def("graphs", &enumerate_graphs, py::arg("n"), py::arg("connected_only") = false,
        py::arg("up_to_isomorphism") = true);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("propagation_time",
        [](const std::string& rule, const Graph& g, const std::vector<Vertex>& initial) {
          return finite(propagation_time(parse_rule(rule), g, to_set(g, initial)));
        },
        py::arg("rule"), py::arg("graph"), py::arg("initial"), "None when the set does not force.");
  m.def("parameter",
        [](const std::string& rule, const Graph& g) {
          ParameterResult r = parameter_number(parse_rule(rule), g);
          return py::make_tuple(r.value, r.witness.members());
        },
        py::arg("rule"), py::arg("graph"));
  m.def("domination_number", [](const Graph& g) {
    DominationResult r = domination_number(g);
    return py::make_tuple(r.value, r.witness.members());
  });
  m.def("throttle",
        [](const std::string& rule, const std::string& kind, const Graph& g, bool table) {
          return throttle_dict(throttle::throttle(parse_rule(rule), parse_kind(kind), g, table));
        },
        py::arg("rule"), py::arg("kind"), py::arg("graph"), py::arg("table") = false);
  m.def("throttle_set",
        [](const std::string& rule, const std::string& kind, const Graph& g, const std::vector<Vertex>& initial) {
          return throttle_set(parse_rule(rule), parse_kind(kind), g, to_set(g, initial));
        },
        py::arg("rule"), py::arg("kind"), py::arg("graph"), py::arg("initial"));
  m.def("k_of_p", [](const Graph& g, int p) { return k_of_p(g, p).k; });
  m.def("is_matched_sum", [](const Graph& g) { return is_matched_sum(g).has_value(); });

  m.def("_certificate_json",
        [](const Graph& g, const std::string& target) {
          return to_json(construct_pd_certificate(g, parse_bound_target(target))).dump();
        });
  m.def("_paper_suite_json",
        [](const std::vector<std::pair<std::string, std::string>>& filters, int workers) {
          py::gil_scoped_release release;
          return to_json(run_reference_suite(filters, workers)).dump();
        },
        py::arg("filters") = std::vector<std::pair<std::string, std::string>>{}, py::arg("workers") = 1);
  m.def("_property_suite_json",
        [](const std::string& name, int nmax, int samples, int workers) {
          py::gil_scoped_release release;
          return to_json(run_property_suite(name, nmax, samples, workers)).dump();
        },
        py::arg("name"), py::arg("nmax"), py::arg("samples") = 200, py::arg("workers") = 1);
  m.def("property_suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : property_suites()) out.push_back(s.name);
    return out;
  });

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
