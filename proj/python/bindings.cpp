#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twosep/errors.hpp"
#include "twosep/families.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/io.hpp"
#include "twosep/resistance.hpp"
#include "twosep/separation.hpp"

namespace py = pybind11;
using namespace twosep;

// Big integers cross the boundary as decimal strings; the python package turns
// them into int and Fraction.
namespace {

using RatioStrings = std::pair<std::string, std::string>;

RatioStrings ratio_strings(const Ratio& r) { return {r.num().get_str(), r.den().get_str()}; }

MultiGraph make_graph(std::size_t n, const std::vector<std::tuple<Vertex, Vertex, Multiplicity>>& edges) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& [u, v, m] : edges) specs.push_back({u, v, m});
  return MultiGraph::build(n, specs);
}

SeparatorOrder parse_order(const std::string& s) {
  if (s == "balanced") return SeparatorOrder::balanced;
  if (s == "lexicographic") return SeparatorOrder::lexicographic;
  throw InvalidArgument("unknown separator order '" + s + "'");
}

Query make_query(const std::optional<Vertex>& u, const std::optional<Vertex>& v, const std::optional<Vertex>& w) {
  if (!u && !v && !w) return Query::trees();
  if (!u || !v) throw InvalidArgument("forest queries need both u and v");
  return w ? Query::forests_pair(*u, *v, *w) : Query::forests(*u, *v);
}

}  // namespace

PYBIND11_MODULE(_twosep, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
      .def_property_readonly("edge_count", &MultiGraph::edge_count)
      .def("edges", [](const MultiGraph& g) {
        std::vector<std::tuple<Vertex, Vertex, Multiplicity>> out;
        for (const auto& [pair, mult] : g.edges()) out.emplace_back(pair.first, pair.second, mult);
        return out;
      })
      .def("degree", &MultiGraph::degree)
      .def("canonical_key", &MultiGraph::canonical_key)
      .def("to_edge_list", [](const MultiGraph& g) { return serialize_edge_list(g); })
      .def_static("from_edge_list", &parse_edge_list_string)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "MultiGraph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("count_trees_det", [](const MultiGraph& g) { return count_trees_det(g).get_str(); });
  m.def("count_2forests_det", [](const MultiGraph& g, Vertex u, Vertex v) { return count_2forests_det(g, u, v).get_str(); });
  m.def("count_2forests_pair",
        [](const MultiGraph& g, Vertex u, Vertex v, Vertex w) { return count_2forests_pair(g, u, v, w).get_str(); });
  m.def("enumerate_trees", [](const MultiGraph& g) { return enumerate_trees(g).get_str(); });
  m.def("enumerate_2forests", [](const MultiGraph& g, Vertex u, Vertex v) { return enumerate_2forests(g, u, v).get_str(); });

  m.def(
      "solve",
      [](const MultiGraph& g, std::optional<Vertex> u, std::optional<Vertex> v, std::optional<Vertex> w,
         std::size_t threshold, const std::string& order) {
        const SolveResult r = solve(g, make_query(u, v, w),
                                    {.base_threshold = threshold, .order = parse_order(order), .memoize = true,
                                     .record_trace = true});
        return py::make_tuple(r.value.get_str(), r.trace.to_json().dump(), r.trace.to_text());
      },
      py::arg("g"), py::arg("u") = py::none(), py::arg("v") = py::none(), py::arg("w") = py::none(),
      py::arg("threshold") = 8, py::arg("order") = "balanced");

  m.def("find_cut_vertices", &find_cut_vertices);
  m.def("find_2separators", &find_2separators);

  m.def("resistance", [](const MultiGraph& g, Vertex u, Vertex v) { return ratio_strings(resistance(g, u, v)); });
  m.def("resistance_pinv", &resistance_pinv);
  m.def("resistance_identified", [](const MultiGraph& g, Vertex i, Vertex j, Vertex u, Vertex v) {
    return ratio_strings(resistance_identified(g, i, j, u, v));
  });
  m.def("resistance_separated", [](const MultiGraph& g, Vertex i, Vertex j, Vertex u, Vertex v) {
    const TwoSeparation sep = split(g, i, j);
    const bool same = (sep.first().contains(u) && sep.first().contains(v)) ||
                      (sep.second().contains(u) && sep.second().contains(v));
    return ratio_strings(same ? resistance_same_side(sep, u, v) : resistance_cross(sep, u, v));
  });

  m.def("gen_straight", &gen_straight);
  m.def("gen_bent", &gen_bent);
  m.def("gen_sierpinski", [](std::size_t n) { return gen_sierpinski(n).graph; });

  m.def("fib", [](std::int64_t p) { return fib(p).get_str(); });
  m.def("lucas", [](std::int64_t q) { return lucas(q).get_str(); });
  m.def("straight_trees", [](std::size_t n) { return straight_trees(n).get_str(); });
  m.def("straight_forest_closed",
        [](std::size_t u, std::size_t v, std::size_t n) { return straight_forest_closed(u, v, n).get_str(); });
  m.def("straight_resistance_closed", [](std::size_t j, std::size_t k, std::size_t n) {
    return ratio_strings(straight_resistance_closed(j, k, n));
  });
  m.def("bent_forest",
        [](std::size_t u, std::size_t v, std::size_t n, std::size_t k) { return bent_forest(u, v, n, k).get_str(); });
  m.def("bent_end_resistance", [](std::size_t n, std::size_t k) { return ratio_strings(bent_end_resistance(n, k)); });
  m.def("sierpinski_trees", [](std::size_t n) { return sierpinski_trees(n).get_str(); });
  m.def("sierpinski_corner_forests", [](std::size_t n) { return sierpinski_corner_forests(n).get_str(); });
  m.def("sierpinski_corner_resistance", [](std::size_t n) { return ratio_strings(sierpinski_corner_resistance(n)); });
}
