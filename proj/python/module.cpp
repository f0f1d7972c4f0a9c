#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projtree/conflict.hpp"
#include "projtree/digraph.hpp"
#include "projtree/growth.hpp"
#include "projtree/laplacian.hpp"
#include "projtree/mis.hpp"
#include "projtree/oracle.hpp"

namespace py = pybind11;
using namespace projtree;

namespace {

using ArcPair = std::pair<int, int>;

std::vector<Arc> to_arcs(const std::vector<ArcPair>& pairs) {
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [t, h] : pairs) arcs.push_back(Arc{t, h});
  return arcs;
}

std::vector<ArcPair> to_pairs(const std::vector<Arc>& arcs) {
  std::vector<ArcPair> pairs;
  pairs.reserve(arcs.size());
  for (Arc a : arcs) pairs.emplace_back(a.tail, a.head);
  return pairs;
}

Span to_span(ArcPair p) {
  if (p.first >= p.second)
    throw std::invalid_argument("span endpoints must satisfy lo < hi");
  return Span{p.first, p.second};
}

Strategy to_strategy(const std::string& name) {
  if (name == "direct") return Strategy::direct;
  if (name == "via-subgraphs") return Strategy::via_subgraphs;
  throw std::invalid_argument("strategy must be 'direct' or 'via-subgraphs'");
}

// Arbitrary-precision counts cross the boundary as real Python ints.
py::object to_py_int(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Projective spanning arborescence enumeration for digraphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](int n, const std::vector<ArcPair>& arcs,
                       std::optional<int> root) {
             return Digraph(n, to_arcs(arcs), root);
           }),
           py::arg("n"), py::arg("arcs"), py::arg("root") = std::nullopt)
      .def_property_readonly("n", &Digraph::label_bound)
      .def_property_readonly("vertex_count", &Digraph::vertex_count)
      .def_property_readonly("root", &Digraph::root)
      .def_property_readonly(
          "arcs", [](const Digraph& g) { return to_pairs(g.arcs()); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.label_bound()) +
               ", arcs=" + std::to_string(g.arc_count()) + ")";
      });

  m.def("parse_arc_list", &parse_arc_list, py::arg("text"));
  m.def("parse_adjacency_matrix", &parse_adjacency_matrix, py::arg("text"));
  m.def("to_arc_list", &to_arc_list, py::arg("g"));
  m.def(
      "to_dot",
      [](const Digraph& g, const std::vector<ArcPair>& highlight) {
        return to_dot(g, to_arcs(highlight));
      },
      py::arg("g"), py::arg("highlight") = std::vector<ArcPair>{});

  m.def(
      "edges_conflict",
      [](ArcPair a, ArcPair b) { return edges_conflict(to_span(a), to_span(b)); },
      py::arg("a"), py::arg("b"),
      "Whether two spans (lo, hi) properly cross.");
  m.def(
      "ordered_arcs",
      [](const Digraph& g) { return to_pairs(g.arcs()); }, py::arg("g"),
      "Arcs in the canonical edge order (index 1 first).");
  m.def(
      "edge_index",
      [](const Digraph& g, ArcPair span) {
        return edge_index_K(g, to_span(span));
      },
      py::arg("g"), py::arg("span"),
      "1-based rank of a span in the canonical edge order.");
  m.def(
      "conflicting_pairs",
      [](const Digraph& g) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (auto [i, j] : build_conflict_graph(g).conflicting_pairs())
          out.emplace_back(i + 1, j + 1);
        return out;
      },
      py::arg("g"), "Crossing arc pairs as 1-based edge-order indices.");

  m.def(
      "maximal_projective_subgraphs",
      [](const Digraph& g, std::size_t limit) {
        std::vector<std::vector<ArcPair>> out;
        for (const ArcSet& s : enumerate_maximal_projective_subgraphs(g, limit))
          out.push_back(to_pairs(g.arcs_of(s)));
        return out;
      },
      py::arg("g"), py::arg("limit") = 0,
      "Arc sets of all maximal projective subgraphs.");

  m.def(
      "count_arborescences",
      [](const Digraph& g, int root) {
        return to_py_int(count_arborescences(g, root));
      },
      py::arg("g"), py::arg("root"),
      "Exact number of spanning arborescences rooted at `root`.");
  m.def("has_arborescence", &has_arborescence, py::arg("g"), py::arg("root"));

  m.def(
      "projective_arborescences",
      [](const Digraph& g, int root, const std::string& strategy,
         std::size_t limit) {
        std::vector<std::vector<ArcPair>> out;
        for (const PreTree& t : enumerate_projective_arborescences(
                 g, root, to_strategy(strategy), limit))
          out.push_back(to_pairs(t.canonical_arcs()));
        return out;
      },
      py::arg("g"), py::arg("root"), py::arg("strategy") = "direct",
      py::arg("limit") = 0,
      "All projective spanning arborescences rooted at `root`, each as a "
      "(head, tail)-sorted arc list.");
}
