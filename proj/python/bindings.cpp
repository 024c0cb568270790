#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gminor/bipperm.hpp"
#include "gminor/club.hpp"
#include "gminor/cograph.hpp"
#include "gminor/errors.hpp"
#include "gminor/io.hpp"
#include "gminor/oracle.hpp"
#include "gminor/recognition.hpp"
#include "gminor/reductions.hpp"

namespace py = pybind11;
using namespace gminor;

namespace {

OracleOptions options(int cap, int threads) {
  OracleOptions o;
  o.cap = cap;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_gminor, m) {
  m.doc() = "Hadwiger numbers, clique-matchings and s-club contractions";

  auto base = py::register_exception<Error>(m, "GminorError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<FormatError>(m, "FormatError", base);
  auto domain = py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", domain);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<InvalidStructureError>(m, "InvalidStructureError", base);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph", [](const std::string& text, const std::string& format) {
    return parse_graph(text, parse_format_name(format));
  }, py::arg("text"), py::arg("format") = "edgelist");
  m.def("emit_graph", [](const Graph& g, const std::string& format) {
    return emit_graph(g, parse_format_name(format));
  }, py::arg("graph"), py::arg("format") = "edgelist");

  m.def("diameter", [](const Graph& g) -> std::optional<int> {
    const int d = diameter(g);
    if (d == kInfinity) return std::nullopt;
    return d;
  });
  m.def("is_connected", &is_connected);
  m.def("clique_number", &clique_number);
  m.def("contract_edges", [](const Graph& g, const std::vector<Edge>& s) { return contract_edges(g, s); });
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);

  m.def("recognize_cograph", [](const Graph& g) -> py::object {
    auto r = recognize_cograph(g);
    if (auto* t = std::get_if<Cotree>(&r)) return py::cast(to_string(*t));
    return py::cast(std::get<InducedP4>(r));
  }, "Cotree text for a cograph, otherwise an induced P4 as a 4-tuple.");
  m.def("strong_ordering", [](const Graph& g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
    auto o = strong_ordering(g);
    if (!o) return std::nullopt;
    return std::make_pair(o->side1, o->side2);
  });
  m.def("is_bipartite_permutation", &is_bipartite_permutation);
  m.def("find_asteroidal_triple", &find_asteroidal_triple);
  m.def("is_at_free", &is_at_free);
  m.def("diameter_dominating_pair", &diameter_dominating_pair);
  m.def("is_split", &is_split);
  m.def("is_cobipartite", &is_cobipartite);
  m.def("is_chordal", &is_chordal);

  m.def("hadwiger_cograph", [](const Graph& g) {
    auto r = hadwiger_cograph(g);
    return py::dict(py::arg("h") = r.h, py::arg("c_r") = r.table.c, py::arg("cotree") = to_string(r.cotree));
  });
  m.def("hadwiger_bipperm", [](const Graph& g) {
    auto r = hadwiger_bipperm(g);
    return py::dict(py::arg("h") = r.h, py::arg("singletons") = r.singletons, py::arg("bags") = r.bags);
  });
  m.def("max_clique_matching", [](const Graph& g) {
    auto r = max_clique_matching(g);
    return py::dict(py::arg("size") = r.size, py::arg("edges") = r.edges);
  });

  m.def("s_club_contract_decide", [](const Graph& g, int k, int s) {
    auto r = s_club_contract_decide(g, k, s);
    return py::dict(py::arg("yes") = r.yes, py::arg("witness") = r.witness, py::arg("rule") = r.rule);
  }, py::arg("graph"), py::arg("k"), py::arg("s"));
  m.def("min_club_contraction_atfree", [](const Graph& g, int s) {
    auto r = min_club_contraction_atfree(g, s);
    return py::dict(py::arg("k_min") = r.k_min, py::arg("witness") = r.witness, py::arg("bags") = r.bags);
  }, py::arg("graph"), py::arg("s"));

  m.def("hadwiger_oracle", [](const Graph& g, int cap, int threads) {
    auto r = hadwiger_oracle(g, options(cap, threads));
    return py::dict(py::arg("value") = r.value, py::arg("bags") = r.bags);
  }, py::arg("graph"), py::arg("cap") = kPartitionOracleCap, py::arg("threads") = 1);
  m.def("max_s_club_minor_oracle", [](const Graph& g, int s, int cap, int threads) {
    auto r = max_s_club_minor_oracle(g, s, options(cap, threads));
    return py::dict(py::arg("value") = r.value, py::arg("bags") = r.bags);
  }, py::arg("graph"), py::arg("s"), py::arg("cap") = kPartitionOracleCap, py::arg("threads") = 1);
  m.def("min_club_contraction_oracle", [](const Graph& g, int s, int k_max) -> std::optional<std::vector<Edge>> {
    auto r = min_club_contraction_oracle(g, s, k_max);
    if (!r) return std::nullopt;
    return r->edges;
  }, py::arg("graph"), py::arg("s"), py::arg("k_max"));
  m.def("clique_matching_oracle", [](const Graph& g) { return clique_matching_oracle(g).value; });
  m.def("nice_structure_oracle", [](const Graph& g, int max_singletons) {
    auto r = nice_structure_oracle(g, kPartitionOracleCap, max_singletons);
    return py::dict(py::arg("max_p") = r.max_p, py::arg("c_r") = r.c, py::arg("bags") = r.bags);
  }, py::arg("graph"), py::arg("max_singletons") = -1);

  auto instance = [](const ReductionInstance& r) {
    return py::dict(py::arg("graph") = r.graph, py::arg("k") = r.k, py::arg("s") = r.s, py::arg("target") = r.target,
                    py::arg("roles") = r.roles);
  };
  m.def("nae3sat_to_cobipartite", [instance](int n, const std::vector<std::array<int, 3>>& clauses) {
    return instance(nae3sat_to_cobipartite(NaeFormula{n, clauses}));
  }, py::arg("n"), py::arg("clauses"));
  m.def("hitting_set_reduction", [instance](int n, const std::vector<std::vector<int>>& sets, int k, int s) {
    HittingSetInstance h{n, sets, k};
    if (s == 2) return instance(hitting_set_to_split(h));
    if (s == 3) return instance(hitting_set_to_chordal(h));
    throw DomainError("s must be 2 or 3");
  }, py::arg("n"), py::arg("sets"), py::arg("k"), py::arg("s") = 2);
  m.def("pendant_lift", &pendant_lift);
  m.def("subdivide_edges", &subdivide_edges);
}
