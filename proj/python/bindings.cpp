#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpn/builder.hpp"
#include "bpn/io.hpp"
#include "bpn/oracle.hpp"
#include "bpn/properties.hpp"
#include "bpn/verifier.hpp"

namespace py = pybind11;
using namespace bpn;

namespace {

using Vertex = std::vector<int>;

std::vector<VertexId> to_ids(const BurntPancakeGraph& g, const std::vector<Vertex>& s) {
  std::vector<VertexId> out;
  for (const auto& v : s) out.push_back(g.id(SignedPermutation(v)));
  return out;
}

py::dict family_dict(const BurntPancakeGraph& g, const STreeFamily& fam) {
  py::list trees;
  for (const Tree& t : fam.trees) {
    py::list verts, edges;
    for (VertexId v : t.vertices) verts.append(g.vertex(v).symbols());
    for (auto [a, b] : t.edges) edges.append(py::make_tuple(g.vertex(a).symbols(), g.vertex(b).symbols()));
    py::dict d;
    d["vertices"] = verts;
    d["edges"] = edges;
    trees.append(d);
  }
  py::list s;
  for (VertexId v : fam.s) s.append(g.vertex(v).symbols());
  py::dict out;
  out["n"] = fam.n;
  out["s"] = s;
  out["trees"] = trees;
  out["case_trace"] = fam.case_trace;
  out["repaired"] = fam.repaired;
  out["json"] = family_to_json(g, fam);
  return out;
}

}  // namespace

PYBIND11_MODULE(_bpn, m) {
  m.doc() = "Burnt pancake graphs and internally disjoint S-trees";

  py::register_exception<ConstructionDefect>(m, "ConstructionDefect");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("prefix_reversal", [](const Vertex& x, int i) { return prefix_reversal(SignedPermutation(x), i).symbols(); });
  m.def("out_neighbour", [](const Vertex& x) { return out_neighbour(SignedPermutation(x)).symbols(); });
  m.def("gamma_neighbour", [](const Vertex& x, int i) { return gamma_neighbour(SignedPermutation(x), i).symbols(); });

  py::class_<BurntPancakeGraph, std::shared_ptr<BurntPancakeGraph>>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &BurntPancakeGraph::n)
      .def_property_readonly("vertex_count", &BurntPancakeGraph::vertex_count)
      .def_property_readonly("edge_count", &BurntPancakeGraph::edge_count)
      .def("vertex", [](const BurntPancakeGraph& g, VertexId v) { return g.vertex(v).symbols(); })
      .def("id", [](const BurntPancakeGraph& g, const Vertex& x) { return g.id(SignedPermutation(x)); })
      .def("neighbours", &BurntPancakeGraph::neighbours)
      .def("cluster", &BurntPancakeGraph::cluster)
      .def("girth", [](const BurntPancakeGraph& g) { return girth(g); })
      .def("to_json", [](const BurntPancakeGraph& g) { return graph_to_json(g); })
      .def("__repr__", [](const BurntPancakeGraph& g) { return "<Graph BP_" + std::to_string(g.n()) + ">"; });

  m.def(
      "build_idsts",
      [](const BurntPancakeGraph& g, const std::vector<Vertex>& s) {
        const auto ids = to_ids(g, s);
        const STreeFamily fam = ids.size() == 3 ? build_idsts_3(g, ids) : build_idsts(g, ids);
        return family_dict(g, fam);
      },
      py::arg("graph"), py::arg("s"), "n-1 verified S-trees for 3 or 4 terminals");

  m.def(
      "verify",
      [](const std::string& family_json, int expected) {
        const STreeFamily fam = family_from_json(family_json);
        const auto g = shared_graph(fam.n);
        const auto report = verify_family(*g, fam.s, fam, expected < 0 ? fam.n - 1 : expected);
        std::vector<std::string> kinds;
        for (const auto& v : report.violations) kinds.push_back(to_string(v.kind));
        return py::make_tuple(report.ok, kinds);
      },
      py::arg("family_json"), py::arg("expected") = -1, "(ok, violation kinds) for a family JSON document");

  m.def(
      "max_idsts",
      [](const BurntPancakeGraph& g, const std::vector<Vertex>& s, int target, std::uint64_t budget) {
        const auto r = max_idsts_bruteforce(g, to_ids(g, s), target, budget);
        py::dict out;
        out["max_idsts_found"] = r.max_idsts_found;
        out["exhausted"] = r.exhausted;
        out["expansions"] = r.expansions;
        out["certificate"] = family_dict(g, r.certificate);
        return out;
      },
      py::arg("graph"), py::arg("s"), py::arg("target"), py::arg("budget") = 50'000'000);

  m.def("upper_bound_kappa4", &upper_bound_kappa4);
}
