#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "yutsis/canonical.hpp"
#include "yutsis/catalog.hpp"
#include "yutsis/connectivity.hpp"
#include "yutsis/enumerate.hpp"
#include "yutsis/exports.hpp"
#include "yutsis/graph.hpp"
#include "yutsis/hamilton.hpp"
#include "yutsis/invariants.hpp"
#include "yutsis/lcf.hpp"
#include "yutsis/wigner.hpp"

namespace py = pybind11;
using namespace yutsis;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const EdgeList& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

EdgeList to_edges(const std::vector<std::pair<int, int>>& pairs) {
  EdgeList edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return edges;
}

CubicGraph build(int n, const std::vector<std::pair<int, int>>& pairs) {
  return CubicGraph(n, to_edges(pairs));
}

py::dict classify_dict(const CubicGraph& g) {
  YutsisClass cls = classify(g);
  py::dict out;
  out["tag"] = cls.tag_string();
  if (cls.cyclic_connectivity)
    out["cyclic_connectivity"] = *cls.cyclic_connectivity;
  else
    out["cyclic_connectivity"] = py::none();
  if (cls.witness) {
    out["cut"] = edge_pairs(cls.witness->edges);
    out["side_sizes"] = cls.witness->side_sizes;
  } else {
    out["cut"] = py::none();
    out["side_sizes"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cubic graph catalog for closed Wigner 3jm products";

  py::register_exception<Error>(m, "YutsisError");

  py::class_<CubicGraph>(m, "CubicGraph")
      .def(py::init(&build), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &CubicGraph::n)
      .def_property_readonly("connected", &CubicGraph::connected)
      .def("edges", [](const CubicGraph& g) { return edge_pairs(g.edges()); })
      .def("neighbors",
           [](const CubicGraph& g, int v) {
             const auto& a = g.neighbors(v);
             return std::vector<int>(a.begin(), a.end());
           })
      .def("__eq__", [](const CubicGraph& a, const CubicGraph& b) { return a == b; })
      .def("__repr__", [](const CubicGraph& g) {
        return "CubicGraph(n=" + std::to_string(g.n()) + ", edges=" +
               std::to_string(g.edges().size()) + ")";
      });

  m.def("build_graph", &build, py::arg("n"), py::arg("edges"));
  m.def("enumerate_cubic", &enumerate_cubic, py::arg("n"));
  m.def("are_isomorphic", &are_isomorphic);
  m.def("canonical_edges", [](const CubicGraph& g) { return edge_pairs(canonical_form(g).edges); });
  m.def("all_pairs_distances", [](const CubicGraph& g) {
    DistanceMatrix d = all_pairs_distances(g);
    std::vector<std::vector<int>> rows(g.n(), std::vector<int>(g.n()));
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) rows[u][v] = d.at(u, v);
    return rows;
  });

  m.def("edge_connectivity", &edge_connectivity);
  m.def("cyclic_edge_connectivity", [](const CubicGraph& g) -> py::object {
    auto c = cyclic_edge_connectivity(g);
    return c ? py::cast(*c) : py::none();
  });
  m.def("classify", &classify_dict);

  m.def("hamiltonian_cycles", &hamiltonian_cycles);
  m.def("is_hamiltonian", &is_hamiltonian);

  m.def("encode_cycle", &encode_cycle);
  m.def("lcf_contract", &contract);
  m.def("lcf_expand", &expand);
  m.def("lcf_decode", [](const std::string& text) { return decode(text).first; });
  m.def("canonical_lcf", [](const CubicGraph& g) -> py::object {
    auto s = canonical_lcf(g);
    return s ? py::cast(*s) : py::none();
  });
  m.def("lcf_equivalent", &lcf_equivalent);

  m.def("wiener", &wiener);
  m.def("diameter", &diameter);
  m.def("girth", &girth);
  m.def("estrada", &estrada);
  m.def("adjacency_eigenvalues", &adjacency_eigenvalues);
  m.def("invariant_key", [](const CubicGraph& g) { return invariant_key(g).to_string(); });

  m.def("export_dot", py::overload_cast<const CubicGraph&>(&export_dot));
  m.def("export_smiles", &export_smiles);
  m.def("export_molfile",
        [](const CubicGraph& g) { return export_molfile(g); });

  m.def("parse_wigner_graph", [](const std::string& text) {
    DirectedCubicGraph dg = sum_to_graph(parse_wigner(text));
    return std::make_pair(dg.base(), dg.arcs());
  });
  m.def("identify_wigner", [](const std::string& text, int catalog_max_n) {
    Catalog catalog = build_catalog(catalog_max_n);
    WignerSum sum = parse_wigner(text);
    IdentifyResult id = identify(sum, catalog);
    py::dict out;
    out["symbol"] = id.symbol;
    out["class_tag"] = id.entry->class_tag;
    out["key"] = id.entry->key.to_string();
    out["n"] = id.entry->n;
    return out;
  });

  m.def("catalog_text", [](int max_n, bool irreducible_only_14) {
    Catalog catalog =
        build_catalog(max_n, irreducible_only_14 ? std::optional<int>(14) : std::nullopt);
    std::ostringstream out;
    save_catalog(catalog, out);
    return out.str();
  }, py::arg("max_n"), py::arg("irreducible_only_14") = false);
}
