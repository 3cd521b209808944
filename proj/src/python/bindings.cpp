#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supergraph/cli.hpp"
#include "supergraph/eigen.hpp"
#include "supergraph/error.hpp"
#include "supergraph/graph.hpp"
#include "supergraph/group.hpp"
#include "supergraph/io.hpp"
#include "supergraph/partition.hpp"
#include "supergraph/quotient.hpp"
#include "supergraph/theorems.hpp"

namespace py = pybind11;
using namespace supergraph;

namespace {

py::list to_ints(const PolynomialZ& p) {
  py::list out;
  for (const auto& c : p.coeffs()) {
    const std::string s = c.str();
    out.append(py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10)));
  }
  return out;
}

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(m.size(), std::vector<long long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return rows;
}

Json parse_params(const std::string& text) { return text.empty() ? Json::object() : Json::parse(text); }

Partition relation_partition(const FiniteGroup& g, const std::string& relation) {
  if (relation == "order") return order_partition(g);
  if (relation == "conjugacy") return conjugacy_partition(g);
  if (relation == "none") return least_partition(g.order());
  throw InvalidParameter("relation must be order, conjugacy or none");
}

}  // namespace

PYBIND11_MODULE(_supergraph, m) {
  m.doc() = "Super commuting graphs of finite groups and their spectra";
  py::register_exception<Error>(m, "SupergraphError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "Group")
      .def_static("from_table", &FiniteGroup::from_cayley_table, py::arg("table"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("index_of", &FiniteGroup::index_of)
      .def("table", &FiniteGroup::table)
      .def("__len__", &FiniteGroup::order);

  m.def("dihedral", &dihedral, py::arg("n"));
  m.def("quaternion", &generalized_quaternion, py::arg("n"));
  m.def("semidirect", &semidirect_pq, py::arg("p"), py::arg("q"));
  m.def("cyclic", &cyclic, py::arg("n"));
  m.def("group", [](const std::string& spec) { return parse_group_spec(spec).build(); }, py::arg("spec"));
  m.def("element_orders", &element_orders);
  m.def("center", &center);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::size_t, std::vector<std::vector<std::size_t>>>(), py::arg("n"), py::arg("blocks"))
      .def_property_readonly("n", &Partition::ground_size)
      .def_property_readonly("blocks", &Partition::blocks)
      .def("sizes", &Partition::sizes)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });
  m.def("order_partition", &order_partition);
  m.def("conjugacy_partition", &conjugacy_partition);
  m.def("refines", &refines);

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
             SimpleGraph g(n);
             for (auto [i, j] : edges) g.add_edge(i, j);
             return g;
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
      .def_property_readonly("n", &SimpleGraph::n)
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def("edges", &SimpleGraph::edges)
      .def("edge_count", &SimpleGraph::edge_count)
      .def("has_edge", &SimpleGraph::has_edge)
      .def("adjacency", [](const SimpleGraph& g) { return to_rows(g.adjacency()); })
      .def("laplacian", [](const SimpleGraph& g) { return to_rows(g.laplacian()); })
      .def("structure", [](const SimpleGraph& g) { return describe(twin_canonical_form(g)); })
      .def("to_dot", [](const SimpleGraph& g) { return graph_to_dot(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; });

  m.def("commuting_graph", &commuting_graph);
  m.def("super_graph", &super_graph, py::arg("graph"), py::arg("partition"));
  m.def("compressed_graph", &compressed_graph, py::arg("graph"), py::arg("partition"));
  m.def(
      "super_commuting_graph",
      [](const FiniteGroup& g, const std::string& relation) {
        return super_graph(commuting_graph(g), relation_partition(g, relation));
      },
      py::arg("group"), py::arg("relation") = "order");

  m.def(
      "eigenvalues", [](const SimpleGraph& g, bool laplacian) {
        return jacobi_eigenvalues_sorted((laplacian ? g.laplacian() : g.adjacency()).cast<double>());
      },
      py::arg("graph"), py::arg("laplacian") = false);
  m.def(
      "charpoly", [](const SimpleGraph& g, bool laplacian) {
        return to_ints(char_poly_integer(laplacian ? g.laplacian() : g.adjacency()));
      },
      py::arg("graph"), py::arg("laplacian") = false);
  m.def(
      "quotient_charpoly",
      [](const SimpleGraph& g, const Partition& p, bool laplacian) {
        return to_ints(laplacian ? super_laplacian_charpoly(g, p) : super_adjacency_charpoly(g, p));
      },
      py::arg("graph"), py::arg("partition"), py::arg("laplacian") = false);

  m.def(
      "_closed_form",
      [](const std::string& claim, const std::string& params) {
        const auto form = closed_form(claim, parse_params(params));
        if (const auto* f = std::get_if<FactoredPolynomial>(&form)) return spectrum_to_json(f->spectrum()).dump();
        return spectrum_to_json(std::get<Spectrum>(form)).dump();
      });
  m.def("_verify", [](const std::string& claim, const std::string& params) {
    const Json p = parse_params(params);
    const bool spectral = claim.rfind("Thm4.1", 0) == 0 || claim.rfind("Thm4.2", 0) == 0 || claim.rfind("S4.2-adj", 0) == 0 ||
                          claim == "S4.2-lap";
    return report_to_json(spectral ? verify_spectral(claim, p) : verify_structure(claim, p)).dump();
  });
  m.def("_verify_generic", [](const std::string& claim, std::uint64_t seed, std::size_t trials) {
    return report_to_json(verify_generic_claim(claim, seed, trials)).dump();
  });
  m.def("_run_suite", [](const std::string& suite, std::size_t jobs) {
    SuiteOptions opts;
    opts.jobs = jobs;
    std::vector<ClaimReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite(suite, opts);
    }
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return out.dump();
  });
}
