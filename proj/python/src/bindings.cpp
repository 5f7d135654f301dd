#include "treewalk/derive.hpp"
#include "treewalk/derived_io.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/graph_io.hpp"
#include "treewalk/partition.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace treewalk;

namespace {

py::int_ to_py(const BigInt& x)
{
    std::ostringstream s;
    s << x;
    return py::int_(py::str(s.str()));
}

py::list coefficients(const IntPoly& p)
{
    py::list out;
    for (const auto& c : p.descending()) {
        out.append(to_py(c));
    }
    return out;
}

py::dict tree_dict(const PrimitiveGraph& g, const TreeData& t)
{
    py::dict d;
    d["vt"] = subgraph_vertices(t);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (const auto& e : subgraph_edges(g, t)) {
        es.emplace_back(e.u, e.v);
    }
    d["et"] = es;
    return d;
}

PrimitiveGraph make_graph(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges)
{
    return PrimitiveGraph::from_edge_list(n, edges);
}

py::dict scan_dict(const ScanResult& r)
{
    py::dict d;
    d["time"] = r.time ? py::cast(*r.time) : py::none();
    d["best_value"] = r.best_value;
    d["best_time"] = r.best_time;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Tree-line graphs, tree partitions and continuous-time quantum walks";

    auto base_error = py::register_exception<Error>(m, "TreewalkError");
    py::register_exception<DerivationTooLarge>(m, "DerivationTooLarge", base_error.ptr());
    py::register_exception<NotConnected>(m, "NotConnected", base_error.ptr());
    py::register_exception<NotEquitable>(m, "NotEquitable", base_error.ptr());
    py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
    py::register_exception<UnknownVertex>(m, "UnknownVertex", base_error.ptr());

    py::class_<PrimitiveGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &PrimitiveGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const PrimitiveGraph& g) {
                                   std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
                                   for (const auto& e : g.edges()) {
                                       out.emplace_back(e.u, e.v);
                                   }
                                   return out;
                               })
        .def("degree", &PrimitiveGraph::degree)
        .def("is_connected", &PrimitiveGraph::is_connected)
        .def("adjacency", [](const PrimitiveGraph& g) { return adjacency_matrix(g.simple()); });

    m.def("load_graph", [](const std::filesystem::path& p) { return load_graph(p); }, py::arg("path"));

    py::class_<DerivedGraph>(m, "DerivedGraph")
        .def_property_readonly("kind", [](const DerivedGraph& d) { return std::string(to_string(d.kind())); })
        .def_property_readonly("level", &DerivedGraph::level)
        .def_property_readonly("vertex_count", &DerivedGraph::vertex_count)
        .def_property_readonly("edge_count", &DerivedGraph::edge_count)
        .def_property_readonly("edges", [](const DerivedGraph& d) { return d.graph().edges; })
        .def("label", &vertex_label, py::arg("vertex"))
        .def("resolve", &resolve_label, py::arg("label"))
        .def("tree", [](const DerivedGraph& d, std::size_t v) { return tree_dict(d.base(), d.vertex(v).tree); })
        .def("adjacency", [](const DerivedGraph& d) { return adjacency_matrix(d.graph()); })
        .def("incidence_factorization_check", &incidence_factorization_check)
        .def("to_json", [](const DerivedGraph& d) { return derived_to_json(d).dump(); });

    m.def(
        "derive",
        [](const PrimitiveGraph& g, const std::string& kind, std::uint32_t level, std::uint64_t max_vertices,
           std::uint64_t max_edges) {
            return derive_iterated(g, parse_kind(kind), level, GrowthLimits{max_vertices, max_edges});
        },
        py::arg("graph"), py::arg("kind"), py::arg("level"), py::arg("max_vertices") = GrowthLimits{}.max_vertices,
        py::arg("max_edges") = GrowthLimits{}.max_edges);
    m.def("k_tree_graph", [](const PrimitiveGraph& g, std::size_t k) { return k_tree_graph(g, k); }, py::arg("graph"),
          py::arg("k"));
    m.def(
        "enumerate_k_trees",
        [](const PrimitiveGraph& g, std::size_t k) {
            py::list out;
            for (const auto& t : enumerate_k_trees(g, k)) {
                out.append(tree_dict(g, t));
            }
            return out;
        },
        py::arg("graph"), py::arg("k"));

    m.def(
        "tree_partition",
        [](const DerivedGraph& d) {
            const auto p = tree_partition(d);
            py::dict out;
            out["classes"] = p.classes;
            py::list trees;
            for (const auto& t : p.class_trees) {
                trees.append(tree_dict(d.base(), t));
            }
            out["trees"] = trees;
            out["equitable"] = is_equitable(d, p).equitable;
            return out;
        },
        py::arg("derived"));
    m.def(
        "quotient_matrix", [](const DerivedGraph& d) { return quotient_matrix(d, tree_partition(d)).b; },
        py::arg("derived"));
    m.def(
        "btl_class_structure",
        [](const PrimitiveGraph& g, std::uint32_t level) {
            const auto s = btl_class_structure(g, level);
            py::dict out;
            out["vertex_count"] = s.vertex_count;
            out["edge_count"] = s.edge_count;
            out["sizes"] = s.sizes;
            out["quotient"] = s.quotient();
            return out;
        },
        py::arg("graph"), py::arg("level"));

    m.def("char_poly", [](const IntMatrix& a) { return coefficients(char_poly_exact(a)); }, py::arg("matrix"));
    m.def("factored_char_poly", [](const IntMatrix& a) { return factored_form(char_poly_exact(a)); },
          py::arg("matrix"));
    m.def(
        "multipartite_char_poly",
        [](const std::vector<std::size_t>& parts) { return coefficients(multipartite_char_poly(parts)); },
        py::arg("parts"));
    m.def(
        "integer_roots",
        [](const std::vector<std::int64_t>& descending) {
            std::vector<BigInt> c(descending.begin(), descending.end());
            const auto r = integer_roots(IntPoly::from_descending(std::move(c)));
            py::list roots;
            for (const auto& [value, mult] : r.roots) {
                roots.append(py::make_tuple(to_py(value), mult));
            }
            return py::make_tuple(roots, coefficients(r.remainder));
        },
        py::arg("coefficients"));
    m.def(
        "periodicity_classify",
        [](const IntMatrix& a, bool quotient) {
            const auto v = periodicity_classify(a, quotient ? MatrixOrigin::Quotient : MatrixOrigin::Adjacency);
            py::dict out;
            out["status"] = to_string(v.status);
            out["delta"] = to_py(v.delta);
            out["evidence"] = v.evidence;
            out["bipartite"] = v.bipartite ? py::cast(*v.bipartite) : py::none();
            return out;
        },
        py::arg("matrix"), py::arg("quotient") = false);
    m.def("eigenvalues", &eigenvalues_numeric, py::arg("matrix"));

    m.def("transition_operator", &transition_operator, py::arg("matrix"), py::arg("t"));
    m.def(
        "periodic_return_scan",
        [](const IntMatrix& a, double t_max, double step) {
            return scan_dict(periodic_return_scan(a, ScanOptions{t_max, step}));
        },
        py::arg("matrix"), py::arg("t_max") = 100.0, py::arg("step") = 0.01);
    m.def(
        "pst_scan",
        [](const IntMatrix& a, std::size_t u, std::size_t v, double t_max, double step) {
            return scan_dict(pst_scan(a, u, v, ScanOptions{t_max, step}));
        },
        py::arg("matrix"), py::arg("u"), py::arg("v"), py::arg("t_max") = 100.0, py::arg("step") = 0.01);
    m.def(
        "infinitesimal_table",
        [](const DerivedGraph& d, const std::string& initial, double epsilon) {
            const auto t = infinitesimal_table(d, static_cast<std::uint32_t>(resolve_label(d, initial)), epsilon);
            py::list rows;
            for (const auto& r : t.rows) {
                py::dict row;
                row["label"] = r.label;
                row["amplitude"] = r.exact;
                row["class"] = to_string(r.row_class);
                rows.append(row);
            }
            return rows;
        },
        py::arg("derived"), py::arg("initial"), py::arg("epsilon") = 1e-3);
}
