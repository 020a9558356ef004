#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eppa/io.hpp"
#include "eppa/oracle.hpp"

namespace py = pybind11;
using namespace eppa;

namespace {

Graph graph_from_python(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = n;
    for (const auto& [u, v] : edges) g.edges.insert(make_edge(u, v));
    auto report = validate_graph(g);
    if (!report.ok()) throw py::value_error(report.issues.front());
    return g;
}

TwoGraph two_graph_from_python(int n, const std::vector<std::tuple<int, int, int>>& triples) {
    TwoGraph t;
    t.n = n;
    for (const auto& [a, b, c] : triples) t.triples.insert(make_triple(a, b, c));
    auto report = validate_two_graph(t);
    if (!report.ok()) throw py::value_error(report.issues.front());
    return t;
}

AntipodalSpace antipodal_from_python(int n, const std::vector<std::tuple<int, int, int>>& dists) {
    AntipodalSpace a(n);
    for (const auto& [u, v, d] : dists) a.set_dist(u, v, d);
    auto report = validate_antipodal(a);
    if (!report.ok()) throw py::value_error(report.issues.front());
    return a;
}

PartialMap map_from_python(const std::vector<std::pair<int, int>>& pairs, StructureKind kind) {
    PartialMap f{{}, {}, kind};
    for (const auto& [u, v] : pairs) {
        f.dom.push_back(u);
        f.img.push_back(v);
    }
    return f;
}

std::vector<std::pair<int, int>> edges_to_python(const Graph& g) {
    return {g.edges.begin(), g.edges.end()};
}

std::vector<std::tuple<int, int, int>> triples_to_python(const TwoGraph& t) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& tr : t.triples) out.emplace_back(tr[0], tr[1], tr[2]);
    return out;
}

} // namespace

PYBIND11_MODULE(_eppa, m) {
    m.doc() = "coherent EPPA witnesses for antipodal spaces, switching classes and two-graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_python), py::arg("n"), py::arg("edges"))
        .def_readonly("n", &Graph::n)
        .def_property_readonly("edges", &edges_to_python)
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", edges=" +
                   std::to_string(g.edges.size()) + ")";
        });

    py::class_<TwoGraph>(m, "TwoGraph")
        .def(py::init(&two_graph_from_python), py::arg("n"), py::arg("triples"))
        .def_readonly("n", &TwoGraph::n)
        .def_property_readonly("triples", &triples_to_python)
        .def("has_triple", &TwoGraph::has_triple)
        .def("__eq__", [](const TwoGraph& a, const TwoGraph& b) { return a == b; })
        .def("__repr__", [](const TwoGraph& t) {
            return "TwoGraph(n=" + std::to_string(t.n) + ", triples=" +
                   std::to_string(t.triples.size()) + ")";
        });

    py::class_<AntipodalSpace>(m, "AntipodalSpace")
        .def(py::init(&antipodal_from_python), py::arg("n"), py::arg("distances"))
        .def_readonly("n", &AntipodalSpace::n)
        .def("dist", &AntipodalSpace::dist)
        .def("antipode", [](const AntipodalSpace& a, int v) { return antipode(a, v); })
        .def("matching_edges",
             [](const AntipodalSpace& a) {
                 auto edges = matching_edges(a);
                 return std::vector<std::pair<int, int>>(edges.begin(), edges.end());
             })
        .def("__eq__",
             [](const AntipodalSpace& a, const AntipodalSpace& b) { return a == b; })
        .def("__repr__", [](const AntipodalSpace& a) {
            return "AntipodalSpace(n=" + std::to_string(a.n) + ")";
        });

    m.def(
        "seidel_switch",
        [](const Graph& g, const std::set<int>& s) { return seidel_switch(g, s); },
        py::arg("graph"), py::arg("switch_set"));
    m.def("associated_two_graph", &associated_two_graph);
    m.def(
        "find_switch_set",
        [](const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& pairs)
            -> std::optional<std::set<int>> {
            return find_switch_set(g, h, map_from_python(pairs, StructureKind::graph));
        },
        py::arg("g"), py::arg("h"), py::arg("map"));
    m.def("double_cover", [](const Graph& g) { return double_cover(g); });
    m.def("two_graph_of_antipodal", &two_graph_of_antipodal);
    m.def("graph_of_two_graph", &graph_of_two_graph, py::arg("two_graph"), py::arg("base") = 0);

    py::class_<WitnessContext>(m, "WitnessContext")
        .def_property_readonly("num_edges", &WitnessContext::num_edges)
        .def_property_readonly("witness_size", &WitnessContext::witness_size)
        .def("distance",
             [](const WitnessContext& ctx, std::pair<int, std::uint64_t> u,
                std::pair<int, std::uint64_t> v) {
                 return ctx.distance({u.first, u.second}, {v.first, v.second});
             })
        .def("psi",
             [](const WitnessContext& ctx, int v) {
                 return std::pair<int, std::uint64_t>{ctx.psi(v).edge, ctx.psi(v).chi};
             })
        .def("materialize", &WitnessContext::materialize, py::arg("max_edges") = 12);

    m.def("build_witness", &build_witness);
    m.def(
        "extend_automorphism",
        [](const WitnessContext& ctx, const std::vector<std::pair<int, int>>& pairs) {
            WitnessAutomorphism theta =
                extend_automorphism(ctx, map_from_python(pairs, StructureKind::antipodal));
            std::vector<std::pair<int, int>> flips;
            int n = static_cast<int>(theta.edge_perm.size());
            for (int e = 0; e < n; ++e)
                for (int f = e; f < n; ++f)
                    if ((theta.flips[e] >> f) & 1) flips.emplace_back(e, f);
            return std::make_pair(theta.edge_perm, flips);
        },
        py::arg("context"), py::arg("map"),
        "returns (edge permutation, flip set as unordered pairs)");

    py::class_<SwitchingEppaCertificate>(m, "SwitchingEppaCertificate")
        .def_readonly("source", &SwitchingEppaCertificate::source)
        .def_readonly("witness", &SwitchingEppaCertificate::witness)
        .def_readonly("embedding", &SwitchingEppaCertificate::embedding);

    m.def("switching_eppa_witness", &switching_eppa_witness, py::arg("graph"),
          py::arg("max_edges") = 12);
    m.def(
        "extend_plain_iso",
        [](const SwitchingEppaCertificate& cert,
           const std::vector<std::pair<int, int>>& pairs) {
            return extend_plain_iso(cert, map_from_python(pairs, StructureKind::graph));
        },
        py::arg("certificate"), py::arg("map"));
    m.def(
        "extend_switching_iso",
        [](const SwitchingEppaCertificate& cert, const std::vector<std::pair<int, int>>& pairs,
           const std::set<int>& switch_set) {
            SwitchingAutomorphism out = extend_switching_iso(
                cert, {map_from_python(pairs, StructureKind::graph), switch_set});
            return std::make_pair(out.map, out.switch_set);
        },
        py::arg("certificate"), py::arg("map"), py::arg("switch_set"));

    py::class_<TwoGraphEppaCertificate>(m, "TwoGraphEppaCertificate")
        .def_readonly("source", &TwoGraphEppaCertificate::source)
        .def_readonly("derived", &TwoGraphEppaCertificate::derived)
        .def_readonly("witness", &TwoGraphEppaCertificate::witness)
        .def_readonly("embedding", &TwoGraphEppaCertificate::embedding);

    m.def("two_graph_eppa_witness", &two_graph_eppa_witness, py::arg("two_graph"),
          py::arg("max_edges") = 12);
    m.def(
        "extend_two_graph_partial",
        [](const TwoGraphEppaCertificate& cert, const std::vector<std::pair<int, int>>& pairs) {
            return extend_two_graph_partial(cert,
                                            map_from_python(pairs, StructureKind::two_graph));
        },
        py::arg("certificate"), py::arg("map"));

    m.def("parse_graph", &parse_graph);
    m.def("parse_two_graph", &parse_two_graph);
    m.def("parse_antipodal", &parse_antipodal);
    m.def("serialize", [](const Graph& g) { return serialize(g); });
    m.def("serialize", [](const TwoGraph& t) { return serialize(t); });
    m.def("serialize", [](const AntipodalSpace& a) { return serialize(a); });
}
