#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "altan/exact_linalg.hpp"
#include "altan/graph.hpp"
#include "altan/kernel.hpp"
#include "altan/patch.hpp"
#include "altan/polyhex.hpp"
#include "altan/survey.hpp"

namespace py = pybind11;
using namespace altan;

namespace {

std::vector<std::string> to_strings(const RationalVector& q) {
    std::vector<std::string> out;
    out.reserve(q.size());
    for (const auto& x : q) out.push_back(x.get_str());
    return out;
}

} // namespace

PYBIND11_MODULE(_altan, m) {
    m.doc() = "altan construction, exact nullity and benzenoid surveys";

    py::register_exception<Error>(m, "AltanError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return make_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) +
                   ")";
        });

    py::class_<AltanPair>(m, "AltanPair")
        .def_readonly("graph", &AltanPair::graph)
        .def_readonly("level", &AltanPair::level)
        .def_property_readonly("attachment",
                               [](const AltanPair& p) { return p.attachment.vertices; });

    py::class_<PlanarPatch>(m, "Patch")
        .def_readonly("graph", &PlanarPatch::graph)
        .def_property_readonly("face_sizes",
                               [](const PlanarPatch& p) {
                                   std::vector<int> sizes;
                                   for (int i = 0; i < static_cast<int>(p.faces.size()); ++i)
                                       if (i != p.outer)
                                           sizes.push_back(static_cast<int>(p.faces[i].size()));
                                   return sizes;
                               })
        .def("__repr__", [](const PlanarPatch& p) {
            return "Patch(n=" + std::to_string(p.graph.n) + ", faces=" +
                   std::to_string(p.face_count()) + ")";
        });

    m.def(
        "pair",
        [](const Graph& g, const std::vector<int>& attachment) {
            return make_altan_pair(g, AttachmentSet{attachment});
        },
        py::arg("graph"), py::arg("attachment"));
    m.def(
        "altan", [](const AltanPair& p, int k) { return iterated_altan(p, k); }, py::arg("pair"),
        py::arg("k") = 1);
    m.def("nullity", [](const Graph& g) { return nullity(g); });
    m.def("kernel", [](const Graph& g) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : kernel_basis(adjacency_matrix(g))) out.push_back(to_strings(v));
        return out;
    });
    m.def(
        "excess",
        [](const Graph& g, const std::vector<int>& attachment) {
            auto rep = excess_nullity(make_altan_pair(g, AttachmentSet{attachment}));
            return py::make_tuple(rep.parent_nullity, rep.altan_nullity, rep.excess);
        },
        py::arg("graph"), py::arg("attachment"));
    m.def("special_vector",
          [](const AltanPair& p) { return to_strings(special_vector(p)); });

    m.def("parse_bec", &parse_bec, py::arg("code"));
    m.def("bec", &boundary_edge_code, py::arg("patch"));
    m.def("altan_of_patch", &altan_of_patch, py::arg("patch"));
    m.def(
        "kekule", [](const PlanarPatch& p) { return count_perfect_matchings(p.graph); },
        py::arg("patch"));
    m.def(
        "benzenoids",
        [](int eps) {
            std::vector<std::string> codes;
            enumerate_benzenoids(
                eps, [&](const Polyhex& p) { codes.push_back(boundary_edge_code(to_patch(p))); },
                std::max(eps, kDefaultEnumerationCap));
            return codes;
        },
        py::arg("eps"));
    m.def(
        "survey",
        [](const std::string& family, int eps, const std::string& format) {
            SurveyTable t = run_survey(family_from_string(family), 1, eps);
            return emit_table(t, table_format_from_string(format));
        },
        py::arg("family"), py::arg("eps"), py::arg("format") = "markdown");
}
