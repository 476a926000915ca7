// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsekit/atlas.hpp"
#include "sparsekit/bounds.hpp"
#include "sparsekit/certify.hpp"
#include "sparsekit/enumerate.hpp"
#include "sparsekit/linalg.hpp"

namespace py = pybind11;
using namespace sparsekit;

namespace {

// big integers cross the boundary as Python ints via their decimal form
py::int_ to_py(const BigInt& v) { return py::cast(v.str()).cast<py::int_>(); }

BitMatrix matrix_from_rows(const std::vector<std::string>& rows) {
    return BitMatrix::from_rows(rows);
}

TheoremMode mode_of(const std::string& mode) {
    if (mode == "det") return TheoremMode::Det;
    if (mode == "perm") return TheoremMode::Perm;
    throw std::invalid_argument("mode must be 'det' or 'perm'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact determinant/permanent toolkit for sparse 0/1 matrices";

    py::class_<BitMatrix>(m, "BitMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_static("parse_text", &BitMatrix::parse_text)
        .def_static("identity", &BitMatrix::identity)
        .def("to_text", &BitMatrix::to_text)
        .def_property_readonly("n", &BitMatrix::n)
        .def("get", &BitMatrix::get)
        .def("ones_count", &BitMatrix::ones_count);

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init<BitMatrix>())
        .def_property_readonly("n", &BipartiteGraph::part_size)
        .def_property_readonly("v", &BipartiteGraph::v)
        .def_property_readonly("e", &BipartiteGraph::e)
        .def_property_readonly("k", &BipartiteGraph::excess_k)
        .def("is_c4_free", &BipartiteGraph::is_c4_free)
        .def("is_connected", &BipartiteGraph::is_connected)
        .def("girth", &BipartiteGraph::girth)
        .def("degree", &BipartiteGraph::degree)
        .def("to_biadjacency", &BipartiteGraph::to_biadjacency)
        .def("canonical_form", [](const BipartiteGraph& g) { return canonical_form(g); });

    m.def("determinant", [](const BitMatrix& mtx) { return to_py(determinant(mtx)); });
    m.def("permanent", [](const BitMatrix& mtx) {
        return to_py(mtx.n() <= 16 ? permanent_ryser(mtx) : permanent_expand(mtx));
    });
    m.def("permanent_naive", [](const BitMatrix& mtx) { return to_py(permanent_naive(mtx)); });
    m.def("permanent_ryser", [](const BitMatrix& mtx) { return to_py(permanent_ryser(mtx)); });
    m.def("permanent_expand", [](const BitMatrix& mtx) { return to_py(permanent_expand(mtx)); });

    m.def("verify_theorem", [](const BipartiteGraph& g, const std::string& mode) {
        TheoremReport rep = verify_theorem(g, mode_of(mode));
        py::dict out;
        out["ok"] = rep.ok;
        out["value"] = to_py(rep.value);
        out["k"] = rep.k;
        out["slack"] = rep.slack.tuple_string();
        out["slack_decimal"] = rep.slack.decimal4();
        return out;
    }, py::arg("graph"), py::arg("mode") = "perm");

    m.def("f_value", [](const BipartiteGraph& g) {
        FNormal f = f_value(g);
        return py::make_tuple(to_py(f.value), f.k);
    });

    m.def("certify_json", [](const BipartiteGraph& g, const std::string& mode) {
        Certificate cert = certify(g, mode_of(mode));
        CheckReport chk = verify_certificate(cert);
        return py::make_tuple(cert.ok && chk.ok, certificate_to_json(cert));
    }, py::arg("graph"), py::arg("mode") = "perm");

    m.def("atlas_list", &atlas_list);
    m.def("atlas_graph", [](const std::string& id) { return atlas_make(id).graph; });

    m.def("enumerate_classes", [](int n, bool c4_free, bool connected, long long edge_min,
                                  long long edge_max) {
        EnumFilter f;
        f.n = n;
        f.require_c4_free = c4_free;
        f.require_connected = connected;
        f.edge_min = edge_min;
        f.edge_max = edge_max;
        std::vector<BipartiteGraph> out = enumerate_all(f);
        return out;
    }, py::arg("n"), py::arg("c4_free") = false, py::arg("connected") = false,
       py::arg("edge_min") = 0, py::arg("edge_max") = -1);

    m.def("conjecture_report", [](int k) {
        ConjectureRow row = conjecture_report(k);
        py::dict out;
        out["k"] = row.k;
        out["cage"] = row.graph_id;
        out["v_k"] = row.v_k;
        out["perm"] = to_py(row.perm);
        out["growth_constant"] = row.growth_constant;
        return out;
    });
}
