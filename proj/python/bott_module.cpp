#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bott/canon.hpp"
#include "bott/classify.hpp"
#include "bott/cohomology.hpp"
#include "bott/decompose.hpp"
#include "bott/digraph6.hpp"
#include "bott/json_io.hpp"

namespace py = pybind11;
using bott::BottMatrix;

namespace {

std::string matrix_repr(const BottMatrix& m) {
    if (m.strictly_upper_triangular()) return "Matrix.from_hex('" + m.to_hex() + "')";
    std::string bin = m.to_bin();
    for (auto& c : bin)
        if (c == '\n') c = '/';
    return "Matrix.from_bin('" + bin + "')";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classification engine for real Bott manifolds encoded as acyclic digraphs";

    auto base = py::register_exception<bott::Error>(m, "Error");
    py::register_exception<bott::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<bott::BudgetError>(m, "BudgetError", base.ptr());

    py::class_<BottMatrix>(m, "Matrix")
        .def_static("zero", &BottMatrix::zero, py::arg("n"))
        .def_static("from_bin", [](const std::string& s) { return BottMatrix::from_bin(s); },
                    py::arg("text"))
        .def_static("from_hex", [](const std::string& s) { return BottMatrix::from_hex(s); },
                    py::arg("text"))
        .def_static("from_rows", &BottMatrix::from_rows, py::arg("n"), py::arg("rows"))
        .def_static("from_upper_bits", &BottMatrix::from_upper_bits, py::arg("n"), py::arg("bits"))
        .def_property_readonly("n", &BottMatrix::size)
        .def("row", &BottMatrix::row, py::arg("i"))
        .def("arc", &BottMatrix::arc, py::arg("i"), py::arg("j"))
        .def("arc_count", &BottMatrix::arc_count)
        .def("strictly_upper_triangular", &BottMatrix::strictly_upper_triangular)
        .def("to_bin", &BottMatrix::to_bin)
        .def("to_hex", &BottMatrix::to_hex)
        .def("__eq__", [](const BottMatrix& a, const BottMatrix& b) { return a == b; })
        .def("__lt__", &BottMatrix::lex_less)
        .def("__hash__", &BottMatrix::hash)
        .def("__repr__", &matrix_repr);

    py::class_<bott::ClassRecord>(m, "ClassRecord")
        .def_property_readonly("canon",
                               [](const bott::ClassRecord& r) { return r.canonical.to_hex(); })
        .def_readonly("members", &bott::ClassRecord::member_count)
        .def_readonly("orientable", &bott::ClassRecord::orientable)
        .def_readonly("symplectic", &bott::ClassRecord::symplectic);

    py::class_<bott::ClassificationSummary>(m, "ClassificationSummary")
        .def_readonly("n", &bott::ClassificationSummary::n)
        .def_readonly("records", &bott::ClassificationSummary::records)
        .def_property_readonly("D", &bott::ClassificationSummary::class_count)
        .def_property_readonly("O", &bott::ClassificationSummary::orientable_count)
        .def_property_readonly("S", &bott::ClassificationSummary::symplectic_count);

    m.def("is_bott", [](const std::string& bin_text) {
        auto [n, rows] = bott::parse_bin_raw(bin_text);
        return bott::is_bott(n, rows);
    }, py::arg("bin_text"), "Acyclicity check on raw '0'/'1' matrix text");

    m.def("relabel", [](const BottMatrix& a, const std::vector<int>& images) {
        return relabel(a, bott::Permutation(images));
    }, py::arg("matrix"), py::arg("images"));
    m.def("local_complement", &bott::local_complement, py::arg("matrix"), py::arg("k"));
    m.def("slide", &bott::slide, py::arg("matrix"), py::arg("l"), py::arg("m"));
    m.def("slide_allowed", &bott::slide_allowed, py::arg("matrix"), py::arg("l"), py::arg("m"));

    m.def("iso_canon", [](const BottMatrix& a) {
        auto form = bott::iso_canon(a);
        return py::make_tuple(form.matrix, form.witness.images());
    }, py::arg("matrix"), "Canonical labeling; returns (matrix, witness images)");
    m.def("bott_canon", [](const BottMatrix& a, std::uint64_t budget) {
        auto rep = bott::bott_canon(a, budget);
        return py::make_tuple(rep.canonical, rep.orbit_size);
    }, py::arg("matrix"), py::arg("orbit_budget") = bott::default_orbit_budget,
       "Class canonical form; returns (matrix, orbit_size)");
    m.def("bott_orbit", &bott::bott_orbit, py::arg("matrix"),
          py::arg("orbit_budget") = bott::default_orbit_budget);
    m.def("bott_equivalent", &bott::bott_equivalent, py::arg("a"), py::arg("b"),
          py::arg("orbit_budget") = bott::default_orbit_budget);

    m.def("classify_all", [](int n, int workers, bool long_run) {
        bott::ClassifyOptions options;
        options.workers = workers;
        options.long_run = long_run;
        return bott::classify_all(n, options);
    }, py::arg("n"), py::arg("workers") = 1, py::arg("long_run") = false);
    m.def("classify_stream", [](const std::vector<BottMatrix>& source) {
        return bott::classify_stream(source);
    }, py::arg("source"));
    m.def("delta_family", &bott::delta_family, py::arg("n"));

    m.def("fingerprint_json", [](const BottMatrix& a) {
        return bott::fingerprint_json(bott::fingerprint(a)).dump();
    }, py::arg("matrix"));
    m.def("betti", [](const BottMatrix& a) { return bott::betti(a); }, py::arg("matrix"));
    m.def("rank", &bott::rank, py::arg("matrix"));
    m.def("orientable", &bott::orientable, py::arg("matrix"));
    m.def("symplectic", &bott::symplectic, py::arg("matrix"));

    m.def("decompose_json", [](const BottMatrix& a) {
        return bott::decomposition_json(bott::decompose(a)).dump();
    }, py::arg("matrix"));
    m.def("is_indecomposable", [](const BottMatrix& a) { return bott::is_indecomposable(a); },
          py::arg("matrix"));
    m.def("connected_components", &bott::connected_components, py::arg("matrix"));
    m.def("roots", &bott::roots, py::arg("matrix"));

    m.def("rings_isomorphic", [](const BottMatrix& a, const BottMatrix& b) {
        return bott::rings_isomorphic(a, b);
    }, py::arg("a"), py::arg("b"));
    m.def("eigen_elements", [](const BottMatrix& a) {
        bott::CohomRing ring(bott::iso_canon(a).matrix);
        py::list out;
        for (const auto& e : bott::eigen_elements(ring)) {
            py::list basis;
            for (auto v : e.eigenspace_basis) basis.append(bott::linear_to_string(v));
            out.append(py::make_tuple(bott::linear_to_string(e.alpha), basis, e.reduced_dim));
        }
        return out;
    }, py::arg("matrix"), "Eigen-elements of the canonicalized ring as (alpha, basis, reduced_dim)");

    m.def("parse_digraph6", [](const std::string& line) { return bott::parse_digraph6(line); },
          py::arg("line"));
    m.def("encode_digraph6", &bott::encode_digraph6, py::arg("matrix"));

    m.attr("DEFAULT_ORBIT_BUDGET") = bott::default_orbit_budget;
}
