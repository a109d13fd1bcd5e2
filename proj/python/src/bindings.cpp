#include "pbwkit/error.hpp"
#include "pbwkit/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pbwkit;

namespace {

std::vector<Element> parse_all(const std::vector<std::string>& texts, const std::vector<std::string>& gens, const Field& f) {
    std::vector<Element> out;
    for (const auto& t : texts) out.push_back(parse_element(t, gens, f));
    return out;
}

std::vector<std::string> print_all(const std::vector<Element>& xs, const std::vector<std::string>& gens) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(element_to_string(x, gens));
    return out;
}

// Homogeneous relations; the ring is A = T / <relations>.
PresentedRing ring(const std::vector<std::string>& gens, const std::vector<std::string>& relations, const std::string& field) {
    Field f = parse_field(field);
    return PresentedRing(gens.size(), f, parse_all(relations, gens, f));
}

} // namespace

PYBIND11_MODULE(_pbwkit, m) {
    m.doc() = "Exact PBW checks for filtered deformations of graded algebras";
    py::register_exception<Error>(m, "PbwkitError", PyExc_ValueError);

    py::class_<Presentation>(m, "Presentation")
        .def_property_readonly("field", [](const Presentation& p) { return p.field.name(); })
        .def_readonly("generators", &Presentation::generators)
        .def_property_readonly("ambient_relations", [](const Presentation& p) { return print_all(p.ambient_relations, p.generators); })
        .def_property_readonly("deformation", [](const Presentation& p) { return print_all(p.deformation, p.generators); })
        .def_readonly("max_degree", &Presentation::max_degree)
        .def_readonly("tor_bound", &Presentation::tor_bound)
        .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; })
        .def("__str__", &print_presentation);

    m.def("parse_presentation", [](const std::string& text) { return parse_presentation(text); });
    m.def("load_presentation", &load_presentation, py::arg("path"));
    m.def("change_field", [](const Presentation& p, const std::string& field) { return change_field(p, parse_field(field)); });

    m.def(
        "run_json",
        [](const std::string& command, const Presentation& p, int upto) {
            PbwOptions opts;
            opts.upto = upto;
            nlohmann::json r;
            {
                py::gil_scoped_release release;
                r = run_command(parse_command(command), p, opts);
            }
            return std::make_pair(r.dump(), report_exit_code(r));
        },
        py::arg("command"), py::arg("presentation"), py::arg("upto") = -1);
    m.def("render_text", [](const std::string& report) { return render_text(nlohmann::json::parse(report)); });

    m.def(
        "hilbert",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& relations, int upto, const std::string& field) {
            return ring(gens, relations, field).hilbert_upto(upto);
        },
        py::arg("generators"), py::arg("relations"), py::arg("upto"), py::arg("field") = "Q");
    m.def(
        "normal_form",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& relations, const std::string& element,
           const std::string& field) {
            PresentedRing a = ring(gens, relations, field);
            return element_to_string(a.normal_element(parse_element(element, gens, a.field())), gens);
        },
        py::arg("generators"), py::arg("relations"), py::arg("element"), py::arg("field") = "Q");
    m.def(
        "tor3",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& relations, int bound, const std::string& field) {
            PresentedRing a = ring(gens, relations, field);
            return tor3_resolution(a, bound).tor3;
        },
        py::arg("generators"), py::arg("relations"), py::arg("bound"), py::arg("field") = "Q");
    m.def(
        "tor_bar",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& relations, int n, int bound, const std::string& field) {
            PresentedRing a = ring(gens, relations, field);
            return tor_bar(a, n, bound);
        },
        py::arg("generators"), py::arg("relations"), py::arg("n"), py::arg("bound"), py::arg("field") = "Q");
    m.def(
        "complexity",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& relations, const std::string& field) {
            PresentedRing a = ring(gens, relations, field);
            Complexity c = complexity(a);
            return py::dict(py::arg("c") = c.c, py::arg("certified") = c.certified,
                            py::arg("certificate") = certificate_name(c.certificate), py::arg("tor3") = c.table.tor3);
        },
        py::arg("generators"), py::arg("relations"), py::arg("field") = "Q");
    m.def(
        "jacobi",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& deformation, int upto, const std::string& field) {
            Field f = parse_field(field);
            JacobiLadder ladder(gens.size(), parse_all(deformation, gens, f), upto);
            py::list out;
            for (const auto& s : ladder.steps())
                out.append(py::make_tuple(s.k, s.holds, s.witness ? py::cast(element_to_string(*s.witness, gens)) : py::none()));
            return out;
        },
        py::arg("generators"), py::arg("deformation"), py::arg("upto"), py::arg("field") = "Q");
    m.def(
        "annihilator_dims",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& deformation, int upto, const std::string& field) {
            Field f = parse_field(field);
            CentralExtension d = CentralExtension::of(gens.size(), parse_all(deformation, gens, f));
            std::vector<std::size_t> out;
            for (int n = 0; n <= upto; ++n) out.push_back(d.annihilator_dim(n));
            return out;
        },
        py::arg("generators"), py::arg("deformation"), py::arg("upto"), py::arg("field") = "Q");
}
