#include "folia/io.hpp"
#include "folia/modular.hpp"
#include "folia/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace folia;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<Rational>> points(const PresentationFile& f, const std::vector<std::string>& texts) {
    std::vector<std::vector<Rational>> out;
    for (const auto& t : texts) out.push_back(parse_point(t, f.algebroid.vars()->size()));
    return out;
}

std::vector<std::string> labels(const PresentationFile& f) {
    std::vector<std::string> out;
    for (const auto& r : f.algebroid.all_basis_refs()) out.push_back(f.algebroid.label(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_folia, m) {
    m.doc() = "Modular classes of polynomial Lie n-algebroids";

    py::register_exception<PresentationError>(m, "PresentationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MissingBracket>(m, "MissingBracket");

    py::class_<PresentationFile>(m, "Presentation")
        .def_static("parse", &parse_presentation, py::arg("text"), py::arg("name") = "")
        .def_static("builtin", &builtin_presentation, py::arg("name"), py::arg("n") = py::none(),
                    py::arg("field") = py::none())
        .def_readonly("name", &PresentationFile::name)
        .def_property_readonly("variables", [](const PresentationFile& f) { return *f.algebroid.vars(); })
        .def_property_readonly("ranks",
                               [](const PresentationFile& f) {
                                   std::vector<int> r;
                                   for (int i = 0; i < f.algebroid.depth(); ++i) r.push_back(f.algebroid.rank(i));
                                   return r;
                               })
        .def_property_readonly("labels", &labels)
        .def("text", &write_presentation)
        .def(
            "theta",
            [](const PresentationFile& f) {
                ModularOneForm t = modular_one_form(f.algebroid);
                py::dict d;
                for (int i = 0; i < f.algebroid.rank(0); ++i) d[py::str(f.algebroid.label({0, i}))] = t.values[i].to_string();
                return d;
            },
            "Modular one-form on the degree-0 basis, as polynomial strings.")
        .def(
            "verify",
            [](const PresentationFile& f, std::optional<int> exactness_degree) {
                return to_python(verify_json(f, VerifyOptions{exactness_degree}));
            },
            py::arg("exactness_degree") = py::none())
        .def(
            "modular",
            [](const PresentationFile& f, std::optional<int> degree_bound, std::optional<std::string> witness,
               const std::vector<std::string>& obstruction_points) {
                return to_python(modular_json(f, report_options(f, degree_bound, witness, points(f, obstruction_points))));
            },
            py::arg("degree_bound") = py::none(), py::arg("witness") = py::none(),
            py::arg("obstruction_points") = std::vector<std::string>{});

    py::class_<RegularPresentation>(m, "RegularPresentation")
        .def_static("parse", &parse_regular, py::arg("text"), py::arg("name") = "")
        .def_static("builtin", &builtin_regular, py::arg("name"), py::arg("n") = py::none())
        .def_readonly("name", &RegularPresentation::name)
        .def("text", &write_regular)
        .def(
            "bott",
            [](const RegularPresentation& p, std::optional<std::string> witness) {
                std::optional<RatLogExpr> g;
                if (witness) g = parse_ratlog(*witness, p.vars);
                return to_python(bott_json(p, g));
            },
            py::arg("witness") = py::none());

    m.def("builtin_names", &builtin_names);
    m.def("builtin_regular_names", &builtin_regular_names);
}
