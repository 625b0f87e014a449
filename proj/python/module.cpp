#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dglift/certificate.hpp"

namespace py = pybind11;
using namespace dglift;

namespace {

Problem parse(const std::string& text, const std::string& field)
{
    std::optional<Field> override;
    if (!field.empty())
        override = Field::parse(field);
    return parse_problem(text, override);
}

std::vector<std::string> validate_text(const std::string& text, const std::string& field)
{
    const Problem problem = parse(text, field);
    return validate_problem(problem);
}

std::map<int, size_t> cohomology_dims(const std::string& text, const std::string& category, const std::string& src,
                                      const std::string& tgt, const std::string& field)
{
    const Problem problem = parse(text, field);
    const Complex& hom = problem.category(category).hom(src, tgt);
    std::map<int, size_t> dims;
    if (hom.space().total_dim() == 0)
        return dims;
    for (int j = hom.space().min_degree(); j <= hom.space().max_degree(); ++j)
        dims[j] = CohomologyBasis(hom, j).dim();
    return dims;
}

std::string lift_text(const std::string& text, const std::string& field)
{
    const Problem problem = parse(text, field);
    if (!problem.transform)
        throw ShapeError("file declares no transformation block");
    const auto vanishing = check_negative_vanishing(problem.functor(problem.transform->from),
                                                    problem.functor(problem.transform->to));
    if (!vanishing.ok())
        throw VanishingHypothesisFails(vanishing.entries.front().degree,
                                       static_cast<int>(vanishing.entries.front().dim));
    const LiftProblem lift = problem.lift_problem();
    LiftCertificate cert = lift_natural_transformation(lift);
    certify_isomorphism(lift, cert);
    return serialize_certificate(problem, cert);
}

std::vector<std::string> certify_text(const std::string& certificate, const std::string& problem_text,
                                      const std::string& field)
{
    const Problem problem = parse(problem_text, field);
    const CertificateData data = parse_certificate(certificate);
    return certify_against_problem(problem, data);
}

std::vector<std::string> vanishing_report(const std::string& text, const std::string& field)
{
    const Problem problem = parse(text, field);
    if (!problem.transform)
        throw ShapeError("file declares no transformation block");
    const auto report = check_negative_vanishing(problem.functor(problem.transform->from),
                                                 problem.functor(problem.transform->to));
    std::vector<std::string> lines;
    for (const auto& entry : report.entries)
        lines.push_back("H^" + std::to_string(entry.degree) + "(hom(F(" + entry.e + "), G(" + entry.ep
                        + "))) has dimension " + std::to_string(entry.dim));
    return lines;
}

}  // namespace

PYBIND11_MODULE(_dglift, m)
{
    m.doc() = "exact lifting engine for transformations of functors between dg-categories";

    auto base = py::register_exception<Error>(m, "EngineError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<VanishingHypothesisFails>(m, "VanishingHypothesisError", base.ptr());
    py::register_exception<NaturalityFails>(m, "NaturalityError", base.ptr());

    m.def("validate", &validate_text, py::arg("text"), py::arg("field") = "",
          "Validate every axiom a problem file declares; returns findings (empty = valid).");
    m.def("cohomology", &cohomology_dims, py::arg("text"), py::arg("category"), py::arg("src"), py::arg("tgt"),
          py::arg("field") = "", "Per-degree cohomology dimensions of one hom complex.");
    m.def("lift", &lift_text, py::arg("text"), py::arg("field") = "",
          "Construct, certify, and serialize a lift of the declared transformation.");
    m.def("certify", &certify_text, py::arg("certificate"), py::arg("problem"), py::arg("field") = "",
          "Re-verify a certificate against a problem file; returns findings (empty = verified).");
    m.def("negative_vanishing", &vanishing_report, py::arg("text"), py::arg("field") = "",
          "Nonzero negative-degree cohomology between the functor images (empty = hypothesis holds).");
}
