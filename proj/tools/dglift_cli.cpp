#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dglift/certificate.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw dglift::Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::optional<dglift::Field> parse_field_flag(const std::string& flag)
{
    if (flag.empty())
        return std::nullopt;
    return dglift::Field::parse(flag);
}

int run_validate(const std::string& path, const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(path), field);
    const auto findings = dglift::validate_problem(problem);
    if (findings.empty()) {
        std::cout << "VALID\n";
        return 0;
    }
    for (const auto& f : findings)
        std::cout << f << "\n";
    return 1;
}

int run_cohomology(const std::string& path, const std::string& cat_name, const std::string& src,
                   const std::string& tgt, const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(path), field);
    const dglift::DgCategory& cat = problem.category(cat_name);
    const dglift::Complex& hom = cat.hom(src, tgt);
    if (hom.space().total_dim() == 0) {
        std::cout << "hom(" << src << ", " << tgt << ") = 0\n";
        return 0;
    }
    for (int j = hom.space().min_degree(); j <= hom.space().max_degree(); ++j) {
        const dglift::CohomologyBasis basis(hom, j);
        std::cout << "H^" << j << " dim " << basis.dim() << "\n";
    }
    return 0;
}

int run_h0(const std::string& path, const std::string& cat_name, const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(path), field);
    const dglift::DgCategory& cat = problem.category(cat_name);
    const auto report = cat.validate();
    if (!report.ok()) {
        std::cout << report.str();
        return 1;
    }
    const dglift::H0Category h0(cat);
    std::cout << "objects:";
    for (const auto& obj : cat.objects())
        std::cout << " " << obj;
    std::cout << "\n";
    for (const auto& s : cat.objects())
        for (const auto& t : cat.objects())
            std::cout << "hom(" << s << ", " << t << ") dim " << h0.dim(s, t) << "\n";
    return 0;
}

int run_check_functor(const std::string& path, const std::string& name, int d_max,
                      const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(path), field);
    const dglift::AInfFunctor& functor = problem.functor(name);
    const auto report = dglift::check_ainf_functor(functor, d_max);
    if (report.ok()) {
        std::cout << "OK to degree " << d_max << "\n";
        return 0;
    }
    std::cout << report.str();
    return 1;
}

int run_lift(const std::string& path, const std::string& out, bool verbose,
             const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(path), field);

    /* The vanishing hypothesis is reported before the transformation is
     * examined at all. */
    if (!problem.transform)
        throw dglift::ShapeError("file declares no transformation block");
    const dglift::AInfFunctor& from = problem.functor(problem.transform->from);
    const dglift::AInfFunctor& to = problem.functor(problem.transform->to);
    const auto vanishing = dglift::check_negative_vanishing(from, to);
    if (!vanishing.ok()) {
        std::cout << "vanishing hypothesis fails:\n" << vanishing.str();
        return 1;
    }

    const dglift::LiftProblem lift = problem.lift_problem();
    dglift::LiftCertificate cert = dglift::lift_natural_transformation(lift);
    dglift::certify_isomorphism(lift, cert);

    const std::string text = dglift::serialize_certificate(problem, cert);
    if (out.empty()) {
        std::cout << text;
    }
    else {
        std::ofstream os(out, std::ios::binary);
        if (!os)
            throw dglift::Error("cannot write file: " + out);
        os << text;
        std::cout << "certificate written to " << out << "\n";
    }
    if (verbose)
        for (const auto& line : cert.transcript)
            std::cerr << line << "\n";
    return 0;
}

int run_certify(const std::string& cert_path, const std::string& problem_path, bool verbose,
                const std::optional<dglift::Field>& field)
{
    const dglift::Problem problem = dglift::parse_problem(read_file(problem_path), field);
    const dglift::CertificateData data = dglift::parse_certificate(read_file(cert_path));
    const auto findings = dglift::certify_against_problem(problem, data);
    if (findings.empty()) {
        std::cout << "VERIFIED\n";
        if (verbose)
            for (const auto& line : data.transcript)
                std::cerr << line << "\n";
        return 0;
    }
    for (const auto& f : findings)
        std::cout << f << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact lifting engine for transformations of functors between dg-categories"};
    app.require_subcommand(1);

    std::string field_flag;
    bool verbose = false;
    app.add_option("--field", field_flag, "override the declared ground field (q or f<p>)");
    app.add_flag("--verbose", verbose, "dump the construction transcript to stderr");

    std::string path, cat_name, src, tgt, functor_name, out, cert_path;
    int d_max = 3;

    auto* validate = app.add_subcommand("validate", "check every axiom a file declares");
    validate->add_option("file", path)->required();

    auto* cohomology = app.add_subcommand("cohomology", "per-degree cohomology of one hom complex");
    cohomology->add_option("file", path)->required();
    cohomology->add_option("category", cat_name)->required();
    cohomology->add_option("src", src)->required();
    cohomology->add_option("tgt", tgt)->required();

    auto* h0 = app.add_subcommand("h0", "homotopy category of a presentation");
    h0->add_option("file", path)->required();
    h0->add_option("category", cat_name)->required();

    auto* check = app.add_subcommand("check-functor", "verify the functor equations");
    check->add_option("file", path)->required();
    check->add_option("functor", functor_name)->required();
    check->add_option("--dmax", d_max, "largest tuple length to check");

    auto* lift = app.add_subcommand("lift", "construct and certify a lift of the declared transformation");
    lift->add_option("file", path)->required();
    lift->add_option("--out", out, "write the certificate to this file instead of stdout");

    auto* certify = app.add_subcommand("certify", "re-verify a certificate against a problem file");
    certify->add_option("certificate", cert_path)->required();
    certify->add_option("file", path)->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto field = parse_field_flag(field_flag);
        if (validate->parsed())
            return run_validate(path, field);
        if (cohomology->parsed())
            return run_cohomology(path, cat_name, src, tgt, field);
        if (h0->parsed())
            return run_h0(path, cat_name, field);
        if (check->parsed())
            return run_check_functor(path, functor_name, d_max, field);
        if (lift->parsed())
            return run_lift(path, out, verbose, field);
        if (certify->parsed())
            return run_certify(cert_path, path, verbose, field);
    }
    catch (const dglift::ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }
    catch (const dglift::InternalError& err) {
        std::cerr << "internal invariant violation: " << err.what() << "\n";
        return 3;
    }
    catch (const dglift::Error& err) {
        std::cerr << err.what() << "\n";
        return 1;
    }
    return 0;
}
