#include "dglift/lift.hpp"

#include <algorithm>
#include <sstream>

namespace dglift {

std::string VanishingReport::str() const
{
    std::ostringstream os;
    for (const auto& e : entries)
        os << "H^" << e.degree << "(hom(F(" << e.e << "), G(" << e.ep << "))) has dimension " << e.dim << "\n";
    os << "minimal degree m = " << min_degree << ", truncation bound d_max = " << d_max << "\n";
    return os.str();
}

VanishingReport check_negative_vanishing(const AInfFunctor& from, const AInfFunctor& to)
{
    const DgCategory& src = *from.source;
    const DgCategory& tgt = *from.target;
    VanishingReport report;
    int m = 0;

    for (const auto& e : src.objects()) {
        for (const auto& ep : src.objects()) {
            const Complex& fg = tgt.hom(from.on_object(e), to.on_object(ep));
            const Complex& ff = tgt.hom(from.on_object(e), from.on_object(ep));
            const Complex& gg = tgt.hom(to.on_object(e), to.on_object(ep));
            for (const Complex* c : {&fg, &ff, &gg})
                if (c->space().total_dim() > 0)
                    m = std::min(m, c->space().min_degree());
            for (int j = fg.space().total_dim() > 0 ? fg.space().min_degree() : 0; j < 0; ++j) {
                const size_t dim = CohomologyBasis(fg, j).dim();
                if (dim > 0)
                    report.entries.push_back({e, ep, j, dim});
            }
        }
    }
    report.min_degree = m;
    report.d_max = std::max(2, 1 - m);
    return report;
}

LiftProblem::LiftProblem(const DgCategory& linear_source, const DgCategory& target, const AInfFunctor& from,
                         const AInfFunctor& to, std::map<std::string, Vec> classes)
    : source_(&linear_source), target_(&target), from_(&from), to_(&to), classes_(std::move(classes))
{
    if (!linear_source.linear())
        throw ShapeError("lift source must be a linear category concentrated in degree 0");
    if (from.source != source_ || to.source != source_ || from.target != target_ || to.target != target_)
        throw SourceTargetMismatch("functors do not run between the given categories");

    const ValidationReport source_report = linear_source.validate();
    if (!source_report.ok())
        throw ValidationFailure("source category invalid:\n" + source_report.str());
    const ValidationReport target_report = target.validate();
    if (!target_report.ok())
        throw ValidationFailure("target category invalid:\n" + target_report.str());

    const int check_depth = check_negative_vanishing(from, to).d_max + 1;
    const FunctorReport f_report = check_ainf_functor(from, check_depth);
    if (!f_report.ok())
        throw ValidationFailure("functor " + from.name + " invalid:\n" + f_report.str());
    const FunctorReport g_report = check_ainf_functor(to, check_depth);
    if (!g_report.ok())
        throw ValidationFailure("functor " + to.name + " invalid:\n" + g_report.str());

    source_h0_ = std::make_shared<H0Category>(linear_source);
    target_h0_ = std::make_shared<H0Category>(target);

    for (const auto& [e, coords] : classes_)
        if (!linear_source.has_object(e))
            throw ShapeError("class given at unknown object '" + e + "'");

    for (const auto& e : linear_source.objects()) {
        auto it = classes_.find(e);
        const size_t dim = target_h0_->dim(from.on_object(e), to.on_object(e));
        if (it == classes_.end()) {
            if (dim != 0)
                throw ShapeError("no class given at object '" + e + "'");
            classes_[e] = Vec{};
            continue;
        }
        if (it->second.size() != dim)
            throw ShapeError("class at '" + e + "' has " + std::to_string(it->second.size())
                             + " coordinates, expected " + std::to_string(dim));
    }

    /* Naturality in H^0 on every basis arrow. */
    for (const auto& [s, t] : linear_source.hom_pairs()) {
        for (const auto& label : linear_source.basis_labels(s, t)) {
            if (linear_source.is_unit_label(label))
                continue;
            const Mor f = linear_source.basis_mor(label);
            const Vec gf = target_h0_->class_of(to.component_multi({f}));
            const Vec ff = target_h0_->class_of(from.component_multi({f}));
            const Vec lhs = target_h0_->compose_classes(from.on_object(s), to.on_object(s), to.on_object(t), gf,
                                                        classes_.at(s));
            const Vec rhs = target_h0_->compose_classes(from.on_object(s), from.on_object(t), to.on_object(t),
                                                        classes_.at(t), ff);
            if (lhs != rhs)
                throw NaturalityFails("the given family is not natural at basis arrow '" + label + "'");
        }
    }
}

namespace {

std::string tuple_str(const Tuple& tuple)
{
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i)
        s += (i ? "," : "") + tuple[i];
    return s + ")";
}

}  // namespace

MorArrow obstruction_cocycle(const PackedFunctor& phi, const Tuple& tuple, bool check_partial)
{
    const DgCategory& src = *phi.from->source;
    const DgCategory& tgt = *phi.from->target;
    const int d = static_cast<int>(tuple.size());
    if (d < 2)
        throw ShapeError("obstruction is defined for stages d >= 2");

    if (check_partial) {
        for (int k = 1; k <= d - 1; ++k)
            for (const auto& t : composable_tuples(src, k, true))
                if (!packed_equation_residual(phi, t).is_zero())
                    throw PartialDataInvalid("partial data violates its equation at " + tuple_str(t));
    }

    const MorObject a = phi.on_object(tuple_source(src, tuple));
    const MorObject b = phi.on_object(tuple_target(src, tuple));
    int degree_sum = 0;
    for (const auto& label : tuple)
        degree_sum += src.resolve(label).degree;
    MorArrow obstruction = zero_mor_arrow(tgt, a, b, degree_sum + 2 - d);

    /* First family: phi^{d-1} applied after composing two adjacent
     * arguments in the source. */
    for (int n = 0; n <= d - 2; ++n) {
        const size_t pos_lo = static_cast<size_t>(d - 1 - n);  // f_{n+1}
        const size_t pos_hi = static_cast<size_t>(d - 2 - n);  // f_{n+2}
        const Mor inner = ainf_mu2(src, src.basis_mor(tuple[pos_hi]), src.basis_mor(tuple[pos_lo]));
        const auto& names = src.hom(inner.src, inner.tgt).space().labels(inner.degree());
        MorArrow sum = zero_mor_arrow(tgt, a, b, obstruction.degree);
        for (size_t i = 0; i < inner.el.coords.size(); ++i) {
            if (inner.el.coords[i].is_zero())
                continue;
            Tuple merged;
            merged.reserve(tuple.size() - 1);
            for (size_t k = 0; k < tuple.size(); ++k) {
                if (k == pos_lo)
                    continue;
                merged.push_back(k == pos_hi ? names[i] : tuple[k]);
            }
            sum = add(sum, scale(inner.el.coords[i], phi.component(tgt, merged)));
        }
        obstruction = add(obstruction,
                          scale(minus_one_pow(src.field(), tuple_maltese(src, tuple, static_cast<size_t>(n))), sum));
    }

    /* Second family: - mu^2 of the splittings. */
    for (int j = 1; j <= d - 1; ++j) {
        const Tuple front(tuple.begin(), tuple.begin() + j);
        const Tuple back(tuple.begin() + j, tuple.end());
        obstruction = add(obstruction, scale(-FieldElement::one(src.field()),
                                             dgmor_mu2(tgt, phi.component(tgt, front), phi.component(tgt, back))));
    }

    if (!dgmor_mu1(tgt, obstruction).is_zero())
        throw NotCocycle("obstruction at " + tuple_str(tuple) + " is not mu^1-closed");
    if (!equal(obstruction.u, ainf_mu1(tgt, phi.from->component(tuple))))
        throw InternalError("obstruction u slot differs from mu^1 of the F component at " + tuple_str(tuple));
    if (!equal(obstruction.v, ainf_mu1(tgt, phi.to->component(tuple))))
        throw InternalError("obstruction v slot differs from mu^1 of the G component at " + tuple_str(tuple));

    return obstruction;
}

LiftCertificate lift_natural_transformation(const LiftProblem& problem)
{
    const DgCategory& src = problem.source();
    const DgCategory& tgt = problem.target();
    const AInfFunctor& from = problem.from();
    const AInfFunctor& to = problem.to();

    const VanishingReport vanishing = check_negative_vanishing(from, to);
    if (!vanishing.ok())
        throw VanishingHypothesisFails(vanishing.entries.front().degree,
                                       static_cast<int>(vanishing.entries.front().dim));

    LiftCertificate cert;
    cert.h = zero_prenat(from, to, 0);
    cert.d_max = vanishing.d_max;
    cert.transcript.push_back("truncation: m = " + std::to_string(vanishing.min_degree)
                              + ", d_max = " + std::to_string(vanishing.d_max));

    PackedFunctor phi;
    phi.from = &from;
    phi.to = &to;

    /* Stage 0: canonical cocycle representatives of the given classes. */
    for (const auto& e : src.objects()) {
        const Mor rep = problem.target_h0().representative(from.on_object(e), to.on_object(e),
                                                           problem.classes().at(e));
        cert.h.set_at(e, rep);
        phi.objects.emplace(e, MorObject{rep.src, rep.tgt, rep});
        cert.transcript.push_back("stage 0 at " + e + ": representative in hom(" + rep.src + ", " + rep.tgt
                                  + "), class dim " + std::to_string(problem.classes().at(e).size()));
    }

    /* Stage 1: d h^1(f) = G^1(f)∘h^0 - h^0∘F^1(f), solvable by
     * naturality. */
    for (const auto& tuple : composable_tuples(src, 1, true)) {
        const std::string& label = tuple[0];
        const BasisRef& ref = src.resolve(label);
        const Mor f = src.basis_mor(label);
        const Mor defect = sub(tgt.compose(to.component_multi({f}), cert.h.at(ref.src)),
                               tgt.compose(cert.h.at(ref.tgt), from.component_multi({f})));
        Homog solution;
        try {
            solution = solve_coboundary(tgt.hom(defect.src, defect.tgt), defect.el);
        }
        catch (const NotCoboundary&) {
            throw InternalError("stage 1 unsolvable at '" + label + "' despite naturality");
        }
        const Mor h1{defect.src, defect.tgt, solution};
        if (!h1.is_zero())
            cert.h.set_component(tuple, h1);
        const Complex& hom = tgt.hom(defect.src, defect.tgt);
        cert.transcript.push_back("stage 1 at " + label + ": solved d h^1 = defect in hom(" + defect.src + ", "
                                  + defect.tgt + "), system " + std::to_string(hom.space().dim(0)) + "x"
                                  + std::to_string(hom.space().dim(-1)));
        const MorArrow arrow = make_mor_arrow(tgt, phi.on_object(ref.src), phi.on_object(ref.tgt), 0,
                                              from.component(tuple), to.component(tuple), h1);
        if (!arrow.is_zero())
            phi.components[1][tuple] = arrow;
    }
    phi.max_degree = 1;

    /* Stages 2..d_max: solve the obstruction through the directed
     * homotopy lemma. */
    for (int d = 2; d <= cert.d_max; ++d) {
        for (const auto& tuple : composable_tuples(src, d, true)) {
            const MorArrow obstruction = obstruction_cocycle(phi, tuple, false);
            const Mor u_prim = from.component(tuple);
            const Mor v_prim = to.component(tuple);
            Mor h_d = tgt.zero_mor(obstruction.src.a, obstruction.tgt.b, obstruction.degree - 2);
            if (obstruction.is_zero() && u_prim.is_zero() && v_prim.is_zero()) {
                cert.transcript.push_back("stage " + std::to_string(d) + " at " + tuple_str(tuple)
                                          + ": obstruction verified closed and vanishes");
            }
            else {
                h_d = solve_directed_homotopy(tgt, obstruction, u_prim, v_prim);
                const Complex& hom = tgt.hom(obstruction.src.a, obstruction.tgt.b);
                cert.transcript.push_back("stage " + std::to_string(d) + " at " + tuple_str(tuple)
                                          + ": obstruction verified closed; solved in degree "
                                          + std::to_string(h_d.degree()) + ", system "
                                          + std::to_string(hom.space().dim(h_d.degree() + 1)) + "x"
                                          + std::to_string(hom.space().dim(h_d.degree())));
            }
            if (!h_d.is_zero())
                cert.h.set_component(tuple, h_d);
            const MorArrow arrow = make_mor_arrow(tgt, obstruction.src, obstruction.tgt, obstruction.degree - 1,
                                                  u_prim, v_prim, h_d);
            if (!arrow.is_zero())
                phi.components[d][tuple] = arrow;
        }
        phi.max_degree = d;
    }

    /* Beyond d_max every candidate space is zero by the truncation
     * bound; record the dimension check. */
    for (int d = cert.d_max + 1; d <= cert.d_max + 2; ++d) {
        for (const auto& e : src.objects()) {
            for (const auto& ep : src.objects()) {
                const Complex& c = tgt.hom(from.on_object(e), to.on_object(ep));
                if (c.space().dim(-d) != 0)
                    throw InternalError("candidate space in degree " + std::to_string(-d)
                                        + " is nonzero beyond d_max");
            }
        }
    }
    cert.transcript.push_back("stages beyond d_max: all candidate spaces have dimension 0");

    const std::vector<std::string> failures = verify_lift(problem, cert.h, cert.d_max);
    if (!failures.empty())
        throw InternalError("constructed lift failed re-verification: " + failures.front());
    cert.transcript.push_back("re-verified: closed, strictly unital, induces the given classes");

    return cert;
}

void certify_isomorphism(const LiftProblem& problem, LiftCertificate& cert)
{
    cert.iso_checked = true;
    cert.iso_flag = true;
    cert.inverse_classes.clear();
    for (const auto& e : problem.source().objects()) {
        const std::string fx = problem.from().on_object(e);
        const std::string gx = problem.to().on_object(e);
        const Vec cls = problem.target_h0().class_of(cert.h.at(e));
        const auto inverse = h0_invertible(problem.target_h0(), fx, gx, cls);
        if (inverse)
            cert.inverse_classes[e] = *inverse;
        else
            cert.iso_flag = false;
    }
}

std::vector<std::string> verify_lift(const LiftProblem& problem, const PreNatTrans& h, int d_max)
{
    std::vector<std::string> failures;
    try {
        check_prenat(h);
    }
    catch (const Error& err) {
        failures.push_back(std::string("malformed transformation: ") + err.what());
        return failures;
    }
    if (h.degree != 0)
        failures.push_back("transformation degree is not 0");
    if (!is_closed(h, d_max))
        failures.push_back("transformation is not closed");
    if (!failures.empty())
        return failures;

    std::map<std::string, Vec> induced;
    try {
        induced = h0_of_nattrans(h, d_max, problem.source_h0(), problem.target_h0());
    }
    catch (const Error& err) {
        failures.push_back(std::string("induced classes undefined: ") + err.what());
        return failures;
    }
    for (const auto& e : problem.source().objects()) {
        if (induced.at(e) != problem.classes().at(e))
            failures.push_back("induced class at '" + e + "' differs from the requested one");
    }
    return failures;
}

}  // namespace dglift
