#include "dglift/dgmor.hpp"

namespace dglift {

MorObject make_mor_object(const DgCategory& cat, const Mor& f)
{
    if (f.degree() != 0)
        throw DegreeMismatch("dgMor object requires a degree-0 morphism");
    if (!cat.differential(f).is_zero())
        throw NotCocycle("dgMor object requires a closed morphism");
    return MorObject{f.src, f.tgt, f};
}

bool equal(const MorObject& x, const MorObject& y)
{
    return x.a == y.a && x.b == y.b && equal(x.f, y.f);
}

MorArrow make_mor_arrow(const DgCategory& cat, MorObject src, MorObject tgt, int degree, Mor u, Mor v, Mor h)
{
    if (u.src != src.a || u.tgt != tgt.a || u.degree() != degree)
        throw ShapeError("u slot must lie in hom(" + src.a + ", " + tgt.a + ") in degree " + std::to_string(degree));
    if (v.src != src.b || v.tgt != tgt.b || v.degree() != degree)
        throw ShapeError("v slot must lie in hom(" + src.b + ", " + tgt.b + ") in degree " + std::to_string(degree));
    if (h.src != src.a || h.tgt != tgt.b || h.degree() != degree - 1)
        throw ShapeError("h slot must lie in hom(" + src.a + ", " + tgt.b + ") in degree "
                         + std::to_string(degree - 1));
    (void)cat;
    return MorArrow{std::move(src), std::move(tgt), degree, std::move(u), std::move(v), std::move(h)};
}

MorArrow zero_mor_arrow(const DgCategory& cat, MorObject src, MorObject tgt, int degree)
{
    Mor u = cat.zero_mor(src.a, tgt.a, degree);
    Mor v = cat.zero_mor(src.b, tgt.b, degree);
    Mor h = cat.zero_mor(src.a, tgt.b, degree - 1);
    return MorArrow{std::move(src), std::move(tgt), degree, std::move(u), std::move(v), std::move(h)};
}

MorArrow identity_mor_arrow(const DgCategory& cat, const MorObject& x)
{
    MorArrow one = zero_mor_arrow(cat, x, x, 0);
    one.u = cat.unit_mor(x.a);
    one.v = cat.unit_mor(x.b);
    return one;
}

MorArrow add(const MorArrow& x, const MorArrow& y)
{
    if (!equal(x.src, y.src) || !equal(x.tgt, y.tgt) || x.degree != y.degree)
        throw ShapeError("adding arrows of different shapes");
    MorArrow r = x;
    r.u = add(x.u, y.u);
    r.v = add(x.v, y.v);
    r.h = add(x.h, y.h);
    return r;
}

MorArrow scale(const FieldElement& c, const MorArrow& x)
{
    MorArrow r = x;
    r.u = scale(c, x.u);
    r.v = scale(c, x.v);
    r.h = scale(c, x.h);
    return r;
}

bool equal(const MorArrow& x, const MorArrow& y)
{
    return equal(x.src, y.src) && equal(x.tgt, y.tgt) && x.degree == y.degree && equal(x.u, y.u) && equal(x.v, y.v)
           && equal(x.h, y.h);
}

Complex dgmor_hom(const DgCategory& cat, const MorObject& src, const MorObject& tgt)
{
    const GradedSpace& uu = cat.hom(src.a, tgt.a).space();
    const GradedSpace& vv = cat.hom(src.b, tgt.b).space();
    const GradedSpace& hh = cat.hom(src.a, tgt.b).space();

    GradedSpace space(cat.field());
    std::vector<int> degrees;
    for (int deg : uu.support())
        degrees.push_back(deg);
    for (int deg : vv.support())
        degrees.push_back(deg);
    for (int deg : hh.support())
        degrees.push_back(deg + 1);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int n : degrees) {
        for (const auto& label : uu.labels(n))
            space.add_basis_label(n, "u:" + label);
        for (const auto& label : vv.labels(n))
            space.add_basis_label(n, "v:" + label);
        for (const auto& label : hh.labels(n - 1))
            space.add_basis_label(n, "h:" + label);
    }

    GradedMap d(space, space, 1);
    for (int n : space.support()) {
        Matrix block(cat.field(), space.dim(n + 1), space.dim(n));
        const auto& cols = space.labels(n);
        bool nonzero = false;
        auto put = [&](const Mor& value, char slot, size_t col) {
            const GradedSpace* part = slot == 'u' ? &uu : slot == 'v' ? &vv : &hh;
            const int part_degree = slot == 'h' ? n : n + 1;
            const auto& names = part->labels(part_degree);
            for (size_t i = 0; i < value.el.coords.size(); ++i) {
                if (value.el.coords[i].is_zero())
                    continue;
                const std::string full = std::string(1, slot) + ":" + names[i];
                block.at(space.index_of(n + 1, full), col) += value.el.coords[i];
                nonzero = true;
            }
        };
        for (size_t c = 0; c < cols.size(); ++c) {
            const char slot = cols[c][0];
            const std::string inner = cols[c].substr(2);
            if (slot == 'u') {
                const Mor e = cat.basis_mor(inner);
                put(cat.differential(e), 'u', c);
                put(scale(minus_one_pow(cat.field(), n), cat.compose(tgt.f, e)), 'h', c);
            }
            else if (slot == 'v') {
                const Mor e = cat.basis_mor(inner);
                put(cat.differential(e), 'v', c);
                put(scale(-minus_one_pow(cat.field(), n), cat.compose(e, src.f)), 'h', c);
            }
            else {
                put(cat.differential(cat.basis_mor(inner)), 'h', c);
            }
        }
        if (nonzero)
            d.set_block(n, std::move(block));
    }
    return Complex(space, std::move(d));
}

Homog arrow_to_element(const DgCategory& cat, const MorArrow& x)
{
    const Complex complex = dgmor_hom(cat, x.src, x.tgt);
    const GradedSpace& space = complex.space();
    Homog el = zero_homog(space, x.degree);
    auto fill = [&](const Mor& slot_value, char slot, int inner_degree) {
        const auto& names = cat.hom(slot_value.src, slot_value.tgt).space().labels(inner_degree);
        for (size_t i = 0; i < slot_value.el.coords.size(); ++i) {
            if (slot_value.el.coords[i].is_zero())
                continue;
            el.coords[space.index_of(x.degree, std::string(1, slot) + ":" + names[i])] += slot_value.el.coords[i];
        }
    };
    fill(x.u, 'u', x.degree);
    fill(x.v, 'v', x.degree);
    fill(x.h, 'h', x.degree - 1);
    return el;
}

MorArrow element_to_arrow(const DgCategory& cat, const MorObject& src, const MorObject& tgt, const Homog& el)
{
    const Complex complex = dgmor_hom(cat, src, tgt);
    const GradedSpace& space = complex.space();
    MorArrow x = zero_mor_arrow(cat, src, tgt, el.degree);
    const auto& names = space.labels(el.degree);
    for (size_t i = 0; i < el.coords.size(); ++i) {
        if (el.coords[i].is_zero())
            continue;
        const char slot = names[i][0];
        const Mor term = scale(el.coords[i], cat.basis_mor(names[i].substr(2)));
        if (slot == 'u')
            x.u = add(x.u, term);
        else if (slot == 'v')
            x.v = add(x.v, term);
        else
            x.h = add(x.h, term);
    }
    return x;
}

MorArrow dgmor_compose(const DgCategory& cat, const MorArrow& xp, const MorArrow& x)
{
    if (!equal(xp.src, x.tgt))
        throw NotComposable("dgMor composition: middle objects differ");
    const int n = x.degree;
    MorArrow r = zero_mor_arrow(cat, x.src, xp.tgt, x.degree + xp.degree);
    r.u = cat.compose(xp.u, x.u);
    r.v = cat.compose(xp.v, x.v);
    r.h = add(scale(minus_one_pow(cat.field(), n), cat.compose(xp.h, x.u)), cat.compose(xp.v, x.h));
    return r;
}

MorArrow dgmor_d(const DgCategory& cat, const MorArrow& x)
{
    const int n = x.degree;
    MorArrow r = zero_mor_arrow(cat, x.src, x.tgt, n + 1);
    r.u = cat.differential(x.u);
    r.v = cat.differential(x.v);
    r.h = add(cat.differential(x.h),
              scale(minus_one_pow(cat.field(), n), sub(cat.compose(x.tgt.f, x.u), cat.compose(x.v, x.src.f))));
    return r;
}

MorArrow dgmor_mu1(const DgCategory& cat, const MorArrow& x)
{
    /* (mu^1 u, mu^1 v, -mu^1 h + (-1)^{|u|} mu^2(f', u) - mu^2(v, f)). */
    MorArrow r = zero_mor_arrow(cat, x.src, x.tgt, x.degree + 1);
    r.u = ainf_mu1(cat, x.u);
    r.v = ainf_mu1(cat, x.v);
    r.h = add(negate(ainf_mu1(cat, x.h)),
              sub(scale(minus_one_pow(cat.field(), x.degree), ainf_mu2(cat, x.tgt.f, x.u)),
                  ainf_mu2(cat, x.v, x.src.f)));
    return r;
}

MorArrow dgmor_mu2(const DgCategory& cat, const MorArrow& xp, const MorArrow& x)
{
    if (!equal(xp.src, x.tgt))
        throw NotComposable("dgMor mu2: middle objects differ");
    MorArrow r = zero_mor_arrow(cat, x.src, xp.tgt, x.degree + xp.degree);
    r.u = ainf_mu2(cat, xp.u, x.u);
    r.v = ainf_mu2(cat, xp.v, x.v);
    r.h = sub(scale(minus_one_pow(cat.field(), x.degree), ainf_mu2(cat, xp.h, x.u)), ainf_mu2(cat, xp.v, x.h));
    return r;
}

Mor source_projection(const MorArrow& x)
{
    return x.u;
}

Mor target_projection(const MorArrow& x)
{
    return x.v;
}

MorObject PackedFunctor::on_object(const std::string& x) const
{
    auto it = objects.find(x);
    if (it == objects.end())
        throw ShapeError("packed functor has no image for object '" + x + "'");
    return it->second;
}

MorArrow PackedFunctor::component(const DgCategory& cat, const Tuple& tuple) const
{
    const int d = static_cast<int>(tuple.size());
    auto dit = components.find(d);
    if (dit != components.end()) {
        auto it = dit->second.find(tuple);
        if (it != dit->second.end())
            return it->second;
    }
    const DgCategory& src = *from->source;
    const MorObject a = on_object(tuple_source(src, tuple));
    const MorObject b = on_object(tuple_target(src, tuple));
    if (d == 1 && src.is_unit_label(tuple[0]))
        return identity_mor_arrow(cat, a);
    int degree_sum = 0;
    for (const auto& label : tuple)
        degree_sum += src.resolve(label).degree;
    return zero_mor_arrow(cat, a, b, degree_sum + 1 - d);
}

PackedFunctor pack_transformation(const PreNatTrans& h)
{
    check_prenat(h);
    if (h.degree != 0)
        throw DegreeMismatch("packing requires a degree-0 transformation");
    const DgCategory& src = *h.from->source;
    const DgCategory& tgt = *h.from->target;

    PackedFunctor phi;
    phi.from = h.from;
    phi.to = h.to;
    for (const auto& x : src.objects()) {
        const Mor f = h.at(x);
        /* h^0_X enters as the morphism slot of an object, which must be
         * closed; pack defers that question to the functor check. */
        phi.objects.emplace(x, MorObject{f.src, f.tgt, f});
    }
    const int bound = std::max({1, h.from->max_degree, h.to->max_degree, h.max_degree});
    for (int d = 1; d <= bound; ++d) {
        for (const auto& tuple : composable_tuples(src, d, true)) {
            MorArrow arrow = make_mor_arrow(tgt, phi.on_object(tuple_source(src, tuple)),
                                            phi.on_object(tuple_target(src, tuple)),
                                            tuple_maltese(src, tuple, tuple.size()) + 1,
                                            h.from->component(tuple), h.to->component(tuple), h.component(tuple));
            if (!arrow.is_zero()) {
                phi.components[d][tuple] = std::move(arrow);
                phi.max_degree = std::max(phi.max_degree, d);
            }
        }
    }
    return phi;
}

PreNatTrans unpack_transformation(const PackedFunctor& phi)
{
    PreNatTrans h = zero_prenat(*phi.from, *phi.to, 0);
    for (const auto& [x, obj] : phi.objects)
        h.set_at(x, obj.f);
    for (const auto& [d, by_tuple] : phi.components)
        for (const auto& [tuple, arrow] : by_tuple)
            if (!arrow.h.is_zero())
                h.set_component(tuple, arrow.h);
    return h;
}

MorArrow packed_equation_residual(const PackedFunctor& phi, const Tuple& tuple)
{
    const DgCategory& src = *phi.from->source;
    const DgCategory& tgt = *phi.from->target;
    const int d = static_cast<int>(tuple.size());

    MorArrow lhs = dgmor_mu1(tgt, phi.component(tgt, tuple));
    for (int j = 1; j <= d - 1; ++j) {
        const Tuple front(tuple.begin(), tuple.begin() + j);
        const Tuple back(tuple.begin() + j, tuple.end());
        lhs = add(lhs, dgmor_mu2(tgt, phi.component(tgt, front), phi.component(tgt, back)));
    }

    MorArrow rhs = zero_mor_arrow(tgt, lhs.src, lhs.tgt, lhs.degree);

    /* Multilinear terms: expand mu^1 / mu^2 of the source in its basis
     * and re-evaluate the packed components. */
    auto eval_with = [&](const std::vector<std::pair<FieldElement, Tuple>>& expansion) {
        MorArrow acc = zero_mor_arrow(tgt, rhs.src, rhs.tgt, rhs.degree);
        for (const auto& [coeff, labels] : expansion)
            acc = add(acc, scale(coeff, phi.component(tgt, labels)));
        return acc;
    };

    for (int n = 0; n <= d - 1; ++n) {
        const size_t pos = static_cast<size_t>(d - 1 - n);
        const Mor inner = ainf_mu1(src, src.basis_mor(tuple[pos]));
        if (inner.is_zero())
            continue;
        std::vector<std::pair<FieldElement, Tuple>> expansion;
        const auto& names = src.hom(inner.src, inner.tgt).space().labels(inner.degree());
        for (size_t i = 0; i < inner.el.coords.size(); ++i) {
            if (inner.el.coords[i].is_zero())
                continue;
            Tuple t = tuple;
            t[pos] = names[i];
            expansion.emplace_back(inner.el.coords[i], std::move(t));
        }
        if (expansion.empty())
            continue;
        rhs = add(rhs, scale(minus_one_pow(src.field(), tuple_maltese(src, tuple, static_cast<size_t>(n))),
                             eval_with(expansion)));
    }
    for (int n = 0; n <= d - 2; ++n) {
        const size_t pos_lo = static_cast<size_t>(d - 1 - n);
        const size_t pos_hi = static_cast<size_t>(d - 2 - n);
        const Mor inner = ainf_mu2(src, src.basis_mor(tuple[pos_hi]), src.basis_mor(tuple[pos_lo]));
        std::vector<std::pair<FieldElement, Tuple>> expansion;
        const auto& names = src.hom(inner.src, inner.tgt).space().labels(inner.degree());
        for (size_t i = 0; i < inner.el.coords.size(); ++i) {
            if (inner.el.coords[i].is_zero())
                continue;
            Tuple t;
            t.reserve(tuple.size() - 1);
            for (size_t k = 0; k < tuple.size(); ++k) {
                if (k == pos_lo)
                    continue;
                t.push_back(k == pos_hi ? names[i] : tuple[k]);
            }
            expansion.emplace_back(inner.el.coords[i], std::move(t));
        }
        if (expansion.empty())
            continue;
        rhs = add(rhs, scale(minus_one_pow(src.field(), tuple_maltese(src, tuple, static_cast<size_t>(n))),
                             eval_with(expansion)));
    }

    return add(lhs, scale(-FieldElement::one(src.field()), rhs));
}

PackedReport check_packed_functor(const PackedFunctor& phi, int d_max)
{
    const DgCategory& src = *phi.from->source;
    const DgCategory& tgt = *phi.from->target;
    PackedReport report;

    for (const auto& [x, obj] : phi.objects) {
        if (!tgt.differential(obj.f).is_zero())
            report.entries.push_back({"object", 0, {x}});
    }
    for (int d = 1; d <= d_max; ++d)
        for (const auto& tuple : composable_tuples(src, d, true))
            if (!packed_equation_residual(phi, tuple).is_zero())
                report.entries.push_back({"equation", d, tuple});
    return report;
}

Mor solve_directed_homotopy(const DgCategory& cat, const MorArrow& x, const Mor& u_prim, const Mor& v_prim)
{
    const int n = x.degree;

    if (u_prim.degree() != n - 1 || v_prim.degree() != n - 1)
        throw DegreeMismatch("primitives must have degree n-1");
    if (!equal(ainf_mu1(cat, u_prim), x.u))
        throw ShapeError("mu^1 of the first primitive does not equal the u slot");
    if (!equal(ainf_mu1(cat, v_prim), x.v))
        throw ShapeError("mu^1 of the second primitive does not equal the v slot");
    if (!dgmor_mu1(cat, x).is_zero())
        throw NotCocycle("directed homotopy input is not mu^1-closed");

    /* The correction term lives in hom(A, B') in degree n-1; its class
     * obstructs the solve, so H^{n-1} there must vanish. */
    const Complex hom_ab = cat.hom(x.src.a, x.tgt.b);
    const CohomologyBasis h_obstruction(hom_ab, n - 1);
    if (h_obstruction.dim() != 0)
        throw VanishingHypothesisFails(n - 1, static_cast<int>(h_obstruction.dim()));

    /* Transport to the plain differential: apply the coboundary recipe
     * to (-1)^{n-1} x with d(u~) = (-1)^{n-1} x.u. */
    const FieldElement sgn_n1 = minus_one_pow(cat.field(), n - 1);
    const FieldElement sgn_n = minus_one_pow(cat.field(), n);
    Mor y = scale(sgn_n1, x.h);
    y = add(y, scale(sgn_n, sub(cat.compose(x.tgt.f, u_prim), cat.compose(v_prim, x.src.f))));

    const Homog preimage = solve_coboundary(hom_ab, y.el);
    const Mor h_tilde{x.src.a, x.tgt.b, preimage};

    const MorArrow candidate = make_mor_arrow(cat, x.src, x.tgt, n - 1, u_prim, v_prim, h_tilde);
    if (!equal(dgmor_mu1(cat, candidate), x))
        throw InternalError("directed homotopy solution failed re-verification");
    return h_tilde;
}

}  // namespace dglift
