#pragma once

#include "dglift/ainf.hpp"

namespace dglift {

/* Object of the dg-category of homotopy coherent morphisms over a
 * presentation: a closed degree-0 morphism f: A -> B. The category is
 * realized virtually; hom complexes are built on demand. */
struct MorObject {
    std::string a, b;
    Mor f;
};

MorObject make_mor_object(const DgCategory& cat, const Mor& f);
bool equal(const MorObject& x, const MorObject& y);

/* A degree-n arrow (u, v, h): u in hom(A,A')^n, v in hom(B,B')^n,
 * h in hom(A,B')^{n-1}. */
struct MorArrow {
    MorObject src, tgt;
    int degree;
    Mor u, v, h;

    bool is_zero() const { return u.is_zero() && v.is_zero() && h.is_zero(); }
};

MorArrow make_mor_arrow(const DgCategory& cat, MorObject src, MorObject tgt, int degree, Mor u, Mor v, Mor h);
MorArrow zero_mor_arrow(const DgCategory& cat, MorObject src, MorObject tgt, int degree);
MorArrow identity_mor_arrow(const DgCategory& cat, const MorObject& x);
MorArrow add(const MorArrow& x, const MorArrow& y);
MorArrow scale(const FieldElement& c, const MorArrow& x);
bool equal(const MorArrow& x, const MorArrow& y);

/* The hom complex of dgMor between two objects, with basis labels
 * u:<label>, v:<label>, h:<label> and the differential
 * (u,v,h) -> (du, dv, dh + (-1)^n (f'u - v f)). */
Complex dgmor_hom(const DgCategory& cat, const MorObject& src, const MorObject& tgt);

/* Conversions between arrows and homogeneous elements of dgmor_hom. */
Homog arrow_to_element(const DgCategory& cat, const MorArrow& x);
MorArrow element_to_arrow(const DgCategory& cat, const MorObject& src, const MorObject& tgt, const Homog& el);

/* Composition with the sign rule (u'u, v'v, (-1)^n h'u + v'h),
 * n = deg x. */
MorArrow dgmor_compose(const DgCategory& cat, const MorArrow& xp, const MorArrow& x);
/* Plain differential of the morphism category. */
MorArrow dgmor_d(const DgCategory& cat, const MorArrow& x);
/* mu^1 and mu^2 of dgMor viewed with higher compositions zero. */
MorArrow dgmor_mu1(const DgCategory& cat, const MorArrow& x);
MorArrow dgmor_mu2(const DgCategory& cat, const MorArrow& xp, const MorArrow& x);

/* Source and target projections (strict dg-functors). */
Mor source_projection(const MorArrow& x);
Mor target_projection(const MorArrow& x);

/* A degree-0 transformation packed as a functor into dgMor:
 * phi^0(X) = (F X, G X, h^0_X) and phi^d = (F^d, G^d, h^d). */
struct PackedFunctor {
    const AInfFunctor* from = nullptr;
    const AInfFunctor* to = nullptr;
    std::map<std::string, MorObject> objects;
    std::map<int, std::map<Tuple, MorArrow>> components;
    int max_degree = 0;

    MorObject on_object(const std::string& x) const;
    MorArrow component(const DgCategory& cat, const Tuple& tuple) const;
};

PackedFunctor pack_transformation(const PreNatTrans& h);
PreNatTrans unpack_transformation(const PackedFunctor& phi);

/* Residual of the functor equation for the packed functor on one tuple,
 * valued in dgMor. Zero on every unit-free tuple up to d_max iff the
 * packed transformation is closed. */
MorArrow packed_equation_residual(const PackedFunctor& phi, const Tuple& tuple);

struct PackedReport {
    std::vector<FunctorReportEntry> entries;
    bool ok() const { return entries.empty(); }
};

PackedReport check_packed_functor(const PackedFunctor& phi, int d_max);

/* Directed homotopy solver: given a mu^1-closed degree-n arrow x and
 * primitives mu^1(u~) = x.u, mu^1(v~) = x.v of degree n-1, find h~ with
 * mu^1(u~, v~, h~) = x. Requires H^{n-1}(hom(A, B')) = 0, checked up
 * front; the returned value is re-verified exactly. */
Mor solve_directed_homotopy(const DgCategory& cat, const MorArrow& x, const Mor& u_prim, const Mor& v_prim);

}  // namespace dglift
