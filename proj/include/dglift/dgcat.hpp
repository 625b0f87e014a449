#pragma once

#include <optional>

#include "dglift/graded.hpp"

namespace dglift {

/* Position of a basis morphism inside a presentation. */
struct BasisRef {
    std::string src, tgt;
    int degree;
    size_t index;
};

/* A homogeneous morphism: an element of hom(src, tgt). */
struct Mor {
    std::string src, tgt;
    Homog el;

    int degree() const { return el.degree; }
    bool is_zero() const { return el.is_zero(); }
};

struct ValidationEntry {
    std::string axiom;  // "d-squared" | "leibniz" | "associativity" | "unit"
    std::vector<std::string> tuple;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;

    bool ok() const { return entries.empty(); }
    bool mentions(const std::string& axiom) const;
    std::string str() const;
};

/* Finite dg-category presentation: objects, hom complexes with named
 * bases, designated unit basis elements, and sparse composition
 * structure constants. Units compose implicitly by the unit laws unless
 * an explicit table entry overrides them (which the validator then
 * checks against the laws). */
class DgCategory {
public:
    explicit DgCategory(const Field& field) : field_(field), zero_complex_(Complex::with_zero_differential(GradedSpace(field))) {}

    const Field& field() const { return field_; }

    void add_object(const std::string& name);
    void add_basis(const std::string& src, const std::string& tgt, const std::string& label, int degree);
    void set_unit(const std::string& object, const std::string& label);
    void set_differential(const std::string& label, const std::vector<std::pair<FieldElement, std::string>>& value);
    void set_compose(const std::string& g, const std::string& f,
                     const std::vector<std::pair<FieldElement, std::string>>& value);

    /* Builds the hom complexes and the structure-constant table; the
     * presentation is immutable afterwards. */
    void finalize();
    bool finalized() const { return finalized_; }

    const std::vector<std::string>& objects() const { return objects_; }
    size_t object_index(const std::string& name) const;
    bool has_object(const std::string& name) const;

    const Complex& hom(const std::string& src, const std::string& tgt) const;
    const BasisRef& resolve(const std::string& label) const;
    bool has_label(const std::string& label) const;
    const std::string& unit_label(const std::string& object) const;
    bool is_unit_label(const std::string& label) const;

    /* All basis labels of hom(src, tgt), ascending degree then index. */
    std::vector<std::string> basis_labels(const std::string& src, const std::string& tgt) const;
    /* All (src, tgt) pairs with nonzero hom, in object order. */
    std::vector<std::pair<std::string, std::string>> hom_pairs() const;

    size_t total_hom_dim() const;

    Mor basis_mor(const std::string& label) const;
    Mor zero_mor(const std::string& src, const std::string& tgt, int degree) const;
    Mor unit_mor(const std::string& object) const;

    Mor differential(const Mor& f) const;
    /* Plain composition g∘f, bilinear over the structure constants. */
    Mor compose(const Mor& g, const Mor& f) const;

    /* Composite of two basis morphisms, honoring unit laws and explicit
     * overrides; zero when no table entry exists. */
    Mor compose_basis(const std::string& g, const std::string& f) const;

    bool linear() const;  // concentrated in degree 0 with zero differential

    ValidationReport validate() const;

private:
    void require_finalized() const;

    Field field_;
    std::vector<std::string> objects_;
    std::map<std::string, BasisRef> basis_index_;
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, int>>> raw_basis_;
    std::map<std::string, std::vector<std::pair<FieldElement, std::string>>> raw_diff_;
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<FieldElement, std::string>>> raw_compose_;
    std::map<std::string, std::string> units_;

    bool finalized_ = false;
    std::map<std::pair<std::string, std::string>, Complex> homs_;
    std::map<std::pair<std::string, std::string>, Homog> compose_table_;
    Complex zero_complex_;
};

/* Sum of the first n degrees minus n: the sign exponent governing the
 * higher-composition identities. */
int maltese(const std::vector<int>& degrees, size_t n);

/* (-1)^exponent in the given field. */
FieldElement minus_one_pow(const Field& field, int exponent);

/* The two nonzero compositions of the presentation viewed with higher
 * compositions zero: mu1(f) = (-1)^{|f|} df and mu2(g, f) = (-1)^{|f|} g∘f. */
Mor ainf_mu1(const DgCategory& cat, const Mor& f);
Mor ainf_mu2(const DgCategory& cat, const Mor& g, const Mor& f);

Mor add(const Mor& a, const Mor& b);
Mor sub(const Mor& a, const Mor& b);
Mor scale(const FieldElement& c, const Mor& m);
Mor negate(const Mor& m);
bool equal(const Mor& a, const Mor& b);

/* Degree-0 homotopy category: objects unchanged, hom spaces the
 * degree-0 cohomology, composition induced on canonical
 * representatives (and checked independent of the choice). */
class H0Category {
public:
    explicit H0Category(const DgCategory& cat);

    const DgCategory& base() const { return *cat_; }
    const std::vector<std::string>& objects() const { return cat_->objects(); }

    size_t dim(const std::string& src, const std::string& tgt) const;
    const CohomologyBasis& classes(const std::string& src, const std::string& tgt) const;

    /* Representative cocycle of a class given by coordinates. */
    Mor representative(const std::string& src, const std::string& tgt, const Vec& coords) const;
    Vec class_of(const Mor& cocycle) const;

    Vec identity_class(const std::string& object) const;
    Vec compose_classes(const std::string& x, const std::string& y, const std::string& z, const Vec& g,
                        const Vec& f) const;

private:
    /* rep + d(all-ones degree -1 vector): a deterministic representative
     * shift used by the construction-time well-definedness check. */
    Mor shift_by_boundary(const Mor& rep) const;

    const DgCategory* cat_;
    std::map<std::pair<std::string, std::string>, CohomologyBasis> h0_;
};

/* Two-sided inverse of the class c: X -> Y in H^0, when it exists. */
std::optional<Vec> h0_invertible(const H0Category& h0, const std::string& x, const std::string& y, const Vec& c);

}  // namespace dglift
