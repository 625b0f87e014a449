#include "dglift/dgcat.hpp"

#include <algorithm>
#include <sstream>

namespace dglift {

bool ValidationReport::mentions(const std::string& axiom) const
{
    for (const auto& e : entries)
        if (e.axiom == axiom)
            return true;
    return false;
}

std::string ValidationReport::str() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.axiom << " violated at (";
        for (size_t i = 0; i < e.tuple.size(); ++i)
            os << (i ? ", " : "") << e.tuple[i];
        os << ")";
        if (!e.detail.empty())
            os << ": " << e.detail;
        os << "\n";
    }
    return os.str();
}

void DgCategory::add_object(const std::string& name)
{
    if (finalized_)
        throw ShapeError("presentation already finalized");
    if (has_object(name))
        throw ShapeError("duplicate object '" + name + "'");
    objects_.push_back(name);
}

void DgCategory::add_basis(const std::string& src, const std::string& tgt, const std::string& label, int degree)
{
    if (finalized_)
        throw ShapeError("presentation already finalized");
    if (!has_object(src) || !has_object(tgt))
        throw ShapeError("hom between undeclared objects " + src + ", " + tgt);
    if (basis_index_.count(label))
        throw ShapeError("duplicate basis label '" + label + "'");
    auto& list = raw_basis_[{src, tgt}];
    basis_index_[label] = BasisRef{src, tgt, degree, 0};
    list.emplace_back(label, degree);
}

void DgCategory::set_unit(const std::string& object, const std::string& label)
{
    if (finalized_)
        throw ShapeError("presentation already finalized");
    if (!has_object(object))
        throw ShapeError("unit for undeclared object '" + object + "'");
    auto it = basis_index_.find(label);
    if (it == basis_index_.end())
        throw ShapeError("unit label '" + label + "' is not a basis element");
    const BasisRef& ref = it->second;
    if (ref.src != object || ref.tgt != object || ref.degree != 0)
        throw ShapeError("unit label '" + label + "' must be a degree-0 element of hom(" + object + ", " + object
                         + ")");
    units_[object] = label;
}

void DgCategory::set_differential(const std::string& label,
                                  const std::vector<std::pair<FieldElement, std::string>>& value)
{
    if (finalized_)
        throw ShapeError("presentation already finalized");
    auto it = basis_index_.find(label);
    if (it == basis_index_.end())
        throw ShapeError("differential of unknown label '" + label + "'");
    for (const auto& [coeff, term] : value) {
        auto jt = basis_index_.find(term);
        if (jt == basis_index_.end())
            throw ShapeError("differential of '" + label + "' references unknown label '" + term + "'");
        if (jt->second.src != it->second.src || jt->second.tgt != it->second.tgt)
            throw ShapeError("differential of '" + label + "' leaves its hom space (term '" + term + "')");
        if (jt->second.degree != it->second.degree + 1)
            throw ShapeError("differential of '" + label + "' has a term '" + term + "' of degree "
                             + std::to_string(jt->second.degree) + ", expected "
                             + std::to_string(it->second.degree + 1));
    }
    raw_diff_[label] = value;
}

void DgCategory::set_compose(const std::string& g, const std::string& f,
                             const std::vector<std::pair<FieldElement, std::string>>& value)
{
    if (finalized_)
        throw ShapeError("presentation already finalized");
    auto gi = basis_index_.find(g), fi = basis_index_.find(f);
    if (gi == basis_index_.end())
        throw ShapeError("composition references unknown label '" + g + "'");
    if (fi == basis_index_.end())
        throw ShapeError("composition references unknown label '" + f + "'");
    if (fi->second.tgt != gi->second.src)
        throw NotComposable("pair (" + g + ", " + f + ") is not composable");
    const int deg = gi->second.degree + fi->second.degree;
    for (const auto& [coeff, term] : value) {
        auto ti = basis_index_.find(term);
        if (ti == basis_index_.end())
            throw ShapeError("composition (" + g + ", " + f + ") references unknown label '" + term + "'");
        if (ti->second.src != fi->second.src || ti->second.tgt != gi->second.tgt)
            throw ShapeError("composition (" + g + ", " + f + ") leaves hom(" + fi->second.src + ", "
                             + gi->second.tgt + ")");
        if (ti->second.degree != deg)
            throw ShapeError("composition (" + g + ", " + f + ") has term '" + term + "' of wrong degree");
    }
    raw_compose_[{g, f}] = value;
}

void DgCategory::finalize()
{
    if (finalized_)
        return;

    /* Hom complexes: spaces from declared labels, differential blocks
     * assembled column by column. */
    for (const auto& [pair, labels] : raw_basis_) {
        GradedSpace space(field_);
        std::vector<std::pair<std::string, int>> ordered = labels;
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        for (const auto& [label, degree] : ordered)
            space.add_basis_label(degree, label);
        for (const auto& [label, degree] : ordered)
            basis_index_[label].index = space.index_of(degree, label);

        GradedMap d(space, space, 1);
        for (int deg : space.support()) {
            Matrix block(field_, space.dim(deg + 1), space.dim(deg));
            bool nonzero = false;
            const auto& cols = space.labels(deg);
            for (size_t c = 0; c < cols.size(); ++c) {
                auto it = raw_diff_.find(cols[c]);
                if (it == raw_diff_.end())
                    continue;
                for (const auto& [coeff, term] : it->second) {
                    block.at(space.index_of(deg + 1, term), c) += coeff;
                    nonzero = true;
                }
            }
            if (nonzero)
                d.set_block(deg, std::move(block));
        }
        homs_.emplace(pair, Complex(space, std::move(d)));
    }

    for (const auto& [pair, value] : raw_compose_) {
        const BasisRef& g = basis_index_.at(pair.first);
        const BasisRef& f = basis_index_.at(pair.second);
        const GradedSpace& space = homs_.at({f.src, g.tgt}).space();
        Homog sum = zero_homog(space, g.degree + f.degree);
        for (const auto& [coeff, term] : value) {
            const BasisRef& t = basis_index_.at(term);
            sum = add(sum, scale(coeff, basis_homog(space, sum.degree, t.index)));
        }
        compose_table_.emplace(pair, std::move(sum));
    }

    finalized_ = true;
}

void DgCategory::require_finalized() const
{
    if (!finalized_)
        throw ShapeError("presentation not finalized");
}

size_t DgCategory::object_index(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        throw ShapeError("unknown object '" + name + "'");
    return static_cast<size_t>(it - objects_.begin());
}

bool DgCategory::has_object(const std::string& name) const
{
    return std::find(objects_.begin(), objects_.end(), name) != objects_.end();
}

const Complex& DgCategory::hom(const std::string& src, const std::string& tgt) const
{
    require_finalized();
    auto it = homs_.find({src, tgt});
    return it == homs_.end() ? zero_complex_ : it->second;
}

const BasisRef& DgCategory::resolve(const std::string& label) const
{
    auto it = basis_index_.find(label);
    if (it == basis_index_.end())
        throw ShapeError("unknown basis label '" + label + "'");
    return it->second;
}

bool DgCategory::has_label(const std::string& label) const
{
    return basis_index_.count(label) != 0;
}

const std::string& DgCategory::unit_label(const std::string& object) const
{
    auto it = units_.find(object);
    if (it == units_.end())
        throw ShapeError("object '" + object + "' has no declared unit");
    return it->second;
}

bool DgCategory::is_unit_label(const std::string& label) const
{
    const auto it = basis_index_.find(label);
    if (it == basis_index_.end())
        return false;
    auto u = units_.find(it->second.src);
    return u != units_.end() && u->second == label;
}

std::vector<std::string> DgCategory::basis_labels(const std::string& src, const std::string& tgt) const
{
    require_finalized();
    std::vector<std::string> out;
    const GradedSpace& space = hom(src, tgt).space();
    for (int deg : space.support())
        for (const auto& label : space.labels(deg))
            out.push_back(label);
    return out;
}

std::vector<std::pair<std::string, std::string>> DgCategory::hom_pairs() const
{
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& s : objects_)
        for (const auto& t : objects_)
            if (homs_.count({s, t}) && homs_.at({s, t}).space().total_dim() > 0)
                pairs.emplace_back(s, t);
    return pairs;
}

size_t DgCategory::total_hom_dim() const
{
    size_t n = 0;
    for (const auto& [pair, c] : homs_)
        n += c.space().total_dim();
    return n;
}

Mor DgCategory::basis_mor(const std::string& label) const
{
    require_finalized();
    const BasisRef& ref = resolve(label);
    return Mor{ref.src, ref.tgt, basis_homog(hom(ref.src, ref.tgt).space(), ref.degree, ref.index)};
}

Mor DgCategory::zero_mor(const std::string& src, const std::string& tgt, int degree) const
{
    require_finalized();
    return Mor{src, tgt, zero_homog(hom(src, tgt).space(), degree)};
}

Mor DgCategory::unit_mor(const std::string& object) const
{
    return basis_mor(unit_label(object));
}

Mor DgCategory::differential(const Mor& f) const
{
    require_finalized();
    return Mor{f.src, f.tgt, apply_graded_map(hom(f.src, f.tgt).differential(), f.el)};
}

Mor DgCategory::compose_basis(const std::string& g, const std::string& f) const
{
    require_finalized();
    const BasisRef& gr = resolve(g);
    const BasisRef& fr = resolve(f);
    if (fr.tgt != gr.src)
        throw NotComposable("pair (" + g + ", " + f + ") is not composable");
    auto it = compose_table_.find({g, f});
    if (it != compose_table_.end())
        return Mor{fr.src, gr.tgt, it->second};
    if (is_unit_label(g))
        return basis_mor(f);
    if (is_unit_label(f))
        return basis_mor(g);
    return zero_mor(fr.src, gr.tgt, gr.degree + fr.degree);
}

Mor DgCategory::compose(const Mor& g, const Mor& f) const
{
    require_finalized();
    if (f.tgt != g.src)
        throw NotComposable("composition source/target mismatch: " + f.tgt + " vs " + g.src);
    Mor out = zero_mor(f.src, g.tgt, g.degree() + f.degree());
    const GradedSpace& gspace = hom(g.src, g.tgt).space();
    const GradedSpace& fspace = hom(f.src, f.tgt).space();
    const auto& glabels = gspace.labels(g.degree());
    const auto& flabels = fspace.labels(f.degree());
    for (size_t i = 0; i < g.el.coords.size(); ++i) {
        if (g.el.coords[i].is_zero())
            continue;
        for (size_t j = 0; j < f.el.coords.size(); ++j) {
            if (f.el.coords[j].is_zero())
                continue;
            const Mor term = compose_basis(glabels[i], flabels[j]);
            out = add(out, scale(g.el.coords[i] * f.el.coords[j], term));
        }
    }
    return out;
}

bool DgCategory::linear() const
{
    require_finalized();
    for (const auto& [pair, c] : homs_) {
        for (int deg : c.space().support())
            if (deg != 0)
                return false;
        for (int deg : c.space().support())
            if (!c.differential().block(deg).is_zero())
                return false;
    }
    return true;
}

int maltese(const std::vector<int>& degrees, size_t n)
{
    if (n > degrees.size())
        throw ShapeError("maltese: n exceeds the number of degrees");
    int sum = 0;
    for (size_t i = 0; i < n; ++i)
        sum += degrees[i];
    return sum - static_cast<int>(n);
}

FieldElement minus_one_pow(const Field& field, int exponent)
{
    return (exponent % 2 + 2) % 2 == 0 ? FieldElement::one(field) : -FieldElement::one(field);
}

Mor ainf_mu1(const DgCategory& cat, const Mor& f)
{
    return scale(minus_one_pow(cat.field(), f.degree()), cat.differential(f));
}

Mor ainf_mu2(const DgCategory& cat, const Mor& g, const Mor& f)
{
    return scale(minus_one_pow(cat.field(), f.degree()), cat.compose(g, f));
}

Mor add(const Mor& a, const Mor& b)
{
    if (a.src != b.src || a.tgt != b.tgt)
        throw ShapeError("adding morphisms from different hom spaces");
    return Mor{a.src, a.tgt, add(a.el, b.el)};
}

Mor sub(const Mor& a, const Mor& b)
{
    return add(a, negate(b));
}

Mor scale(const FieldElement& c, const Mor& m)
{
    return Mor{m.src, m.tgt, scale(c, m.el)};
}

Mor negate(const Mor& m)
{
    return Mor{m.src, m.tgt, negate(m.el)};
}

bool equal(const Mor& a, const Mor& b)
{
    if (a.src != b.src || a.tgt != b.tgt)
        return a.is_zero() && b.is_zero();
    return equal(a.el, b.el);
}

ValidationReport DgCategory::validate() const
{
    require_finalized();
    ValidationReport report;

    for (const auto& [pair, c] : homs_) {
        for (int deg : c.space().support()) {
            for (const auto& label : c.space().labels(deg)) {
                const Mor x = basis_mor(label);
                if (!differential(differential(x)).is_zero())
                    report.entries.push_back({"d-squared", {label}, "d(d(" + label + ")) != 0"});
            }
        }
    }

    for (const auto& object : objects_) {
        auto it = units_.find(object);
        if (it == units_.end()) {
            report.entries.push_back({"unit", {object}, "object has no declared unit"});
            continue;
        }
        const Mor one = basis_mor(it->second);
        if (!differential(one).is_zero())
            report.entries.push_back({"unit", {it->second}, "d(unit) != 0"});
    }

    /* Unit laws, including explicit overrides of unit compositions. */
    for (const auto& [label, ref] : basis_index_) {
        const Mor f = basis_mor(label);
        if (units_.count(ref.tgt)) {
            const std::string& u = units_.at(ref.tgt);
            if (!equal(compose_basis(u, label), f))
                report.entries.push_back({"unit", {u, label}, "1∘f != f"});
        }
        if (units_.count(ref.src)) {
            const std::string& u = units_.at(ref.src);
            if (!equal(compose_basis(label, u), f))
                report.entries.push_back({"unit", {label, u}, "f∘1 != f"});
        }
    }

    /* Leibniz: d(g∘f) = d(g)∘f + (-1)^{|g|} g∘d(f) on basis pairs. */
    for (const auto& [gl, gref] : basis_index_) {
        for (const auto& [fl, fref] : basis_index_) {
            if (fref.tgt != gref.src)
                continue;
            const Mor g = basis_mor(gl), f = basis_mor(fl);
            const Mor lhs = differential(compose(g, f));
            const Mor rhs =
                add(compose(differential(g), f), scale(minus_one_pow(field_, gref.degree), compose(g, differential(f))));
            if (!equal(lhs, rhs))
                report.entries.push_back({"leibniz", {gl, fl}, ""});
        }
    }

    for (const auto& [hl, href] : basis_index_) {
        for (const auto& [gl, gref] : basis_index_) {
            if (gref.tgt != href.src)
                continue;
            for (const auto& [fl, fref] : basis_index_) {
                if (fref.tgt != gref.src)
                    continue;
                const Mor h = basis_mor(hl), g = basis_mor(gl), f = basis_mor(fl);
                if (!equal(compose(compose(h, g), f), compose(h, compose(g, f))))
                    report.entries.push_back({"associativity", {hl, gl, fl}, ""});
            }
        }
    }

    return report;
}

H0Category::H0Category(const DgCategory& cat) : cat_(&cat)
{
    for (const auto& s : cat.objects()) {
        for (const auto& t : cat.objects()) {
            h0_.emplace(std::make_pair(s, t), CohomologyBasis(cat.hom(s, t), 0));
        }
    }

    /* Composition of classes must not depend on the representatives:
     * recompute with every representative shifted by the image of the
     * full degree -1 basis and compare. */
    for (const auto& z : cat.objects()) {
        for (const auto& y : cat.objects()) {
            for (const auto& x : cat.objects()) {
                const auto& gs = h0_.at({y, z});
                const auto& fs = h0_.at({x, y});
                for (size_t i = 0; i < gs.dim(); ++i) {
                    for (size_t j = 0; j < fs.dim(); ++j) {
                        Mor g{y, z, gs.representatives()[i]};
                        Mor f{x, y, fs.representatives()[j]};
                        const Vec base = h0_.at({x, z}).class_of(cat.compose(g, f).el);
                        Mor gshift = add(g, shift_by_boundary(g));
                        Mor fshift = add(f, shift_by_boundary(f));
                        const Vec moved = h0_.at({x, z}).class_of(cat.compose(gshift, fshift).el);
                        if (base != moved)
                            throw InternalError("H0 composition depends on representatives at (" + y + "->" + z
                                                + ") x (" + x + "->" + y + ")");
                    }
                }
            }
        }
    }
}

Mor H0Category::shift_by_boundary(const Mor& rep) const
{
    const Complex& c = cat_->hom(rep.src, rep.tgt);
    Homog w = zero_homog(c.space(), rep.degree() - 1);
    for (size_t i = 0; i < w.coords.size(); ++i)
        w.coords[i] = FieldElement::one(cat_->field());
    return Mor{rep.src, rep.tgt, c.d(w)};
}

size_t H0Category::dim(const std::string& src, const std::string& tgt) const
{
    return h0_.at({src, tgt}).dim();
}

const CohomologyBasis& H0Category::classes(const std::string& src, const std::string& tgt) const
{
    return h0_.at({src, tgt});
}

Mor H0Category::representative(const std::string& src, const std::string& tgt, const Vec& coords) const
{
    const auto& basis = h0_.at({src, tgt});
    if (coords.size() != basis.dim())
        throw ShapeError("class coordinate count mismatch for hom(" + src + ", " + tgt + ")");
    Mor out = cat_->zero_mor(src, tgt, 0);
    for (size_t i = 0; i < coords.size(); ++i)
        out = add(out, scale(coords[i], Mor{src, tgt, basis.representatives()[i]}));
    return out;
}

Vec H0Category::class_of(const Mor& cocycle) const
{
    return h0_.at({cocycle.src, cocycle.tgt}).class_of(cocycle.el);
}

Vec H0Category::identity_class(const std::string& object) const
{
    return class_of(cat_->unit_mor(object));
}

Vec H0Category::compose_classes(const std::string& x, const std::string& y, const std::string& z, const Vec& g,
                                const Vec& f) const
{
    const Mor grep = representative(y, z, g);
    const Mor frep = representative(x, y, f);
    return class_of(cat_->compose(grep, frep));
}

std::optional<Vec> h0_invertible(const H0Category& h0, const std::string& x, const std::string& y, const Vec& c)
{
    const Field& field = h0.base().field();
    const size_t back_dim = h0.dim(y, x);

    /* c∘u = [1_Y] and u'∘c = [1_X] as linear systems in class coordinates. */
    Matrix left(field, h0.dim(y, y), back_dim);
    Matrix right(field, h0.dim(x, x), back_dim);
    for (size_t j = 0; j < back_dim; ++j) {
        const Vec ej = unit_vec(field, back_dim, j);
        const Vec cu = h0.compose_classes(y, x, y, c, ej);
        for (size_t i = 0; i < cu.size(); ++i)
            left.at(i, j) = cu[i];
        const Vec uc = h0.compose_classes(x, y, x, ej, c);
        for (size_t i = 0; i < uc.size(); ++i)
            right.at(i, j) = uc[i];
    }

    auto u = solve(left, h0.identity_class(y));
    auto v = solve(right, h0.identity_class(x));
    if (!u || !v)
        return std::nullopt;
    if (*u != *v)
        throw InternalError("left and right inverse classes disagree");
    return *u;
}

}  // namespace dglift
