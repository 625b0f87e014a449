#include "dglift/ainf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dglift {

namespace {

/* Labels out of each object, sorted by label, units last so that
 * enumeration with skip_units never visits them. */
std::map<std::string, std::vector<std::string>> outgoing_labels(const DgCategory& cat, bool skip_units)
{
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& src : cat.objects()) {
        std::vector<std::string> labels;
        for (const auto& tgt : cat.objects())
            for (const auto& label : cat.basis_labels(src, tgt))
                if (!skip_units || !cat.is_unit_label(label))
                    labels.push_back(label);
        std::sort(labels.begin(), labels.end());
        out[src] = std::move(labels);
    }
    return out;
}

}  // namespace

std::vector<Tuple> composable_tuples(const DgCategory& cat, int length, bool skip_units)
{
    if (length < 1)
        throw ShapeError("tuple length must be >= 1");
    const auto outgoing = outgoing_labels(cat, skip_units);
    std::vector<Tuple> result;
    Tuple chain(static_cast<size_t>(length));

    /* chain is built first-arrow-first; position k of the chain lands at
     * tuple index length-1-k. */
    std::function<void(const std::string&, int)> extend = [&](const std::string& at, int k) {
        if (k == length) {
            result.push_back(chain);
            return;
        }
        for (const auto& label : outgoing.at(at)) {
            chain[static_cast<size_t>(length - 1 - k)] = label;
            extend(cat.resolve(label).tgt, k + 1);
        }
    };
    for (const auto& obj : cat.objects())
        extend(obj, 0);
    return result;
}

std::string tuple_source(const DgCategory& cat, const Tuple& tuple)
{
    return cat.resolve(tuple.back()).src;
}

std::string tuple_target(const DgCategory& cat, const Tuple& tuple)
{
    return cat.resolve(tuple.front()).tgt;
}

bool tuple_composable(const DgCategory& cat, const Tuple& tuple)
{
    for (size_t i = tuple.size(); i-- > 1;)
        if (cat.resolve(tuple[i]).tgt != cat.resolve(tuple[i - 1]).src)
            return false;
    return true;
}

bool tuple_has_unit(const DgCategory& cat, const Tuple& tuple)
{
    for (const auto& label : tuple)
        if (cat.is_unit_label(label))
            return true;
    return false;
}

int tuple_maltese(const DgCategory& cat, const Tuple& tuple, size_t n)
{
    if (n > tuple.size())
        throw ShapeError("maltese: n exceeds tuple length");
    int sum = 0;
    for (size_t k = 1; k <= n; ++k)
        sum += cat.resolve(tuple[tuple.size() - k]).degree;
    return sum - static_cast<int>(n);
}

namespace {

int tuple_degree_sum(const DgCategory& cat, const Tuple& tuple)
{
    int sum = 0;
    for (const auto& label : tuple)
        sum += cat.resolve(label).degree;
    return sum;
}

Tuple first_part(const Tuple& tuple, size_t count)
{
    return Tuple(tuple.begin(), tuple.begin() + static_cast<long>(count));
}

Tuple last_part(const Tuple& tuple, size_t count)
{
    return Tuple(tuple.end() - static_cast<long>(count), tuple.end());
}

/* Multilinear expansion shared by functor and transformation
 * components: expand every argument in its basis and sum the component
 * values with the product coefficients. zero_result supplies the shape
 * when everything vanishes. */
Mor expand_multi(const DgCategory& source, const std::vector<Mor>& args, Mor zero_result,
                 const std::function<Mor(const Tuple&)>& on_basis_tuple)
{
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i].src != args[i + 1].tgt)
            throw NotComposable("argument chain mismatch in multilinear evaluation");

    Mor acc = std::move(zero_result);
    Tuple labels(args.size());
    std::function<void(size_t, const FieldElement&)> walk = [&](size_t slot, const FieldElement& coeff) {
        if (slot == args.size()) {
            acc = add(acc, scale(coeff, on_basis_tuple(labels)));
            return;
        }
        const Mor& arg = args[slot];
        const auto& names = source.hom(arg.src, arg.tgt).space().labels(arg.degree());
        for (size_t i = 0; i < arg.el.coords.size(); ++i) {
            if (arg.el.coords[i].is_zero())
                continue;
            labels[slot] = names[i];
            walk(slot + 1, coeff * arg.el.coords[i]);
        }
    };
    walk(0, FieldElement::one(source.field()));
    return acc;
}

}  // namespace

const std::string& AInfFunctor::on_object(const std::string& x) const
{
    auto it = object_map.find(x);
    if (it == object_map.end())
        throw ShapeError("functor " + name + " has no image for object '" + x + "'");
    return it->second;
}

Mor AInfFunctor::component(const Tuple& tuple) const
{
    const int d = static_cast<int>(tuple.size());
    auto dit = components.find(d);
    if (dit != components.end()) {
        auto it = dit->second.find(tuple);
        if (it != dit->second.end())
            return it->second;
    }
    if (d == 1 && source->is_unit_label(tuple[0]))
        return target->unit_mor(on_object(source->resolve(tuple[0]).src));
    const std::string a = on_object(tuple_source(*source, tuple));
    const std::string b = on_object(tuple_target(*source, tuple));
    return target->zero_mor(a, b, tuple_degree_sum(*source, tuple) + 1 - d);
}

Mor AInfFunctor::component_multi(const std::vector<Mor>& args) const
{
    if (args.empty())
        throw ShapeError("empty argument list");
    int degree_sum = 0;
    for (const auto& m : args)
        degree_sum += m.degree();
    const std::string a = on_object(args.back().src);
    const std::string b = on_object(args.front().tgt);
    Mor zero = target->zero_mor(a, b, degree_sum + 1 - static_cast<int>(args.size()));
    return expand_multi(*source, args, std::move(zero), [this](const Tuple& t) { return component(t); });
}

void AInfFunctor::set_component(const Tuple& tuple, Mor value)
{
    const int d = static_cast<int>(tuple.size());
    components[d][tuple] = std::move(value);
    max_degree = std::max(max_degree, d);
}

AInfFunctor identity_functor(const DgCategory& cat)
{
    AInfFunctor f;
    f.source = &cat;
    f.target = &cat;
    f.name = "id";
    for (const auto& obj : cat.objects())
        f.object_map[obj] = obj;
    for (const auto& [src, tgt] : cat.hom_pairs())
        for (const auto& label : cat.basis_labels(src, tgt))
            if (!cat.is_unit_label(label))
                f.set_component({label}, cat.basis_mor(label));
    f.max_degree = 1;
    return f;
}

std::string FunctorReport::str() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.kind << " at degree " << e.degree << " on (";
        for (size_t i = 0; i < e.tuple.size(); ++i)
            os << (i ? ", " : "") << e.tuple[i];
        os << ")\n";
    }
    return os.str();
}

Mor functor_equation_residual(const AInfFunctor& functor, const Tuple& tuple)
{
    const DgCategory& src = *functor.source;
    const DgCategory& tgt = *functor.target;
    const int d = static_cast<int>(tuple.size());

    Mor lhs = ainf_mu1(tgt, functor.component(tuple));
    for (int j = 1; j <= d - 1; ++j) {
        const Mor left = functor.component(first_part(tuple, static_cast<size_t>(j)));
        const Mor right = functor.component(last_part(tuple, static_cast<size_t>(d - j)));
        lhs = add(lhs, ainf_mu2(tgt, left, right));
    }

    Mor rhs = tgt.zero_mor(lhs.src, lhs.tgt, lhs.degree());
    std::vector<Mor> base;
    base.reserve(tuple.size());
    for (const auto& label : tuple)
        base.push_back(src.basis_mor(label));

    /* f_{n+1} sits at tuple index d-1-n. */
    for (int n = 0; n <= d - 1; ++n) {
        const size_t pos = static_cast<size_t>(d - 1 - n);
        const Mor inner = ainf_mu1(src, base[pos]);
        if (inner.is_zero())
            continue;
        std::vector<Mor> args = base;
        args[pos] = inner;
        rhs = add(rhs, scale(minus_one_pow(src.field(), tuple_maltese(src, tuple, static_cast<size_t>(n))),
                             functor.component_multi(args)));
    }
    for (int n = 0; n <= d - 2; ++n) {
        const size_t pos_lo = static_cast<size_t>(d - 1 - n);      // f_{n+1}
        const size_t pos_hi = static_cast<size_t>(d - 2 - n);      // f_{n+2}
        const Mor inner = ainf_mu2(src, base[pos_hi], base[pos_lo]);
        std::vector<Mor> args;
        args.reserve(tuple.size() - 1);
        for (size_t i = 0; i < base.size(); ++i) {
            if (i == pos_lo)
                continue;
            args.push_back(i == pos_hi ? inner : base[i]);
        }
        rhs = add(rhs, scale(minus_one_pow(src.field(), tuple_maltese(src, tuple, static_cast<size_t>(n))),
                             functor.component_multi(args)));
    }

    return sub(lhs, rhs);
}

FunctorReport check_ainf_functor(const AInfFunctor& functor, int d_max)
{
    if (d_max < 1)
        throw ShapeError("d_max must be >= 1");
    const DgCategory& src = *functor.source;
    const DgCategory& tgt = *functor.target;
    FunctorReport report;

    for (const auto& obj : src.objects())
        if (!tgt.has_object(functor.on_object(obj)))
            throw SourceTargetMismatch("object image '" + functor.on_object(obj) + "' is not a target object");

    for (const auto& [d, by_tuple] : functor.components) {
        for (const auto& [tuple, value] : by_tuple) {
            if (static_cast<int>(tuple.size()) != d)
                throw ShapeError("component tuple length does not match its degree");
            if (!tuple_composable(src, tuple))
                throw NotComposable("stored component on a non-composable tuple");
            const std::string a = functor.on_object(tuple_source(src, tuple));
            const std::string b = functor.on_object(tuple_target(src, tuple));
            if (value.src != a || value.tgt != b)
                throw SourceTargetMismatch("component value lies in hom(" + value.src + ", " + value.tgt
                                           + "), expected hom(" + a + ", " + b + ")");
            const int expected = tuple_degree_sum(src, tuple) + 1 - d;
            if (value.degree() != expected)
                throw DegreeViolation("component of degree " + std::to_string(value.degree()) + ", expected "
                                      + std::to_string(expected));
            if (d > functor.max_degree && !value.is_zero())
                report.entries.push_back({"degree-bound", d, tuple});
            if (tuple_has_unit(src, tuple) && d >= 2 && !value.is_zero())
                report.entries.push_back({"unitality", d, tuple});
        }
    }

    for (const auto& obj : src.objects()) {
        const Tuple unit_tuple{src.unit_label(obj)};
        if (!equal(functor.component(unit_tuple), tgt.unit_mor(functor.on_object(obj))))
            report.entries.push_back({"unitality", 1, unit_tuple});
    }

    for (int d = 1; d <= d_max; ++d)
        for (const auto& tuple : composable_tuples(src, d, true))
            if (!functor_equation_residual(functor, tuple).is_zero())
                report.entries.push_back({"equation", d, tuple});

    return report;
}

namespace {

/* Ordered partitions (s_1, ..., s_r) of d with every part >= 1. */
std::vector<std::vector<int>> compositions(int d)
{
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        for (int s = 1; s <= remaining; ++s) {
            current.push_back(s);
            rec(remaining - s);
            current.pop_back();
        }
    };
    rec(d);
    return result;
}

}  // namespace

AInfFunctor compose_ainf_functors(const AInfFunctor& outer, const AInfFunctor& inner)
{
    if (inner.target != outer.source)
        throw SourceTargetMismatch("functor composition: targets and sources do not line up");
    const DgCategory& src = *inner.source;

    AInfFunctor out;
    out.source = inner.source;
    out.target = outer.target;
    out.name = outer.name + "∘" + inner.name;
    for (const auto& [x, y] : inner.object_map)
        out.object_map[x] = outer.on_object(y);

    const int bound = std::max(1, inner.max_degree * outer.max_degree);
    int top = 1;
    for (int d = 1; d <= bound; ++d) {
        for (const auto& tuple : composable_tuples(src, d, true)) {
            const std::string a = out.object_map.at(tuple_source(src, tuple));
            const std::string b = out.object_map.at(tuple_target(src, tuple));
            Mor value = outer.target->zero_mor(a, b, tuple_degree_sum(src, tuple) + 1 - d);
            for (const auto& parts : compositions(d)) {
                /* parts = (s_1, ..., s_r); s_1 consumes the rightmost
                 * entries, s_r the leftmost. */
                std::vector<Mor> args;
                args.reserve(parts.size());
                size_t consumed = 0;
                for (int s : parts) {
                    const Tuple chunk(tuple.end() - static_cast<long>(consumed + static_cast<size_t>(s)),
                                      tuple.end() - static_cast<long>(consumed));
                    args.push_back(inner.component(chunk));
                    consumed += static_cast<size_t>(s);
                }
                std::reverse(args.begin(), args.end());
                value = add(value, outer.component_multi(args));
            }
            if (!value.is_zero()) {
                out.set_component(tuple, value);
                top = std::max(top, d);
            }
        }
    }
    out.max_degree = top;
    return out;
}

H0Functor::H0Functor(const AInfFunctor& functor, const H0Category& source_h0, const H0Category& target_h0)
    : functor_(&functor), source_h0_(&source_h0), target_h0_(&target_h0)
{
    const DgCategory& src = *functor.source;
    for (const auto& x : src.objects()) {
        for (const auto& y : src.objects()) {
            const auto& classes = source_h0.classes(x, y);
            const std::string fx = functor.on_object(x);
            const std::string fy = functor.on_object(y);
            const size_t out_dim = target_h0.dim(fx, fy);
            Matrix m(src.field(), out_dim, classes.dim());
            for (size_t j = 0; j < classes.dim(); ++j) {
                const Mor rep{x, y, classes.representatives()[j]};
                Vec image;
                try {
                    image = target_h0.class_of(functor.component_multi({rep}));
                }
                catch (const NotCocycle&) {
                    throw NotWellDefined("F^1 of a representative is not a cocycle at hom(" + x + ", " + y + ")");
                }
                /* Independence of the representative choice. */
                const Complex& c = src.hom(x, y);
                Homog w = zero_homog(c.space(), -1);
                for (auto& coord : w.coords)
                    coord = FieldElement::one(src.field());
                const Mor shifted = add(rep, Mor{x, y, c.d(w)});
                if (target_h0.class_of(functor.component_multi({shifted})) != image)
                    throw NotWellDefined("[F^1] depends on the representative at hom(" + x + ", " + y + ")");
                for (size_t i = 0; i < image.size(); ++i)
                    m.at(i, j) = image[i];
            }
            maps_.emplace(std::make_pair(x, y), std::move(m));
        }
    }

    /* Functoriality on the nose in H^0. */
    for (const auto& x : src.objects()) {
        if (on_class(x, x, source_h0.identity_class(x)) != target_h0.identity_class(functor.on_object(x)))
            throw NotWellDefined("H^0 image does not preserve the identity of " + x);
    }
    for (const auto& x : src.objects()) {
        for (const auto& y : src.objects()) {
            for (const auto& z : src.objects()) {
                const size_t gd = source_h0.dim(y, z), fd = source_h0.dim(x, y);
                for (size_t i = 0; i < gd; ++i) {
                    for (size_t j = 0; j < fd; ++j) {
                        const Vec g = unit_vec(src.field(), gd, i);
                        const Vec f = unit_vec(src.field(), fd, j);
                        const Vec lhs = on_class(x, z, source_h0.compose_classes(x, y, z, g, f));
                        const Vec rhs = target_h0.compose_classes(functor.on_object(x), functor.on_object(y),
                                                                  functor.on_object(z), on_class(y, z, g),
                                                                  on_class(x, y, f));
                        if (lhs != rhs)
                            throw NotWellDefined("H^0 image is not functorial on hom(" + x + ", " + y + ", " + z
                                                 + ")");
                    }
                }
            }
        }
    }
}

const std::string& H0Functor::on_object(const std::string& x) const
{
    return functor_->on_object(x);
}

Vec H0Functor::on_class(const std::string& src, const std::string& tgt, const Vec& coords) const
{
    return maps_.at({src, tgt}).apply(coords);
}

Mor PreNatTrans::at(const std::string& x) const
{
    auto it = at_object.find(x);
    if (it != at_object.end())
        return it->second;
    const std::string a = from->on_object(x);
    const std::string b = to->on_object(x);
    return from->target->zero_mor(a, b, degree);
}

Mor PreNatTrans::component(const Tuple& tuple) const
{
    const int d = static_cast<int>(tuple.size());
    auto dit = components.find(d);
    if (dit != components.end()) {
        auto it = dit->second.find(tuple);
        if (it != dit->second.end())
            return it->second;
    }
    const DgCategory& src = *from->source;
    const std::string a = from->on_object(tuple_source(src, tuple));
    const std::string b = to->on_object(tuple_target(src, tuple));
    return from->target->zero_mor(a, b, tuple_degree_sum(src, tuple) + degree - d);
}

Mor PreNatTrans::component_multi(const std::vector<Mor>& args) const
{
    if (args.empty())
        throw ShapeError("empty argument list");
    const DgCategory& src = *from->source;
    int degree_sum = 0;
    for (const auto& m : args)
        degree_sum += m.degree();
    const std::string a = from->on_object(args.back().src);
    const std::string b = to->on_object(args.front().tgt);
    Mor zero = from->target->zero_mor(a, b, degree_sum + degree - static_cast<int>(args.size()));
    return expand_multi(src, args, std::move(zero), [this](const Tuple& t) { return component(t); });
}

void PreNatTrans::set_component(const Tuple& tuple, Mor value)
{
    const int d = static_cast<int>(tuple.size());
    components[d][tuple] = std::move(value);
    max_degree = std::max(max_degree, d);
}

void PreNatTrans::set_at(const std::string& x, Mor value)
{
    at_object[x] = std::move(value);
}

PreNatTrans zero_prenat(const AInfFunctor& from, const AInfFunctor& to, int degree)
{
    if (from.source != to.source || from.target != to.target)
        throw SourceTargetMismatch("pre-natural transformation requires parallel functors");
    PreNatTrans h;
    h.from = &from;
    h.to = &to;
    h.degree = degree;
    return h;
}

void check_prenat(const PreNatTrans& h)
{
    if (h.from == nullptr || h.to == nullptr)
        throw ShapeError("pre-natural transformation without functors");
    if (h.from->source != h.to->source || h.from->target != h.to->target)
        throw SourceTargetMismatch("pre-natural transformation requires parallel functors");
    const DgCategory& src = *h.from->source;
    for (const auto& [x, value] : h.at_object) {
        if (value.src != h.from->on_object(x) || value.tgt != h.to->on_object(x))
            throw SourceTargetMismatch("h^0 at '" + x + "' lies in the wrong hom space");
        if (value.degree() != h.degree)
            throw DegreeViolation("h^0 at '" + x + "' has degree " + std::to_string(value.degree()) + ", expected "
                                  + std::to_string(h.degree));
    }
    for (const auto& [d, by_tuple] : h.components) {
        for (const auto& [tuple, value] : by_tuple) {
            if (static_cast<int>(tuple.size()) != d)
                throw ShapeError("component tuple length does not match its degree");
            if (!tuple_composable(src, tuple))
                throw NotComposable("stored component on a non-composable tuple");
            const std::string a = h.from->on_object(tuple_source(src, tuple));
            const std::string b = h.to->on_object(tuple_target(src, tuple));
            if (value.src != a || value.tgt != b)
                throw SourceTargetMismatch("component value lies in the wrong hom space");
            const int expected = tuple_degree_sum(src, tuple) + h.degree - d;
            if (value.degree() != expected)
                throw DegreeViolation("component of degree " + std::to_string(value.degree()) + ", expected "
                                      + std::to_string(expected));
            if (tuple_has_unit(src, tuple) && !value.is_zero())
                throw DegreeViolation("strict unitality: nonzero component on a tuple containing an identity");
            if (d > h.max_degree && !value.is_zero())
                throw DegreeViolation("nonzero component beyond the declared max degree");
        }
    }
}

Mor nattrans_coboundary_at(const PreNatTrans& h, const std::string& x)
{
    return ainf_mu1(*h.from->target, h.at(x));
}

Mor nattrans_coboundary(const PreNatTrans& h, const Tuple& tuple)
{
    const DgCategory& src = *h.from->source;
    const DgCategory& tgt = *h.from->target;
    const Field& field = src.field();
    const int d = static_cast<int>(tuple.size());
    const int g = h.degree;
    const std::string x0 = tuple_source(src, tuple);
    const std::string xd = tuple_target(src, tuple);

    /* A^d */
    Mor a_term = ainf_mu1(tgt, h.component(tuple));
    a_term = add(a_term, ainf_mu2(tgt, h.to->component(tuple), h.at(x0)));
    a_term = add(a_term, scale(minus_one_pow(field, tuple_maltese(src, tuple, tuple.size()) * (g - 1)),
                               ainf_mu2(tgt, h.at(xd), h.from->component(tuple))));
    for (int j = 1; j <= d - 1; ++j) {
        const Tuple front = first_part(tuple, static_cast<size_t>(j));
        const Tuple back = last_part(tuple, static_cast<size_t>(d - j));
        a_term = add(a_term, ainf_mu2(tgt, h.to->component(front), h.component(back)));
        a_term = add(a_term, scale(minus_one_pow(field, tuple_maltese(src, tuple, static_cast<size_t>(d - j)) * (g - 1)),
                                   ainf_mu2(tgt, h.component(front), h.from->component(back))));
    }

    /* B^d */
    Mor b_term = tgt.zero_mor(a_term.src, a_term.tgt, a_term.degree());
    std::vector<Mor> base;
    base.reserve(tuple.size());
    for (const auto& label : tuple)
        base.push_back(src.basis_mor(label));
    for (int n = 0; n <= d - 1; ++n) {
        const size_t pos = static_cast<size_t>(d - 1 - n);
        const Mor inner = ainf_mu1(src, base[pos]);
        if (inner.is_zero())
            continue;
        std::vector<Mor> args = base;
        args[pos] = inner;
        b_term = add(b_term, scale(minus_one_pow(field, tuple_maltese(src, tuple, static_cast<size_t>(n)) + g - 1),
                                   h.component_multi(args)));
    }
    for (int n = 0; n <= d - 2; ++n) {
        const size_t pos_lo = static_cast<size_t>(d - 1 - n);
        const size_t pos_hi = static_cast<size_t>(d - 2 - n);
        const Mor inner = ainf_mu2(src, base[pos_hi], base[pos_lo]);
        std::vector<Mor> args;
        args.reserve(tuple.size() - 1);
        for (size_t i = 0; i < base.size(); ++i) {
            if (i == pos_lo)
                continue;
            args.push_back(i == pos_hi ? inner : base[i]);
        }
        b_term = add(b_term, scale(minus_one_pow(field, tuple_maltese(src, tuple, static_cast<size_t>(n)) + g - 1),
                                   h.component_multi(args)));
    }

    return sub(a_term, b_term);
}

bool is_closed(const PreNatTrans& h, int d_max)
{
    for (const auto& x : h.from->source->objects())
        if (!nattrans_coboundary_at(h, x).is_zero())
            return false;
    for (int d = 1; d <= d_max; ++d)
        for (const auto& tuple : composable_tuples(*h.from->source, d, true))
            if (!nattrans_coboundary(h, tuple).is_zero())
                return false;
    return true;
}

std::map<std::string, Vec> h0_of_nattrans(const PreNatTrans& h, int d_max, const H0Category& source_h0,
                                          const H0Category& target_h0)
{
    if (h.degree != 0)
        throw NotClosed("transformation has degree " + std::to_string(h.degree) + ", expected 0");
    if (!is_closed(h, d_max))
        throw NotClosed("transformation is not closed");

    const DgCategory& src = *h.from->source;
    std::map<std::string, Vec> classes;
    for (const auto& x : src.objects())
        classes[x] = target_h0.class_of(h.at(x));

    /* Naturality of the induced family in H^0, on class representatives. */
    for (const auto& s : src.objects()) {
        for (const auto& t : src.objects()) {
            const auto& reps = source_h0.classes(s, t).representatives();
            for (const auto& rep : reps) {
                const Mor f{s, t, rep};
                const Mor gf = h.to->component_multi({f});
                const Mor ff = h.from->component_multi({f});
                const Vec lhs = target_h0.compose_classes(h.from->on_object(s), h.to->on_object(s),
                                                          h.to->on_object(t), target_h0.class_of(gf), classes.at(s));
                const Vec rhs = target_h0.compose_classes(h.from->on_object(s), h.from->on_object(t),
                                                          h.to->on_object(t), classes.at(t), target_h0.class_of(ff));
                if (lhs != rhs)
                    throw InternalError("closed transformation with non-natural H^0 family at hom(" + s + ", " + t
                                        + ")");
            }
        }
    }
    return classes;
}

}  // namespace dglift
