#include "support/generators.hpp"

#include <algorithm>
#include <sstream>

#include "dglift/format.hpp"

namespace dglift::testing {

int Rng::uniform(int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(engine_);
}

bool Rng::coin(double p)
{
    std::bernoulli_distribution dist(p);
    return dist(engine_);
}

FieldElement Rng::element(const Field& field)
{
    if (field.kind() == Field::Kind::prime)
        return FieldElement::from_integer(field, uniform(0, static_cast<int>(field.characteristic()) - 1));
    return FieldElement::from_integer(field, uniform(-3, 3));
}

FieldElement Rng::nonzero_element(const Field& field)
{
    while (true) {
        FieldElement x = element(field);
        if (!x.is_zero())
            return x;
    }
}

std::unique_ptr<DgCategory> CategorySpec::build() const
{
    auto cat = std::make_unique<DgCategory>(field);
    for (const auto& obj : objects)
        cat->add_object(obj);
    for (const auto& [src, tgt, label, degree] : basis)
        cat->add_basis(src, tgt, label, degree);
    for (const auto& [obj, label] : units)
        cat->set_unit(obj, label);
    for (const auto& [label, value] : diff)
        cat->set_differential(label, value);
    for (const auto& [pair, value] : compose)
        cat->set_compose(pair.first, pair.second, value);
    cat->finalize();
    return cat;
}

namespace {

/* One summand of a graded map between two abstract complexes: slot r of
 * the source goes to slot c of the target. */
struct SlotMatrix {
    Matrix m;  // dim_target x dim_source

    static SlotMatrix zero(const Field& field, size_t rows, size_t cols) { return {Matrix(field, rows, cols)}; }
};

struct ComplexSpec {
    std::vector<int> degrees;  // degree of each slot
    Matrix d;                  // slot differential, entry (to, from)
};

ComplexSpec random_complex_spec(const Field& field, Rng& rng, int total_dim)
{
    ComplexSpec spec{{}, Matrix(field, 0, 0)};
    for (int i = 0; i < total_dim; ++i)
        spec.degrees.push_back(rng.uniform(-1, 1));
    std::sort(spec.degrees.begin(), spec.degrees.end());
    Matrix d(field, spec.degrees.size(), spec.degrees.size());
    for (size_t to = 0; to < spec.degrees.size(); ++to)
        for (size_t from = 0; from < spec.degrees.size(); ++from)
            if (spec.degrees[to] == spec.degrees[from] + 1 && rng.coin(0.6))
                d.at(to, from) = rng.nonzero_element(field);
    /* A one-step differential squares to zero unless three consecutive
     * degrees interact; zero out the offending entries. */
    while (true) {
        const Matrix dd = d * d;
        bool clean = true;
        for (size_t to = 0; to < spec.degrees.size() && clean; ++to) {
            for (size_t from = 0; from < spec.degrees.size() && clean; ++from) {
                if (dd.at(to, from).is_zero())
                    continue;
                clean = false;
                for (size_t mid = 0; mid < spec.degrees.size(); ++mid)
                    if (!d.at(to, mid).is_zero() && !d.at(mid, from).is_zero())
                        d.at(to, mid) = FieldElement::zero(field);
            }
        }
        if (clean)
            break;
    }
    spec.d = d;
    return spec;
}

std::string unit_label_for(size_t i)
{
    return "one" + std::to_string(i);
}

std::string slot_label(size_t i, size_t j, size_t r, size_t c)
{
    return "f" + std::to_string(i) + "_" + std::to_string(j) + "_r" + std::to_string(r) + "c" + std::to_string(c);
}

/* Express a slot matrix from complex i to complex j in the declared
 * basis of hom(O_i, O_j): matrix units for i != j; for i == j the unit
 * E_{00} is replaced by the identity, so E_{00} = one - sum E_{rr}. */
LinComb express_in_basis(size_t i, size_t j, const ComplexSpec& ci, const ComplexSpec& cj, const Matrix& m)
{
    LinComb out;
    if (i != j) {
        for (size_t r = 0; r < ci.degrees.size(); ++r)
            for (size_t c = 0; c < cj.degrees.size(); ++c)
                if (!m.at(c, r).is_zero())
                    out.emplace_back(m.at(c, r), slot_label(i, j, r, c));
        return out;
    }
    const FieldElement alpha = m.at(0, 0);
    if (!alpha.is_zero())
        out.emplace_back(alpha, unit_label_for(i));
    for (size_t r = 0; r < ci.degrees.size(); ++r) {
        for (size_t c = 0; c < cj.degrees.size(); ++c) {
            if (r == 0 && c == 0)
                continue;
            FieldElement coeff = m.at(c, r);
            if (r == c)
                coeff -= alpha;  // absorbed into the identity
            if (!coeff.is_zero())
                out.emplace_back(coeff, slot_label(i, j, r, c));
        }
    }
    return out;
}

Matrix basis_matrix(const Field& field, size_t i, const ComplexSpec& ci, const ComplexSpec& cj,
                    const std::string& label)
{
    Matrix m(field, cj.degrees.size(), ci.degrees.size());
    if (label == unit_label_for(i)) {
        for (size_t r = 0; r < ci.degrees.size(); ++r)
            m.at(r, r) = FieldElement::one(field);
        return m;
    }
    /* parse rXcY from the label tail */
    const auto rpos = label.rfind('r');
    const auto cpos = label.rfind('c');
    const size_t r = std::stoul(label.substr(rpos + 1, cpos - rpos - 1));
    const size_t c = std::stoul(label.substr(cpos + 1));
    m.at(c, r) = FieldElement::one(field);
    return m;
}

}  // namespace

CategorySpec random_internal_hom_category(const Field& field, Rng& rng, int max_objects, int max_total_dim)
{
    const int object_count = rng.uniform(1, max_objects);
    std::vector<int> dims;
    int budget = max_total_dim;
    for (int i = 0; i < object_count; ++i) {
        const int reserve = object_count - i - 1;
        const int dim = rng.uniform(1, std::max(1, budget - reserve));
        dims.push_back(dim);
        budget -= dim;
    }

    std::vector<ComplexSpec> complexes;
    for (int i = 0; i < object_count; ++i)
        complexes.push_back(random_complex_spec(field, rng, dims[static_cast<size_t>(i)]));

    CategorySpec spec;
    spec.field = field;
    for (int i = 0; i < object_count; ++i)
        spec.objects.push_back("O" + std::to_string(i));

    struct Entry {
        size_t i, j;
        std::string label;
        Matrix m;
        int degree;
    };
    std::vector<Entry> entries;

    for (size_t i = 0; i < complexes.size(); ++i) {
        for (size_t j = 0; j < complexes.size(); ++j) {
            const ComplexSpec& ci = complexes[i];
            const ComplexSpec& cj = complexes[j];
            std::vector<std::string> labels;
            if (i == j)
                labels.push_back(unit_label_for(i));
            for (size_t r = 0; r < ci.degrees.size(); ++r)
                for (size_t c = 0; c < cj.degrees.size(); ++c)
                    if (!(i == j && r == 0 && c == 0))
                        labels.push_back(slot_label(i, j, r, c));
            for (const auto& label : labels) {
                Matrix m = basis_matrix(field, i, ci, cj, label);
                int degree = 0;
                if (label != unit_label_for(i)) {
                    const auto rpos = label.rfind('r');
                    const auto cpos = label.rfind('c');
                    const size_t r = std::stoul(label.substr(rpos + 1, cpos - rpos - 1));
                    const size_t c = std::stoul(label.substr(cpos + 1));
                    degree = cj.degrees[c] - ci.degrees[r];
                }
                spec.basis.emplace_back(spec.objects[i], spec.objects[j], label, degree);
                entries.push_back({i, j, label, m, degree});
            }
        }
    }
    for (size_t i = 0; i < complexes.size(); ++i)
        spec.units[spec.objects[i]] = unit_label_for(i);

    /* Differential: d(f) = d_j f - (-1)^{|f|} f d_i. */
    for (const auto& entry : entries) {
        const ComplexSpec& ci = complexes[entry.i];
        const ComplexSpec& cj = complexes[entry.j];
        Matrix df = cj.d * entry.m;
        const Matrix fd = entry.m * ci.d;
        const FieldElement sgn = minus_one_pow(field, entry.degree);
        for (size_t a = 0; a < df.rows(); ++a)
            for (size_t b = 0; b < df.cols(); ++b)
                df.at(a, b) -= sgn * fd.at(a, b);
        LinComb comb = express_in_basis(entry.i, entry.j, ci, cj, df);
        if (!comb.empty())
            spec.diff[entry.label] = comb;
    }

    /* Structure constants: matrix products, skipping unit pairs (the
     * implicit unit laws already hold for honest identities). */
    for (const auto& g : entries) {
        if (g.label == unit_label_for(g.i))
            continue;
        for (const auto& f : entries) {
            if (f.label == unit_label_for(f.i))
                continue;
            if (f.j != g.i)
                continue;
            const Matrix product = g.m * f.m;
            LinComb comb = express_in_basis(f.i, g.j, complexes[f.i], complexes[g.j], product);
            spec.compose[{g.label, f.label}] = comb;
        }
    }
    return spec;
}

CategorySpec random_linear_category(const Field& field, Rng& rng, int max_objects)
{
    CategorySpec spec;
    spec.field = field;
    const int flavor = rng.uniform(0, 2);  // 0 free path, 1 nilpotent, 2 random table
    const int object_count = flavor == 0 ? rng.uniform(2, 4) : rng.uniform(1, max_objects);
    for (int i = 0; i < object_count; ++i)
        spec.objects.push_back("E" + std::to_string(i));
    for (int i = 0; i < object_count; ++i) {
        const std::string unit = "u" + std::to_string(i);
        spec.basis.emplace_back(spec.objects[static_cast<size_t>(i)], spec.objects[static_cast<size_t>(i)], unit, 0);
        spec.units[spec.objects[static_cast<size_t>(i)]] = unit;
    }

    /* Forward edges of a DAG. */
    std::vector<std::tuple<int, int, std::string>> edges;
    int edge_id = 0;
    for (int i = 0; i < object_count; ++i) {
        for (int j = i + 1; j < object_count; ++j) {
            const int count = rng.uniform(0, flavor == 0 ? 1 : 2);
            for (int k = 0; k < count; ++k) {
                const std::string label = "a" + std::to_string(edge_id++);
                edges.emplace_back(i, j, label);
                spec.basis.emplace_back(spec.objects[static_cast<size_t>(i)], spec.objects[static_cast<size_t>(j)],
                                        label, 0);
            }
        }
    }

    if (flavor == 0) {
        /* Free path category: paths become basis elements, composition
         * is concatenation. */
        struct Path {
            int from, to;
            std::vector<std::string> edges;  // first edge first
            std::string label;
        };
        std::vector<Path> paths;
        for (const auto& [i, j, label] : edges)
            paths.push_back({i, j, {label}, label});
        size_t head = 0;
        while (head < paths.size()) {
            const Path base = paths[head++];
            if (base.edges.size() >= 3)
                continue;
            for (const auto& [i, j, label] : edges) {
                if (i != base.to)
                    continue;
                Path longer{base.from, j, base.edges, base.label + "_" + label};
                longer.edges.push_back(label);
                spec.basis.emplace_back(spec.objects[static_cast<size_t>(longer.from)],
                                        spec.objects[static_cast<size_t>(longer.to)], longer.label, 0);
                paths.push_back(longer);
            }
        }
        /* Concatenation table on all path pairs. */
        for (const auto& g : paths) {
            for (const auto& f : paths) {
                if (f.to != g.from)
                    continue;
                if (f.edges.size() + g.edges.size() > 3)
                    continue;
                std::string label = f.label + "_" + g.label;
                /* the concatenated path's canonical name was built
                 * edge-by-edge above */
                std::vector<std::string> joined = f.edges;
                joined.insert(joined.end(), g.edges.begin(), g.edges.end());
                std::string canonical = joined[0];
                for (size_t k = 1; k < joined.size(); ++k)
                    canonical += "_" + joined[k];
                spec.compose[{g.label, f.label}] = {{FieldElement::one(field), canonical}};
            }
        }
        return spec;
    }

    if (flavor == 1) {
        /* Nilpotent: every composite of edges is zero (no table entries). */
        return spec;
    }

    /* Random table on <= 3 objects: no composable triples of non-units
     * exist, so any bilinear table is associative. */
    for (const auto& [i1, j1, g] : edges) {
        for (const auto& [i2, j2, f] : edges) {
            if (j2 != i1)
                continue;
            LinComb comb;
            for (const auto& [i3, j3, target] : edges) {
                if (i3 != i2 || j3 != j1)
                    continue;
                const FieldElement coeff = rng.element(field);
                if (!coeff.is_zero())
                    comb.emplace_back(coeff, target);
            }
            if (!comb.empty())
                spec.compose[{g, f}] = comb;
        }
    }
    return spec;
}

std::optional<Mutation> mutate_spec(const CategorySpec& spec, Rng& rng, const std::string& kind)
{
    const auto cat = spec.build();

    if (kind == "d-squared") {
        /* d(x) := y with d(y) != 0 forces d(d(x)) != 0. */
        std::vector<std::pair<std::string, std::string>> options;
        for (const auto& [src, tgt, x, deg] : spec.basis) {
            for (const auto& [label, value] : spec.diff) {
                const BasisRef& ref = cat->resolve(label);
                if (ref.src == src && ref.tgt == tgt && ref.degree == deg + 1 && label != x)
                    options.emplace_back(x, label);
            }
        }
        if (options.empty())
            return std::nullopt;
        const auto& [x, y] = rng.pick(options);
        Mutation m{spec, "d-squared", {x}};
        m.spec.diff[x] = {{FieldElement::one(spec.field), y}};
        return m;
    }

    if (kind == "leibniz") {
        /* compose(g, f) += w with d(w) != 0 changes d(g∘f) only. */
        std::vector<std::tuple<std::string, std::string, std::string>> options;
        for (const auto& [src, tgt, gl, gdeg] : spec.basis) {
            if (cat->is_unit_label(gl))
                continue;
            for (const auto& [fsrc, ftgt, fl, fdeg] : spec.basis) {
                if (cat->is_unit_label(fl) || ftgt != src)
                    continue;
                for (const auto& [wl, value] : spec.diff) {
                    const BasisRef& wref = cat->resolve(wl);
                    if (wref.src == fsrc && wref.tgt == tgt && wref.degree == gdeg + fdeg)
                        options.emplace_back(gl, fl, wl);
                }
            }
        }
        if (options.empty())
            return std::nullopt;
        const auto& [gl, fl, wl] = rng.pick(options);
        Mutation m{spec, "leibniz", {gl, fl}};
        auto& comb = m.spec.compose[{gl, fl}];
        comb.emplace_back(FieldElement::one(spec.field), wl);
        return m;
    }

    if (kind == "associativity") {
        /* Only used on zero-differential specs: tweak one table entry
         * and keep the variant only if some triple genuinely breaks. */
        if (!spec.diff.empty())
            return std::nullopt;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [src, tgt, gl, gdeg] : spec.basis) {
            if (cat->is_unit_label(gl))
                continue;
            for (const auto& [fsrc, ftgt, fl, fdeg] : spec.basis) {
                if (cat->is_unit_label(fl) || ftgt != src)
                    continue;
                for (const auto& [wsrc, wtgt, wl, wdeg] : spec.basis) {
                    if (wsrc == fsrc && wtgt == tgt && wdeg == gdeg + fdeg && !cat->is_unit_label(wl))
                        pairs.emplace_back(gl, fl);
                }
            }
        }
        std::shuffle(pairs.begin(), pairs.end(), rng.engine());
        for (const auto& [gl, fl] : pairs) {
            const BasisRef& gref = cat->resolve(gl);
            const BasisRef& fref = cat->resolve(fl);
            std::vector<std::string> candidates;
            for (const auto& [wsrc, wtgt, wl, wdeg] : spec.basis)
                if (wsrc == fref.src && wtgt == gref.tgt && wdeg == gref.degree + fref.degree
                    && !cat->is_unit_label(wl))
                    candidates.push_back(wl);
            if (candidates.empty())
                continue;
            Mutation m{spec, "associativity", {gl, fl}};
            auto& comb = m.spec.compose[{gl, fl}];
            comb.emplace_back(rng.nonzero_element(spec.field), rng.pick(candidates));
            const auto mutated = m.spec.build();
            if (mutated->validate().mentions("associativity"))
                return m;
        }
        return std::nullopt;
    }

    if (kind == "unit") {
        std::vector<std::string> non_units;
        for (const auto& [src, tgt, label, deg] : spec.basis)
            if (!cat->is_unit_label(label))
                non_units.push_back(label);
        if (non_units.empty())
            return std::nullopt;
        const std::string f = rng.pick(non_units);
        const BasisRef& ref = cat->resolve(f);
        const std::string unit = spec.units.at(ref.tgt);
        Mutation m{spec, "unit", {unit, f}};
        m.spec.compose[{unit, f}] = {};  // 1∘f := 0
        return m;
    }

    throw ShapeError("unknown mutation kind: " + kind);
}

Mor random_mor(const DgCategory& cat, const std::string& src, const std::string& tgt, int degree, Rng& rng)
{
    Mor out = cat.zero_mor(src, tgt, degree);
    for (auto& coord : out.el.coords)
        coord = rng.element(cat.field());
    return out;
}

Mor random_cocycle(const DgCategory& cat, const std::string& src, const std::string& tgt, int degree, Rng& rng)
{
    const Matrix d = cat.hom(src, tgt).differential().block(degree);
    const auto basis = kernel_basis(d);
    Mor out = cat.zero_mor(src, tgt, degree);
    for (const auto& v : basis)
        add_scaled(out.el.coords, rng.element(cat.field()), v);
    return out;
}

Mor random_coboundary(const DgCategory& cat, const std::string& src, const std::string& tgt, int degree, Rng& rng)
{
    const Mor below = random_mor(cat, src, tgt, degree - 1, rng);
    return cat.differential(below);
}

std::optional<AInfFunctor> random_ainf_functor(const DgCategory& linear_source, const DgCategory& target, Rng& rng)
{
    AInfFunctor f;
    f.source = &linear_source;
    f.target = &target;
    f.name = "R";
    for (const auto& obj : linear_source.objects())
        f.object_map[obj] = target.objects()[static_cast<size_t>(
            rng.uniform(0, static_cast<int>(target.objects().size()) - 1))];

    int m = 0;
    for (const auto& [s, t] : target.hom_pairs())
        m = std::min(m, target.hom(s, t).space().min_degree());
    const int top_degree = std::max(1, 1 - m);

    /* Stage 1: coboundaries have class zero, which keeps the homotopy
     * functoriality constraints satisfiable for every composition table. */
    for (const auto& tuple : composable_tuples(linear_source, 1, true)) {
        const BasisRef& ref = linear_source.resolve(tuple[0]);
        Mor value = random_coboundary(target, f.on_object(ref.src), f.on_object(ref.tgt), 0, rng);
        if (!value.is_zero())
            f.set_component(tuple, value);
    }

    /* Higher stages: solve d(F^d) = +-(residual with F^d = 0), then add
     * a random cocycle for genericity. */
    for (int d = 2; d <= top_degree; ++d) {
        for (const auto& tuple : composable_tuples(linear_source, d, true)) {
            const Mor residual = functor_equation_residual(f, tuple);
            if (residual.is_zero())
                continue;
            const int component_degree = 1 - d;  // linear source
            const Mor y = scale(minus_one_pow(linear_source.field(), tuple_maltese(linear_source, tuple,
                                                                                   tuple.size())),
                                residual);
            Homog solution;
            try {
                solution = solve_coboundary(target.hom(y.src, y.tgt), y.el);
            }
            catch (const NotCoboundary&) {
                return std::nullopt;
            }
            Mor value{y.src, y.tgt, solution};
            if (rng.coin())
                value = add(value, random_cocycle(target, y.src, y.tgt, component_degree, rng));
            if (!value.is_zero())
                f.set_component(tuple, value);
        }
    }
    f.max_degree = std::max(1, top_degree);

    /* Stages beyond the support must hold with zero components. */
    for (int d = top_degree + 1; d <= 2 - m; ++d)
        for (const auto& tuple : composable_tuples(linear_source, d, true))
            if (!functor_equation_residual(f, tuple).is_zero())
                return std::nullopt;

    return f;
}

AInfFunctor random_valid_functor(const DgCategory& linear_source, const DgCategory& target, Rng& rng, int tries)
{
    for (int i = 0; i < tries; ++i) {
        auto f = random_ainf_functor(linear_source, target, rng);
        if (!f)
            continue;
        int m = 0;
        for (const auto& [s, t] : target.hom_pairs())
            m = std::min(m, target.hom(s, t).space().min_degree());
        if (check_ainf_functor(*f, std::max(2, 2 - m)).ok())
            return *f;
    }
    throw Error("random functor generation failed; widen the retry budget or shrink the instance");
}

PreNatTrans random_prenat(const AInfFunctor& from, const AInfFunctor& to, int degree, int max_len, Rng& rng)
{
    PreNatTrans h = zero_prenat(from, to, degree);
    const DgCategory& src = *from.source;
    const DgCategory& tgt = *from.target;
    for (const auto& x : src.objects()) {
        Mor value = random_mor(tgt, from.on_object(x), to.on_object(x), degree, rng);
        if (!value.is_zero())
            h.set_at(x, value);
    }
    for (int d = 1; d <= max_len; ++d) {
        for (const auto& tuple : composable_tuples(src, d, true)) {
            const std::string a = from.on_object(tuple_source(src, tuple));
            const std::string b = to.on_object(tuple_target(src, tuple));
            int degree_sum = 0;
            for (const auto& label : tuple)
                degree_sum += src.resolve(label).degree;
            Mor value = random_mor(tgt, a, b, degree_sum + degree - d, rng);
            if (!value.is_zero())
                h.set_component(tuple, value);
        }
    }
    h.max_degree = max_len;
    return h;
}

std::map<std::string, Vec> random_natural_classes(const AInfFunctor& from, const AInfFunctor& to, Rng& rng)
{
    const DgCategory& src = *from.source;
    const DgCategory& tgt = *from.target;
    const Field& field = src.field();
    const H0Category h0(tgt);

    std::vector<std::string> objects = src.objects();
    std::vector<size_t> offsets;
    size_t total = 0;
    for (const auto& e : objects) {
        offsets.push_back(total);
        total += h0.dim(from.on_object(e), to.on_object(e));
    }

    /* Rows: one block per basis arrow, [G^1 f]∘phi_src - phi_tgt∘[F^1 f]. */
    std::vector<Vec> rows;
    for (const auto& tuple : composable_tuples(src, 1, true)) {
        const BasisRef& ref = src.resolve(tuple[0]);
        const Mor f = src.basis_mor(tuple[0]);
        const Vec gf = h0.class_of(to.component_multi({f}));
        const Vec ff = h0.class_of(from.component_multi({f}));
        const size_t src_idx = static_cast<size_t>(src.object_index(ref.src));
        const size_t tgt_idx = static_cast<size_t>(src.object_index(ref.tgt));
        const size_t out_dim = h0.dim(from.on_object(ref.src), to.on_object(ref.tgt));
        std::vector<Vec> block(out_dim, zero_vec(field, total));
        const size_t src_dim = h0.dim(from.on_object(ref.src), to.on_object(ref.src));
        for (size_t i = 0; i < src_dim; ++i) {
            const Vec image = h0.compose_classes(from.on_object(ref.src), to.on_object(ref.src),
                                                 to.on_object(ref.tgt), gf, unit_vec(field, src_dim, i));
            for (size_t r = 0; r < out_dim; ++r)
                block[r][offsets[src_idx] + i] += image[r];
        }
        const size_t tgt_dim = h0.dim(from.on_object(ref.tgt), to.on_object(ref.tgt));
        for (size_t i = 0; i < tgt_dim; ++i) {
            const Vec image = h0.compose_classes(from.on_object(ref.src), from.on_object(ref.tgt),
                                                 to.on_object(ref.tgt), unit_vec(field, tgt_dim, i), ff);
            for (size_t r = 0; r < out_dim; ++r)
                block[r][offsets[tgt_idx] + i] -= image[r];
        }
        for (auto& row : block)
            rows.push_back(std::move(row));
    }

    Matrix system(field, rows.size(), total);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < total; ++c)
            system.at(r, c) = rows[r][c];
    const auto kernel = kernel_basis(system);
    Vec solution = zero_vec(field, total);
    for (const auto& v : kernel)
        add_scaled(solution, rng.element(field), v);

    std::map<std::string, Vec> classes;
    for (size_t k = 0; k < objects.size(); ++k) {
        const size_t dim = h0.dim(from.on_object(objects[k]), to.on_object(objects[k]));
        Vec coords = zero_vec(field, dim);
        for (size_t i = 0; i < dim; ++i)
            coords[i] = solution[offsets[k] + i];
        classes[objects[k]] = std::move(coords);
    }
    return classes;
}

namespace {

std::string lincomb_text(const LinComb& comb)
{
    if (comb.empty())
        return "0";
    std::string out;
    for (const auto& [coeff, label] : comb) {
        if (!out.empty())
            out += " + ";
        out += coeff.str() + " " + label;
    }
    return out;
}

void write_category(std::ostringstream& os, const CategorySpec& spec, const std::string& name)
{
    os << "CATEGORY " << name << "\n";
    if (!spec.objects.empty()) {
        os << "OBJECTS";
        for (const auto& obj : spec.objects)
            os << " " << obj;
        os << "\n";
    }
    std::pair<std::string, std::string> current{"", ""};
    for (const auto& [src, tgt, label, degree] : spec.basis) {
        if (std::pair<std::string, std::string>{src, tgt} != current) {
            current = {src, tgt};
            os << "HOM " << src << " " << tgt << "\n";
        }
        os << "basis " << label << " degree " << degree << "\n";
    }
    for (const auto& [obj, label] : spec.units)
        os << "UNIT " << obj << " " << label << "\n";
    if (!spec.diff.empty()) {
        os << "DIFF\n";
        for (const auto& [label, value] : spec.diff)
            os << "d " << label << " = " << lincomb_text(value) << "\n";
    }
    if (!spec.compose.empty()) {
        os << "COMPOSE\n";
        for (const auto& [pair, value] : spec.compose)
            os << pair.first << " . " << pair.second << " = " << lincomb_text(value) << "\n";
    }
}

void write_functor(std::ostringstream& os, const AInfFunctor& f, const std::string& source_name,
                   const std::string& target_name)
{
    os << "FUNCTOR " << f.name << " : " << source_name << " -> " << target_name << "\n";
    for (const auto& [x, y] : f.object_map)
        os << "obj " << x << " -> " << y << "\n";
    for (const auto& [d, by_tuple] : f.components) {
        for (const auto& [tuple, value] : by_tuple) {
            if (value.is_zero())
                continue;
            os << "comp " << d << " (";
            for (size_t i = 0; i < tuple.size(); ++i)
                os << (i ? "," : "") << tuple[i];
            os << ") = " << format_lincomb(*f.target, value) << "\n";
        }
    }
}

}  // namespace

std::string serialize_problem(const CategorySpec& source_spec, const std::string& source_name,
                              const CategorySpec& target_spec, const std::string& target_name,
                              const AInfFunctor& from, const AInfFunctor& to,
                              const std::map<std::string, Vec>& classes)
{
    std::ostringstream os;
    os << "FIELD " << source_spec.field.name() << "\n\n";
    write_category(os, source_spec, source_name);
    os << "\n";
    write_category(os, target_spec, target_name);
    os << "\n";
    write_functor(os, from, source_name, target_name);
    os << "\n";
    write_functor(os, to, source_name, target_name);
    os << "\nTRANSFORM phi : " << from.name << " -> " << to.name << "\n";
    for (const auto& [obj, coords] : classes) {
        if (coords.empty())
            continue;
        os << "at " << obj << " =";
        for (const auto& c : coords)
            os << " " << c.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace dglift::testing
