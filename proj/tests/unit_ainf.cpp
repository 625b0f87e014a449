#include <doctest.h>

#include "dglift/format.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dglift;
using namespace dglift::testing;

namespace dglift::testing {
std::string read_fixture(const std::string& name);
}

namespace {

Problem parallel_pair()
{
    return parse_problem(read_fixture("parallel_pair.prob"));
}

/* Materialize mu^1(h) as a pre-natural transformation of degree g+1 on
 * all unit-free tuples up to max_len. */
PreNatTrans coboundary_prenat(const PreNatTrans& h, int max_len)
{
    PreNatTrans k = zero_prenat(*h.from, *h.to, h.degree + 1);
    for (const auto& x : h.from->source->objects()) {
        const Mor value = nattrans_coboundary_at(h, x);
        if (!value.is_zero())
            k.set_at(x, value);
    }
    for (int d = 1; d <= max_len; ++d)
        for (const auto& tuple : composable_tuples(*h.from->source, d, true)) {
            const Mor value = nattrans_coboundary(h, tuple);
            if (!value.is_zero())
                k.set_component(tuple, value);
        }
    k.max_degree = max_len;
    return k;
}

}  // namespace

TEST_CASE("fixture functors pass the checker; degree violations throw")
{
    const Problem problem = parallel_pair();
    const AInfFunctor& f = problem.functor("F");
    CHECK(check_ainf_functor(f, 3).ok());
    CHECK(check_ainf_functor(problem.functor("G"), 3).ok());

    SUBCASE("wrong-degree stored component is a DegreeViolation")
    {
        AInfFunctor broken = f;
        broken.set_component({"a"}, broken.target->basis_mor("t"));
        CHECK_THROWS_AS(check_ainf_functor(broken, 2), DegreeViolation);
    }
    SUBCASE("rescaling F^1 keeps the d = 1 equation (closedness is all it asks)")
    {
        AInfFunctor rescaled = f;
        rescaled.set_component({"a"}, add(rescaled.target->basis_mor("s0"), rescaled.target->basis_mor("s0")));
        CHECK(check_ainf_functor(rescaled, 2).ok());
    }
    SUBCASE("identity functor passes and composes neutrally")
    {
        const DgCategory& b = problem.category("B");
        const AInfFunctor id = identity_functor(b);
        CHECK(check_ainf_functor(id, 3).ok());
    }
}

TEST_CASE("functor composition")
{
    const Problem problem = parallel_pair();
    const AInfFunctor& f = problem.functor("F");
    const DgCategory& b = problem.category("B");
    const AInfFunctor id = identity_functor(b);

    SUBCASE("identity is neutral for composition, componentwise")
    {
        const AInfFunctor composed = compose_ainf_functors(id, f);
        for (const auto& tuple : composable_tuples(*f.source, 1, true))
            CHECK(equal(composed.component(tuple), f.component(tuple)));
        CHECK(composed.on_object("P") == f.on_object("P"));
        CHECK(check_ainf_functor(composed, 3).ok());
    }

    SUBCASE("strict outer functor collapses the composition formula")
    {
        /* G strict: (G∘F)^d = G^1(F^d(...)); with G = id this is F^d. */
        const AInfFunctor composed = compose_ainf_functors(id, f);
        for (int d = 1; d <= 2; ++d)
            for (const auto& tuple : composable_tuples(*f.source, d, true))
                CHECK(equal(composed.component(tuple), f.component(tuple)));
    }
}

TEST_CASE("composition with higher components matches the partition formula at d = 2")
{
    /* Build a three-object chain source so length-2 tuples exist, then
     * compare (G∘F)^2 against G^1(F^2) + G^2(F^1, F^1) directly. */
    Rng rng(2024);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const CategorySpec espec = random_linear_category(Field::prime(3), rng);
        const auto e = espec.build();
        bool has_pairs = !composable_tuples(*e, 2, true).empty();
        if (!has_pairs)
            continue;
        const CategorySpec bspec = random_internal_hom_category(Field::prime(3), rng);
        const auto b = bspec.build();
        REQUIRE(b->validate().ok());
        AInfFunctor inner;
        try {
            inner = random_valid_functor(*e, *b, rng, 30);
        }
        catch (const Error&) {
            continue;
        }
        const AInfFunctor outer = identity_functor(*b);
        const AInfFunctor composed = compose_ainf_functors(outer, inner);
        for (const auto& tuple : composable_tuples(*e, 2, true)) {
            const Tuple left{tuple[0]};
            const Tuple right{tuple[1]};
            const Mor expected = add(outer.component_multi({inner.component(tuple)}),
                                     outer.component_multi({inner.component(left), inner.component(right)}));
            CHECK(equal(composed.component(tuple), expected));
        }
        CHECK(check_ainf_functor(composed, 3).ok());
        return;
    }
    FAIL("no usable random instance found");
}

TEST_CASE("composition through an outer functor with higher components")
{
    /* E and E2 are chain path categories 0 -> 1 -> 2; F relabels E into
     * E2 strictly; G: E2 -> B is random with a nonzero second component
     * when the retry finds one. */
    auto make_chain = [](const Field& field, const std::string& prefix) {
        CategorySpec spec;
        spec.field = field;
        for (int i = 0; i < 3; ++i)
            spec.objects.push_back(prefix + std::to_string(i));
        for (int i = 0; i < 3; ++i) {
            const std::string unit = prefix + "u" + std::to_string(i);
            spec.basis.emplace_back(spec.objects[static_cast<size_t>(i)], spec.objects[static_cast<size_t>(i)],
                                    unit, 0);
            spec.units[spec.objects[static_cast<size_t>(i)]] = unit;
        }
        spec.basis.emplace_back(spec.objects[0], spec.objects[1], prefix + "e01", 0);
        spec.basis.emplace_back(spec.objects[1], spec.objects[2], prefix + "e12", 0);
        spec.basis.emplace_back(spec.objects[0], spec.objects[2], prefix + "e02", 0);
        spec.compose[{prefix + "e12", prefix + "e01"}] = {{FieldElement::one(field), prefix + "e02"}};
        return spec;
    };

    const Field f3 = Field::prime(3);
    const CategorySpec espec = make_chain(f3, "x");
    const CategorySpec e2spec = make_chain(f3, "y");
    const auto e = espec.build();
    const auto e2 = e2spec.build();
    REQUIRE(e->validate().ok());

    AInfFunctor relabel;
    relabel.source = e.get();
    relabel.target = e2.get();
    relabel.name = "S";
    for (int i = 0; i < 3; ++i)
        relabel.object_map["x" + std::to_string(i)] = "y" + std::to_string(i);
    for (const auto& edge : {"e01", "e12", "e02"})
        relabel.set_component({std::string("x") + edge}, e2->basis_mor(std::string("y") + edge));
    REQUIRE(check_ainf_functor(relabel, 3).ok());

    Rng rng(314);
    for (int attempt = 0; attempt < 60; ++attempt) {
        const CategorySpec bspec = random_internal_hom_category(f3, rng);
        const auto b = bspec.build();
        AInfFunctor outer;
        try {
            outer = random_valid_functor(*e2, *b, rng, 20);
        }
        catch (const Error&) {
            continue;
        }
        const Tuple pair{"ye12", "ye01"};
        if (outer.component(pair).is_zero())
            continue;  // retry until the second component is visible

        const AInfFunctor composed = compose_ainf_functors(outer, relabel);
        CHECK(check_ainf_functor(composed, 4).ok());

        /* (G∘F)^2(f2, f1) = G^1(F^2(...)) + G^2(F^1 f2, F^1 f1), and
         * F^2 = 0 for the strict relabeling. */
        const Mor expected = add(outer.component_multi({relabel.component({"xe12", "xe01"})}),
                                 outer.component_multi({relabel.component({"xe12"}), relabel.component({"xe01"})}));
        CHECK(equal(composed.component({"xe12", "xe01"}), expected));
        CHECK_FALSE(outer.component_multi({relabel.component({"xe12"}), relabel.component({"xe01"})}).is_zero());

        /* H^0 functoriality of the composition. */
        const H0Category h0e(*e), h0e2(*e2), h0b(*b);
        const H0Functor h_outer(outer, h0e2, h0b);
        const H0Functor h_inner(relabel, h0e, h0e2);
        const H0Functor h_comp(composed, h0e, h0b);
        const Vec cls = h0e.class_of(e->basis_mor("xe02"));
        CHECK(h_comp.on_class("x0", "x2", cls)
              == h_outer.on_class("y0", "y2", h_inner.on_class("x0", "x2", cls)));
        return;
    }
    FAIL("no outer functor with a nonzero second component found");
}

TEST_CASE("H0 image of the fixture functors")
{
    const Problem problem = parallel_pair();
    const DgCategory& e = problem.category("E");
    const DgCategory& b = problem.category("B");
    const H0Category h0e(e), h0b(b);

    const H0Functor hf(problem.functor("F"), h0e, h0b);
    const H0Functor hg(problem.functor("G"), h0e, h0b);
    const Vec a_class = h0e.class_of(e.basis_mor("a"));
    CHECK(hf.on_class("P", "Q", a_class) == hg.on_class("P", "Q", a_class));
    CHECK(hf.on_class("P", "Q", a_class) == h0b.class_of(b.basis_mor("s0")));

    SUBCASE("identity functor induces the identity")
    {
        const AInfFunctor id = identity_functor(b);
        const H0Functor hid(id, h0b, h0b);
        const Vec c = h0b.class_of(b.basis_mor("s1"));
        CHECK(hid.on_class("X", "Y", c) == c);
    }
}

TEST_CASE("coboundary of a pre-natural transformation")
{
    const Problem problem = parallel_pair();
    const DgCategory& b = problem.category("B");
    const AInfFunctor& f = problem.functor("F");
    const AInfFunctor& g = problem.functor("G");

    SUBCASE("zero transformation has zero coboundary")
    {
        const PreNatTrans h = zero_prenat(f, g, 0);
        CHECK(nattrans_coboundary_at(h, "P").is_zero());
        CHECK(nattrans_coboundary(h, {"a"}).is_zero());
    }

    SUBCASE("for h with only h^0, mu^1(h)^1 is the naturality defect")
    {
        PreNatTrans h = zero_prenat(f, g, 0);
        h.set_at("P", b.unit_mor("X"));
        h.set_at("Q", b.unit_mor("Y"));
        const Mor defect = nattrans_coboundary(h, {"a"});
        /* mu^2(G^1 a, h_P) + sign * mu^2(h_Q, F^1 a) = s1 - s0 */
        CHECK(equal(defect, sub(b.basis_mor("s1"), b.basis_mor("s0"))));
    }

    SUBCASE("the lifted transformation is closed and induces the identity classes")
    {
        PreNatTrans h = zero_prenat(f, g, 0);
        h.set_at("P", b.unit_mor("X"));
        h.set_at("Q", b.unit_mor("Y"));
        h.set_component({"a"}, negate(b.basis_mor("t")));
        h.max_degree = 1;
        CHECK(is_closed(h, 3));

        const H0Category h0e(problem.category("E")), h0b(b);
        const auto classes = h0_of_nattrans(h, 3, h0e, h0b);
        CHECK(classes.at("P") == h0b.identity_class("X"));
        CHECK(classes.at("Q") == h0b.identity_class("Y"));

        /* flipping the sign of h^1 breaks closedness */
        PreNatTrans flipped = h;
        flipped.set_component({"a"}, b.basis_mor("t"));
        CHECK_FALSE(is_closed(flipped, 3));
        CHECK_THROWS_AS(h0_of_nattrans(flipped, 3, h0e, h0b), NotClosed);
    }

    SUBCASE("coboundaries induce zero classes")
    {
        Rng rng(5);
        const PreNatTrans k = random_prenat(f, g, -1, 1, rng);
        const PreNatTrans h = coboundary_prenat(k, 3);
        REQUIRE(h.degree == 0);
        if (is_closed(h, 3)) {
            const H0Category h0e(problem.category("E")), h0b(b);
            const auto classes = h0_of_nattrans(h, 3, h0e, h0b);
            for (const auto& [obj, cls] : classes)
                CHECK(is_zero_vec(cls));
        }
    }
}

TEST_CASE("mu^1 of pre-natural transformations squares to zero (randomized, F3)")
{
    Rng rng(99);
    int done = 0;
    for (int attempt = 0; attempt < 40 && done < 6; ++attempt) {
        const CategorySpec espec = random_linear_category(Field::prime(3), rng);
        const auto e = espec.build();
        const CategorySpec bspec = random_internal_hom_category(Field::prime(3), rng);
        const auto b = bspec.build();
        REQUIRE(e->validate().ok());
        REQUIRE(b->validate().ok());
        AInfFunctor f, g;
        try {
            f = random_valid_functor(*e, *b, rng, 30);
            g = random_valid_functor(*e, *b, rng, 30);
        }
        catch (const Error&) {
            continue;
        }
        for (const int degree : {0, -1, 1}) {
            const PreNatTrans h = random_prenat(f, g, degree, 3, rng);
            const PreNatTrans k = coboundary_prenat(h, 4);
            for (const auto& x : e->objects())
                CHECK(nattrans_coboundary_at(k, x).is_zero());
            for (int d = 1; d <= 3; ++d)
                for (const auto& tuple : composable_tuples(*e, d, true))
                    CHECK_MESSAGE(nattrans_coboundary(k, tuple).is_zero(),
                                  "mu^1∘mu^1 != 0 at degree ", degree, " length ", d);
        }
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("strict unitality is preserved by the coboundary (unit tuples evaluate to zero)")
{
    Rng rng(123);
    const CategorySpec espec = random_linear_category(Field::prime(3), rng);
    const auto e = espec.build();
    const CategorySpec bspec = random_internal_hom_category(Field::prime(3), rng);
    const auto b = bspec.build();
    AInfFunctor f = random_valid_functor(*e, *b, rng, 60);
    AInfFunctor g = random_valid_functor(*e, *b, rng, 60);
    const PreNatTrans h = random_prenat(f, g, 0, 2, rng);
    for (int d = 1; d <= 2; ++d) {
        for (const auto& tuple : composable_tuples(*e, d, false)) {
            if (!tuple_has_unit(*e, tuple))
                continue;
            CHECK(nattrans_coboundary(h, tuple).is_zero());
        }
    }
}
