#pragma once

#include "dglift/dgcat.hpp"

namespace dglift {

/* Tuples of basis morphisms are kept in the argument order of the
 * multilinear components: tuple[0] is the last arrow of the chain and
 * tuple[d-1] the first, so tuple[d-1]: X_0 -> X_1, ..., tuple[0]:
 * X_{d-1} -> X_d. */
using Tuple = std::vector<std::string>;

/* Composable chains of length d. Enumeration order: source object
 * index, then the first arrow's label, then the second, and so on
 * (string order on labels); the first arrow is the most significant
 * key. */
std::vector<Tuple> composable_tuples(const DgCategory& cat, int length, bool skip_units);

std::string tuple_source(const DgCategory& cat, const Tuple& tuple);
std::string tuple_target(const DgCategory& cat, const Tuple& tuple);
bool tuple_composable(const DgCategory& cat, const Tuple& tuple);
bool tuple_has_unit(const DgCategory& cat, const Tuple& tuple);
/* Sign exponent of the first n arguments of the chain. */
int tuple_maltese(const DgCategory& cat, const Tuple& tuple, size_t n);

/* Strictly unital A-infinity functor between dg-category presentations,
 * given by an object map and sparse multilinear components on basis
 * tuples. Components on tuples containing identities follow the strict
 * unitality rules unless an explicit (invalid) entry overrides them,
 * which the checker then reports. */
struct AInfFunctor {
    const DgCategory* source = nullptr;
    const DgCategory* target = nullptr;
    std::string name;
    std::map<std::string, std::string> object_map;
    std::map<int, std::map<Tuple, Mor>> components;
    int max_degree = 1;

    const std::string& on_object(const std::string& x) const;
    /* F^d on a basis tuple (degree d = tuple length). */
    Mor component(const Tuple& tuple) const;
    /* Multilinear extension to general homogeneous arguments. */
    Mor component_multi(const std::vector<Mor>& args) const;
    void set_component(const Tuple& tuple, Mor value);
};

AInfFunctor identity_functor(const DgCategory& cat);

struct FunctorReportEntry {
    std::string kind;  // "equation" | "unitality" | "degree-bound"
    int degree;
    Tuple tuple;
};

struct FunctorReport {
    std::vector<FunctorReportEntry> entries;
    bool ok() const { return entries.empty(); }
    std::string str() const;
};

/* Residuals of the defining equations on all unit-free composable basis
 * tuples of length <= d_max, plus the strict unitality and max_degree
 * checks. Throws DegreeViolation / SourceTargetMismatch / NotComposable
 * on structurally malformed stored components. */
FunctorReport check_ainf_functor(const AInfFunctor& functor, int d_max);

/* The defining-equation residual on one tuple (zero iff the equation
 * holds there). */
Mor functor_equation_residual(const AInfFunctor& functor, const Tuple& tuple);

AInfFunctor compose_ainf_functors(const AInfFunctor& outer, const AInfFunctor& inner);

/* Image of an A-infinity functor on the homotopy categories: the class
 * of F^1 applied to canonical representatives, verified well defined
 * and functorial. */
class H0Functor {
public:
    H0Functor(const AInfFunctor& functor, const H0Category& source_h0, const H0Category& target_h0);

    const std::string& on_object(const std::string& x) const;
    Vec on_class(const std::string& src, const std::string& tgt, const Vec& coords) const;

private:
    const AInfFunctor* functor_;
    const H0Category* source_h0_;
    const H0Category* target_h0_;
    std::map<std::pair<std::string, std::string>, Matrix> maps_;
};

/* Degree-g pre-natural transformation between A-infinity functors with
 * the same source and target. */
struct PreNatTrans {
    const AInfFunctor* from = nullptr;  // F
    const AInfFunctor* to = nullptr;    // G
    int degree = 0;
    std::map<std::string, Mor> at_object;          // h^0
    std::map<int, std::map<Tuple, Mor>> components;  // h^d, d >= 1
    int max_degree = 0;

    Mor at(const std::string& x) const;
    Mor component(const Tuple& tuple) const;
    Mor component_multi(const std::vector<Mor>& args) const;
    void set_component(const Tuple& tuple, Mor value);
    void set_at(const std::string& x, Mor value);
};

PreNatTrans zero_prenat(const AInfFunctor& from, const AInfFunctor& to, int degree);

/* Shape, degree bookkeeping, and strict unitality of the stored data;
 * throws on violations. */
void check_prenat(const PreNatTrans& h);

/* mu^1(h)^0 at an object. */
Mor nattrans_coboundary_at(const PreNatTrans& h, const std::string& x);
/* mu^1(h)^d on a basis tuple of length d >= 1. */
Mor nattrans_coboundary(const PreNatTrans& h, const Tuple& tuple);

bool is_closed(const PreNatTrans& h, int d_max);

/* Per-object classes [h^0_X] of a closed degree-0 transformation; the
 * induced family is verified natural on the homotopy categories. */
std::map<std::string, Vec> h0_of_nattrans(const PreNatTrans& h, int d_max, const H0Category& source_h0,
                                          const H0Category& target_h0);

}  // namespace dglift
