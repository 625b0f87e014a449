#pragma once

#include <memory>

#include "dglift/dgmor.hpp"

namespace dglift {

struct VanishingEntry {
    std::string e, ep;  // source objects E, E'
    int degree;
    size_t dim;
};

/* Negative-degree cohomology of the hom complexes between the functor
 * images, plus the truncation data derived from the degree support. */
struct VanishingReport {
    std::vector<VanishingEntry> entries;
    int min_degree = 0;  // m: minimal degree across the relevant hom complexes
    int d_max = 2;       // max(2, 1 - m)

    bool ok() const { return entries.empty(); }
    std::string str() const;
};

VanishingReport check_negative_vanishing(const AInfFunctor& from, const AInfFunctor& to);

/* A lifting problem: a linear source category, a dg target, two valid
 * functors, and a natural transformation between their homotopy images
 * given by class coordinates per object. Construction validates all of
 * it (naturality failures raise NaturalityFails). */
class LiftProblem {
public:
    LiftProblem(const DgCategory& linear_source, const DgCategory& target, const AInfFunctor& from,
                const AInfFunctor& to, std::map<std::string, Vec> classes);

    const DgCategory& source() const { return *source_; }
    const DgCategory& target() const { return *target_; }
    const AInfFunctor& from() const { return *from_; }
    const AInfFunctor& to() const { return *to_; }
    const std::map<std::string, Vec>& classes() const { return classes_; }

    const H0Category& source_h0() const { return *source_h0_; }
    const H0Category& target_h0() const { return *target_h0_; }

private:
    const DgCategory* source_;
    const DgCategory* target_;
    const AInfFunctor* from_;
    const AInfFunctor* to_;
    std::map<std::string, Vec> classes_;
    std::shared_ptr<H0Category> source_h0_;
    std::shared_ptr<H0Category> target_h0_;
};

struct LiftCertificate {
    PreNatTrans h;
    int d_max = 2;
    std::vector<std::string> transcript;
    bool iso_checked = false;
    bool iso_flag = false;
    std::map<std::string, Vec> inverse_classes;  // present for invertible components
};

/* The obstruction at stage d = tuple length: the expression whose
 * mu^1-primitive the next component must be. Verifies the result is
 * mu^1-closed and that its u/v slots are mu^1 of the functor components
 * before returning. With check_partial set, first re-checks that the
 * packed data satisfies its equations below d. */
MorArrow obstruction_cocycle(const PackedFunctor& phi, const Tuple& tuple, bool check_partial = true);

/* Degree-by-degree construction of a closed degree-0 transformation
 * lifting the given family of classes, with a full transcript; the
 * result is re-verified from scratch before it is returned. */
LiftCertificate lift_natural_transformation(const LiftProblem& problem);

/* Decides componentwise invertibility of [h^0] and records the inverse
 * classes on the certificate. */
void certify_isomorphism(const LiftProblem& problem, LiftCertificate& cert);

/* Full independent re-verification of a candidate transformation
 * against a problem: well-formedness, strict unitality, closedness, and
 * the induced classes. Returns human-readable failures; empty means
 * verified. */
std::vector<std::string> verify_lift(const LiftProblem& problem, const PreNatTrans& h, int d_max);

}  // namespace dglift
