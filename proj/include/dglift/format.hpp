#pragma once

#include <memory>
#include <optional>

#include "dglift/lift.hpp"

namespace dglift {

struct TransformDecl {
    std::string name;
    std::string from, to;  // functor names
    std::map<std::string, Vec> classes;
};

/* A parsed problem file: a field, named category presentations, named
 * functors between them, and at most one transformation block. */
struct Problem {
    Field field = Field::rationals();
    std::map<std::string, std::unique_ptr<DgCategory>> categories;
    std::vector<std::string> category_order;
    std::map<std::string, AInfFunctor> functors;
    std::vector<std::string> functor_order;
    std::optional<TransformDecl> transform;

    const DgCategory& category(const std::string& name) const;
    const AInfFunctor& functor(const std::string& name) const;

    /* Binds the transformation block into a validated LiftProblem. */
    LiftProblem lift_problem() const;
};

/* Parses the sectioned text format. Categories are finalized but not
 * validated here; validation is the caller's (eager) first step.
 * field_override replaces the FIELD declaration before any scalar is
 * read. */
Problem parse_problem(const std::string& text, const std::optional<Field>& field_override = std::nullopt);

/* Validates everything a file declares: category axioms, functor
 * equations, and naturality of the transformation block. Returns
 * human-readable findings; empty means valid. */
std::vector<std::string> validate_problem(const Problem& problem);

std::string format_scalar(const FieldElement& x);
std::string format_lincomb(const DgCategory& cat, const Mor& value);

}  // namespace dglift
