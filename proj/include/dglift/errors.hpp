#pragma once

#include <stdexcept>
#include <string>

namespace dglift {

/* Error taxonomy. The CLI maps these onto exit codes:
 * ParseError -> 2, InternalError -> 3, everything else (input data
 * violating a hypothesis or an axiom) -> 1. */

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_)
    {
    }
};

struct ShapeError : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct DegreeViolation : Error {
    using Error::Error;
};

struct NotComposable : Error {
    using Error::Error;
};

struct SourceTargetMismatch : Error {
    using Error::Error;
};

struct NotCocycle : Error {
    using Error::Error;
};

struct NotCoboundary : Error {
    using Error::Error;
};

struct NotClosed : Error {
    using Error::Error;
};

struct NotWellDefined : Error {
    using Error::Error;
};

struct NaturalityFails : Error {
    using Error::Error;
};

struct PartialDataInvalid : Error {
    using Error::Error;
};

struct ValidationFailure : Error {
    using Error::Error;
};

/* H^{n-1} of the relevant hom complex is nonzero where the directed
 * homotopy solver needs it to vanish. */
struct VanishingHypothesisFails : Error {
    int degree;
    int dimension;
    VanishingHypothesisFails(int degree_, int dimension_)
        : Error("vanishing hypothesis fails: H^" + std::to_string(degree_) + " has dimension "
                + std::to_string(dimension_)),
          degree(degree_),
          dimension(dimension_)
    {
    }
};

/* A condition the algorithms guarantee was found violated; indicates a bug. */
struct InternalError : Error {
    using Error::Error;
};

}  // namespace dglift
