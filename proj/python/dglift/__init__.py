"""Exact lifting engine for transformations of functors between dg-categories."""

try:
    from ._dglift import (  # noqa: F401
        EngineError,
        NaturalityError,
        ParseError,
        VanishingHypothesisError,
        certify,
        cohomology,
        lift,
        negative_vanishing,
        validate,
    )
except ImportError:  # in-tree builds keep the extension next to the package
    from _dglift import (  # noqa: F401
        EngineError,
        NaturalityError,
        ParseError,
        VanishingHypothesisError,
        certify,
        cohomology,
        lift,
        negative_vanishing,
        validate,
    )

__all__ = [
    "EngineError",
    "NaturalityError",
    "ParseError",
    "VanishingHypothesisError",
    "certify",
    "cohomology",
    "lift",
    "negative_vanishing",
    "validate",
]
