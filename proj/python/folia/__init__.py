"""Modular classes of polynomial Lie n-algebroids and regular foliations."""

from ._folia import (
    MissingBracket,
    ParseError,
    Presentation,
    PresentationError,
    RegularPresentation,
    builtin_names,
    builtin_regular_names,
)

__all__ = [
    "MissingBracket",
    "ParseError",
    "Presentation",
    "PresentationError",
    "RegularPresentation",
    "builtin_names",
    "builtin_regular_names",
]
