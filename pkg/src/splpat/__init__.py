"""SPLPAT: fuzzy-logic process assessment for software product lines.

A 17-question process questionnaire is scored on a 0-50 scale, pushed
through a cascade of two-input Mamdani fuzzy inference systems, and
classified onto the five CMM maturity levels, with a statistical-average
baseline for comparison.
"""

__version__ = "0.1.0"

from .errors import EmptyAggregateError, SheetParseError, UniverseRangeError, ValidationError

__all__ = [
    "__version__",
    "EmptyAggregateError",
    "SheetParseError",
    "UniverseRangeError",
    "ValidationError",
]
