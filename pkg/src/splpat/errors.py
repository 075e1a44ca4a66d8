"""Exception types shared across the package."""
from __future__ import annotations


class SplpatError(Exception):
    """Base class for all package-specific errors."""


class UniverseRangeError(SplpatError, ValueError):
    """A crisp value lies outside the score universe [0, 50]."""


class EmptyAggregateError(SplpatError, ValueError):
    """Defuzzification was asked for an aggregate with no positive clip level."""


class ValidationError(SplpatError, ValueError):
    """Structured validation failure; ``problems`` names every offending field."""

    def __init__(self, problems):
        self.problems = tuple(problems)
        super().__init__("; ".join(self.problems))


class SheetParseError(SplpatError, ValueError):
    """Malformed answer-sheet document; carries the text position if known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
