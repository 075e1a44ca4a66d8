"""Trapezoidal membership shapes on the assessment score universe."""
from __future__ import annotations

import math
from dataclasses import dataclass

UNIVERSE_MIN = 0.0
UNIVERSE_MAX = 50.0


@dataclass(frozen=True)
class TrapezoidShape:
    """Piecewise-linear membership function with breakpoints a <= b <= c <= d.

    Membership rises linearly from 0 at ``a`` to 1 at ``b``, holds 1 on the
    plateau [b, c], falls linearly to 0 at ``d``, and is 0 outside [a, d).
    Degenerate edges follow the usual fuzzy-control conventions:

    * ``a == b`` collapses the rising ramp to a step (membership 1 at x = b);
    * ``c == d`` makes a right shoulder (membership 1 at the shared
      breakpoint, overriding the "0 at and beyond d" branch at that single
      point).

    All breakpoints must lie inside the score universe [0, 50].
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for field in ("a", "b", "c", "d"):
            value = float(getattr(self, field))
            if not math.isfinite(value):
                raise ValueError(f"trapezoid breakpoint {field} must be finite, got {value!r}")
            object.__setattr__(self, field, value)
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                "trapezoid breakpoints must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if self.a < UNIVERSE_MIN or self.d > UNIVERSE_MAX:
            raise ValueError(
                f"trapezoid breakpoints must stay within [{UNIVERSE_MIN}, {UNIVERSE_MAX}], "
                f"got ({self.a}, {self.b}, {self.c}, {self.d})"
            )

    def membership(self, x: float) -> float:
        """Membership degree of a finite crisp value, in [0, 1]."""
        if x < self.a:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        if x < self.c:
            return 1.0
        if self.c == self.d:
            return 1.0 if x == self.c else 0.0
        if x < self.d:
            return (self.d - x) / (self.d - self.c)
        return 0.0


def membership_degree(x: float, shape: TrapezoidShape) -> float:
    """Evaluate ``shape`` at ``x``; total for every valid shape."""
    return shape.membership(x)
