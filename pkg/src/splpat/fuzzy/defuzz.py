"""Centroid defuzzification by trapezoid-rule quadrature on a fixed grid.

The aggregate output curve is mu(x) = max over terms of min(clip level,
literal term shape at x); its center of gravity is integrated on a uniform
grid (default step 0.01 over [0, 50], i.e. 5001 points).  Per-term grid
memberships are precomputed once per (term set, step).

The inner loop runs in a compiled extension when available and in a
bit-identical pure-Python kernel otherwise; set SPLPAT_PURE_PYTHON=1 to
force the fallback at import time.
"""
from __future__ import annotations

import functools
import os
from array import array

from ..errors import EmptyAggregateError
from .rules import AggregatedOutput
from .terms import TermSet

if os.environ.get("SPLPAT_PURE_PYTHON") == "1":
    from . import _centroid_py as _kernel
else:
    try:
        from . import _centroid as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _centroid_py as _kernel

KERNEL_BACKEND: str = _kernel.BACKEND

DEFAULT_STEP = 0.01


class CentroidDefuzzifier:
    """Reusable centroid integrator for one term set at one grid step."""

    def __init__(self, term_set: TermSet, step: float = DEFAULT_STEP):
        span = term_set.universe_max - term_set.universe_min
        if step <= 0 or step > span:
            raise ValueError(f"grid step must be in (0, {span}], got {step}")
        n = round(span / step)
        if abs(n * step - span) > 1e-9:
            raise ValueError(f"grid step {step} does not evenly divide the universe span {span}")
        self.term_set = term_set
        self.step = step
        self.npts = n + 1
        lo = term_set.universe_min
        # lo + span*i/n lands exactly on every 0.5-multiple breakpoint
        self._xs = array("d", (lo + (span * i) / n for i in range(n + 1)))
        self._table = array(
            "d",
            (term.shape.membership(x) for term in term_set.terms for x in self._xs),
        )

    def __call__(self, aggregate: AggregatedOutput) -> float:
        clips = array(
            "d",
            (aggregate.clip_levels.get(name, 0.0) for name in self.term_set.names),
        )
        if not any(c > 0.0 for c in clips):
            raise EmptyAggregateError(
                "cannot defuzzify: every output clip level is zero"
            )
        return _kernel.centroid(self._xs, self._table, clips)


@functools.lru_cache(maxsize=8)
def _cached_defuzzifier(term_set: TermSet, step: float) -> CentroidDefuzzifier:
    return CentroidDefuzzifier(term_set, step)


def defuzzify_centroid(
    aggregate: AggregatedOutput, term_set: TermSet, step: float = DEFAULT_STEP
) -> float:
    """One-shot centroid defuzzification (grids cached per term set/step)."""
    return _cached_defuzzifier(term_set, step)(aggregate)
