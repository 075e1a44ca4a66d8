"""Linguistic term sets and fuzzification.

A :class:`TermSet` orders named trapezoid terms over the shared 0-50 score
universe.  For coverage purposes the edge terms saturate toward the universe
bounds: the first term keeps membership 1 left of its plateau and the last
term right of its plateau, so a partition-of-unity set covers the whole
scale even when the printed edge shapes carry a ramp (e.g. the "No" input
term rising from 0 to 5).  Defuzzification intentionally does NOT use this
coverage view; it integrates the literal shape geometry (see ``defuzz``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ..errors import UniverseRangeError
from .shapes import UNIVERSE_MAX, UNIVERSE_MIN, TrapezoidShape


@dataclass(frozen=True)
class Term:
    """A named linguistic category with its shape and ordinal rank."""

    name: str
    rank: int
    shape: TrapezoidShape


@dataclass(frozen=True)
class MembershipVector:
    """Map from term name to membership degree in [0, 1].

    Missing names read as degree 0, so sparse vectors (e.g. ``{"Yes": 1.0}``)
    behave like full ones.
    """

    degrees: Mapping[str, float]

    def __post_init__(self):
        for name, value in self.degrees.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"membership degree for {name!r} outside [0, 1]: {value}")

    def degree(self, name: str) -> float:
        return self.degrees.get(name, 0.0)

    def __getitem__(self, name: str) -> float:
        return self.degree(name)

    def items(self):
        return self.degrees.items()


@dataclass(frozen=True)
class TermSet:
    """Ordered linguistic terms over [0, 50].

    Invariants enforced at construction: at least one term, unique names,
    strictly increasing ranks, every shape inside the universe.
    """

    terms: tuple[Term, ...]
    universe_min: float = UNIVERSE_MIN
    universe_max: float = UNIVERSE_MAX
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a term set needs at least one term")
        names = [t.name for t in self.terms]
        if len(set(names)) != len(names):
            raise ValueError(f"term names must be unique, got {names}")
        ranks = [t.rank for t in self.terms]
        if any(r2 <= r1 for r1, r2 in zip(ranks, ranks[1:])):
            raise ValueError(f"term ranks must be strictly increasing, got {ranks}")
        for t in self.terms:
            if t.shape.a < self.universe_min or t.shape.d > self.universe_max:
                raise ValueError(f"shape of term {t.name!r} leaves the universe")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, name: str) -> Term:
        try:
            return self.terms[self._index[name]]
        except KeyError:
            raise KeyError(f"unknown term {name!r}; expected one of {self.names}") from None

    def membership(self, name: str, x: float) -> float:
        """Coverage membership of ``x`` in the named term.

        Identical to the term shape except at the universe edges, where the
        first/last terms saturate (see module docstring).
        """
        try:
            i = self._index[name]
        except KeyError:
            raise KeyError(f"unknown term {name!r}; expected one of {self.names}") from None
        term = self.terms[i]
        if i == 0 and x <= term.shape.b:
            return 1.0
        if i == len(self.terms) - 1 and x >= term.shape.c:
            return 1.0
        return term.shape.membership(x)

    def fuzzify(self, x: float) -> MembershipVector:
        """Memberships of a crisp score in every term of the set.

        Raises :class:`UniverseRangeError` when ``x`` leaves [0, 50].
        """
        if not self.universe_min <= x <= self.universe_max:
            raise UniverseRangeError(
                f"crisp value {x} outside [{self.universe_min}, {self.universe_max}]"
            )
        return MembershipVector({t.name: self.membership(t.name, x) for t in self.terms})


def fuzzify(x: float, term_set: TermSet) -> MembershipVector:
    return term_set.fuzzify(x)
