"""Pairwise cascade reduction of a value group to a single score.

Many crisp inputs are combined through repeated two-input inferences,
level by level: consecutive pairs are inferred left to right, an unpaired
trailing value is carried up unchanged, and the procedure repeats until one
value remains.  Intermediate crisp outputs are re-fuzzified with the INPUT
term set at the next level (both universes are the same 0-50 scale).

The reduction is deliberately order-sensitive; this level-wise wiring is
the pinned order validated against the published case studies (see
tests/calibration.py for the exhaustive tree comparison).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..errors import UniverseRangeError
from ..fuzzy.engine import TwoInputSystem
from ..fuzzy.shapes import UNIVERSE_MAX, UNIVERSE_MIN


@dataclass(frozen=True)
class CascadeLeaf:
    """An input to the reduction: a question answer or an activity score."""

    ref: str
    value: float


@dataclass(frozen=True)
class CascadeNode:
    """One two-input inference inside a reduction tree."""

    node_id: str
    stage: int
    left: str
    right: str
    left_value: float
    right_value: float
    rule_strengths: tuple[float, ...]
    clip_levels: Mapping[str, float]
    output: float


@dataclass(frozen=True)
class GroupTrace:
    """Reduction record for one group: its leaves and every internal node."""

    group: str
    leaves: tuple[CascadeLeaf, ...]
    nodes: tuple[CascadeNode, ...]
    output: float

    @property
    def root(self) -> str:
        """Ref of the tree root (last node, or the sole leaf)."""
        if self.nodes:
            return self.nodes[-1].node_id
        return self.leaves[0].ref


@dataclass(frozen=True)
class CascadeTrace:
    """Complete processing record: one tree per activity plus the overall tree."""

    groups: Mapping[str, GroupTrace]

    def __getitem__(self, group: str) -> GroupTrace:
        return self.groups[group]


def reduce_group(
    values: Sequence[float],
    system: TwoInputSystem,
    *,
    group: str = "group",
    refs: Sequence[str] | None = None,
) -> tuple[float, GroupTrace]:
    """Reduce a non-empty list of scores to one score, level-wise.

    Returns the crisp result together with the reduction trace.  A single
    value is returned unchanged (no inference).
    """
    if len(values) == 0:
        raise ValueError("cannot reduce an empty group")
    if refs is None:
        refs = [f"{group}[{i}]" for i in range(len(values))]
    elif len(refs) != len(values):
        raise ValueError("refs must match values one to one")
    out_of_range = [
        f"{ref}: value {v} outside [{UNIVERSE_MIN:g}, {UNIVERSE_MAX:g}]"
        for ref, v in zip(refs, values)
        if not UNIVERSE_MIN <= v <= UNIVERSE_MAX
    ]
    if out_of_range:
        raise UniverseRangeError("; ".join(out_of_range))

    leaves = tuple(CascadeLeaf(ref, float(v)) for ref, v in zip(refs, values))
    nodes: list[CascadeNode] = []
    pending: list[tuple[str, float]] = [(leaf.ref, leaf.value) for leaf in leaves]
    stage = 0
    while len(pending) > 1:
        stage += 1
        merged: list[tuple[str, float]] = []
        for i in range(0, len(pending) - 1, 2):
            (left_ref, left_value), (right_ref, right_value) = pending[i], pending[i + 1]
            detail = system.infer_detail(left_value, right_value)
            node_id = f"{group}/s{stage}n{len(merged)}"
            nodes.append(
                CascadeNode(
                    node_id=node_id,
                    stage=stage,
                    left=left_ref,
                    right=right_ref,
                    left_value=left_value,
                    right_value=right_value,
                    rule_strengths=detail.rule_strengths,
                    clip_levels=detail.clip_levels,
                    output=detail.output,
                )
            )
            merged.append((node_id, detail.output))
        if len(pending) % 2 == 1:
            merged.append(pending[-1])
        pending = merged

    output = pending[0][1]
    return output, GroupTrace(group=group, leaves=leaves, nodes=tuple(nodes), output=output)
