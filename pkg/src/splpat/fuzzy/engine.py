"""Two-input Mamdani inference: fuzzify, fire, aggregate, defuzzify."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .defuzz import DEFAULT_STEP, CentroidDefuzzifier
from .rules import RuleBase, fire_rules, rule_strengths
from .terms import MembershipVector, TermSet


@dataclass(frozen=True)
class PairInference:
    """Full record of one two-input inference, for traces and explanations."""

    x1: float
    x2: float
    memberships1: MembershipVector
    memberships2: MembershipVector
    rule_strengths: tuple[float, ...]
    clip_levels: Mapping[str, float]
    output: float


class TwoInputSystem:
    """A fixed two-input fuzzy system over the 0-50 universe.

    Immutable after construction; inference is a pure function of the two
    crisp inputs, so instances are safe for unrestricted concurrent use.
    """

    def __init__(
        self,
        input_terms: TermSet,
        output_terms: TermSet,
        rule_base: RuleBase,
        step: float = DEFAULT_STEP,
    ):
        if rule_base.input_terms != input_terms or rule_base.output_terms != output_terms:
            raise ValueError("rule base does not match the given term sets")
        self.input_terms = input_terms
        self.output_terms = output_terms
        self.rule_base = rule_base
        self.defuzzifier = CentroidDefuzzifier(output_terms, step)

    def infer_detail(self, x1: float, x2: float) -> PairInference:
        mv1 = self.input_terms.fuzzify(x1)
        mv2 = self.input_terms.fuzzify(x2)
        strengths = rule_strengths(mv1, mv2, self.rule_base)
        aggregate = fire_rules(mv1, mv2, self.rule_base)
        return PairInference(
            x1=x1,
            x2=x2,
            memberships1=mv1,
            memberships2=mv2,
            rule_strengths=strengths,
            clip_levels=dict(aggregate.clip_levels),
            output=self.defuzzifier(aggregate),
        )

    def infer(self, x1: float, x2: float) -> float:
        mv1 = self.input_terms.fuzzify(x1)
        mv2 = self.input_terms.fuzzify(x2)
        return self.defuzzifier(fire_rules(mv1, mv2, self.rule_base))


def infer_pair(x1: float, x2: float, system: TwoInputSystem) -> float:
    """Crisp output of the system for two crisp inputs in [0, 50]."""
    return system.infer(x1, x2)
