"""Two-antecedent fuzzy rules: min implication, max aggregation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .terms import MembershipVector, TermSet


@dataclass(frozen=True)
class Rule:
    """If input1 is ``antecedent1`` and input2 is ``antecedent2``, then
    the output is ``consequent``."""

    antecedent1: str
    antecedent2: str
    consequent: str


@dataclass(frozen=True)
class RuleBase:
    """Complete rule table over an input and an output term set.

    Completeness is enforced: exactly one rule for every ordered pair of
    input terms, so the table has ``len(input_terms) ** 2`` entries.
    """

    rules: tuple[Rule, ...]
    input_terms: TermSet
    output_terms: TermSet

    def __post_init__(self):
        in_names = set(self.input_terms.names)
        out_names = set(self.output_terms.names)
        seen = set()
        for rule in self.rules:
            if rule.antecedent1 not in in_names or rule.antecedent2 not in in_names:
                raise ValueError(f"rule {rule} uses an unknown input term")
            if rule.consequent not in out_names:
                raise ValueError(f"rule {rule} uses an unknown output term")
            pair = (rule.antecedent1, rule.antecedent2)
            if pair in seen:
                raise ValueError(f"duplicate rule for antecedent pair {pair}")
            seen.add(pair)
        expected = len(self.input_terms) ** 2
        if len(self.rules) != expected:
            raise ValueError(
                f"rule base must cover all {expected} ordered antecedent pairs, "
                f"got {len(self.rules)} rules"
            )

    def consequent_for(self, antecedent1: str, antecedent2: str) -> str:
        for rule in self.rules:
            if rule.antecedent1 == antecedent1 and rule.antecedent2 == antecedent2:
                return rule.consequent
        raise KeyError((antecedent1, antecedent2))

    def is_symmetric(self) -> bool:
        """True when swapping the antecedents never changes the consequent."""
        return all(
            self.consequent_for(r.antecedent2, r.antecedent1) == r.consequent
            for r in self.rules
        )


@dataclass(frozen=True)
class AggregatedOutput:
    """Per-output-term clip levels produced by firing a rule base."""

    clip_levels: Mapping[str, float]

    def __post_init__(self):
        for name, level in self.clip_levels.items():
            if not 0.0 <= level <= 1.0:
                raise ValueError(f"clip level for {name!r} outside [0, 1]: {level}")

    @property
    def is_empty(self) -> bool:
        return all(level <= 0.0 for level in self.clip_levels.values())


def rule_strengths(mv1: MembershipVector, mv2: MembershipVector, rule_base: RuleBase) -> tuple[float, ...]:
    """Firing strength min(mv1[ant1], mv2[ant2]) of each rule, in rule order."""
    return tuple(
        min(mv1.degree(rule.antecedent1), mv2.degree(rule.antecedent2))
        for rule in rule_base.rules
    )


def fire_rules(mv1: MembershipVector, mv2: MembershipVector, rule_base: RuleBase) -> AggregatedOutput:
    """Fire every rule and aggregate per consequent with max.

    An all-zero result is allowed here; it is rejected only at
    defuzzification time.
    """
    clips = {name: 0.0 for name in rule_base.output_terms.names}
    for rule, strength in zip(rule_base.rules, rule_strengths(mv1, mv2, rule_base)):
        if strength > clips[rule.consequent]:
            clips[rule.consequent] = strength
    return AggregatedOutput(clips)
