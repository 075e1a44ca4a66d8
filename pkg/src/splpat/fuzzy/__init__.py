"""Generic two-input Mamdani fuzzy inference on the 0-50 score universe."""

from .shapes import UNIVERSE_MAX, UNIVERSE_MIN, TrapezoidShape, membership_degree
from .terms import MembershipVector, Term, TermSet, fuzzify
from .rules import AggregatedOutput, Rule, RuleBase, fire_rules, rule_strengths
from .defuzz import KERNEL_BACKEND, CentroidDefuzzifier, defuzzify_centroid
from .engine import PairInference, TwoInputSystem, infer_pair

__all__ = [
    "UNIVERSE_MIN",
    "UNIVERSE_MAX",
    "TrapezoidShape",
    "membership_degree",
    "Term",
    "TermSet",
    "MembershipVector",
    "fuzzify",
    "Rule",
    "RuleBase",
    "AggregatedOutput",
    "fire_rules",
    "rule_strengths",
    "CentroidDefuzzifier",
    "defuzzify_centroid",
    "KERNEL_BACKEND",
    "TwoInputSystem",
    "PairInference",
    "infer_pair",
]
