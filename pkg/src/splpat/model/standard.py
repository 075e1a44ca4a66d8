"""The standard assessment model: questions, term sets and rule table."""
from __future__ import annotations

import functools
from typing import NamedTuple

from ..fuzzy.defuzz import DEFAULT_STEP
from ..fuzzy.engine import TwoInputSystem
from ..fuzzy.rules import Rule, RuleBase
from ..fuzzy.shapes import TrapezoidShape
from ..fuzzy.terms import Term, TermSet
from .questionnaire import Activity, Question, QuestionnaireSchema

_QUESTIONS = (
    # Core asset development
    ("q1", Activity.CORE_ASSET,
     "Are all of the core assets within the software product line repository and the "
     "resultant products consistent with the scope of software product line?"),
    ("q2", Activity.CORE_ASSET,
     "Do all the components present in the core asset repository define the variability "
     "mechanism to tailor them for effective utilization?"),
    ("q3", Activity.CORE_ASSET,
     "Do all the COTS present or added into core asset repository satisfy the cost "
     "benefit ratio for the organization?"),
    ("q4", Activity.CORE_ASSET,
     "Is the core asset repository updated constantly by adding new asset as the "
     "product line progresses?"),
    ("q5", Activity.CORE_ASSET,
     "Does a version control management system keep track of the core asset development "
     "and utilization history?"),
    # Product development
    ("q6", Activity.PRODUCT_DEVELOPMENT,
     "Do all the products within the software product line share a common architecture?"),
    ("q7", Activity.PRODUCT_DEVELOPMENT,
     "Does the variation among products remain within the scope of software product line?"),
    ("q8", Activity.PRODUCT_DEVELOPMENT,
     "Is every product released from the product line a valid business case for the "
     "organization?"),
    ("q9", Activity.PRODUCT_DEVELOPMENT,
     "Does the software product line produce a considerable number of products, or at "
     "least more than one?"),
    ("q10", Activity.PRODUCT_DEVELOPMENT,
     "Does every product released from the software product line meet the qualification "
     "criteria of the organization?"),
    # Management
    ("q11", Activity.MANAGEMENT,
     "Is any configuration management system used to address the configuration "
     "management issues present in the software product line?"),
    ("q12", Activity.MANAGEMENT,
     "Is a comprehensive description and analysis of domain performed for the software "
     "product line?"),
    ("q13", Activity.MANAGEMENT,
     "Does the ROI (Return on Investment) of the software product line meet the "
     "organization's financial goal?"),
    ("q14", Activity.MANAGEMENT,
     "Are the requirements of the software product line clearly defined, analyzed, "
     "specified, verified and managed?"),
    ("q15", Activity.MANAGEMENT,
     "Does the requirement of the software product line define the fundamental products "
     "and their features within the product line?"),
    ("q16", Activity.MANAGEMENT,
     "Does the organizational structure support the software product line concepts and "
     "principles?"),
    ("q17", Activity.MANAGEMENT,
     "Are the essential activities of software product line development performed "
     "iteratively?"),
)

# Answers: how completely an activity is performed, 0-50.
_INPUT_TERMS = (
    ("No", (0.0, 5.0, 16.5, 21.5)),
    ("Partial", (16.5, 21.5, 33.0, 38.0)),
    ("Yes", (33.0, 38.0, 50.0, 50.0)),
)

# Maturity levels on the same 0-50 scale; rank doubles as the CMM level.
_OUTPUT_TERMS = (
    ("Initial", (0.0, 5.0, 10.0, 15.0)),
    ("Repeatable", (10.0, 15.0, 20.0, 25.0)),
    ("Defined", (20.0, 25.0, 30.0, 35.0)),
    ("Managed", (30.0, 35.0, 40.0, 45.0)),
    ("Optimizing", (40.0, 45.0, 50.0, 50.0)),
)

_RULES = (
    ("Yes", "Yes", "Optimizing"),
    ("No", "No", "Initial"),
    ("Partial", "Partial", "Repeatable"),
    ("Yes", "No", "Defined"),
    ("No", "Yes", "Defined"),
    ("Yes", "Partial", "Managed"),
    ("Partial", "Yes", "Managed"),
    ("Partial", "No", "Repeatable"),
    ("No", "Partial", "Repeatable"),
)


class StandardModel(NamedTuple):
    schema: QuestionnaireSchema
    input_terms: TermSet
    output_terms: TermSet
    rule_base: RuleBase


@functools.lru_cache(maxsize=1)
def build_standard_model() -> StandardModel:
    """Assemble the questionnaire, both term sets and the nine-rule table."""
    schema = QuestionnaireSchema(
        tuple(Question(qid, text, activity) for qid, activity, text in _QUESTIONS)
    )
    input_terms = TermSet(
        tuple(
            Term(name, rank, TrapezoidShape(*points))
            for rank, (name, points) in enumerate(_INPUT_TERMS, start=1)
        )
    )
    output_terms = TermSet(
        tuple(
            Term(name, rank, TrapezoidShape(*points))
            for rank, (name, points) in enumerate(_OUTPUT_TERMS, start=1)
        )
    )
    rule_base = RuleBase(
        tuple(Rule(a1, a2, cons) for a1, a2, cons in _RULES),
        input_terms=input_terms,
        output_terms=output_terms,
    )
    return StandardModel(schema, input_terms, output_terms, rule_base)


@functools.lru_cache(maxsize=4)
def standard_engine(step: float = DEFAULT_STEP) -> TwoInputSystem:
    """Shared immutable inference engine for the standard model."""
    model = build_standard_model()
    return TwoInputSystem(model.input_terms, model.output_terms, model.rule_base, step=step)
