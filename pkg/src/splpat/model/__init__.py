"""The concrete software-product-line assessment model."""

from .questionnaire import QUESTION_IDS, Activity, AnswerSheet, Question, QuestionnaireSchema
from .standard import StandardModel, build_standard_model, standard_engine
from .cascade import CascadeLeaf, CascadeNode, CascadeTrace, GroupTrace, reduce_group
from .assessment import (
    ActivityScore,
    AssessmentResult,
    ComparisonReport,
    LevelClassification,
    assess,
    classify_level,
    compare_report,
    sensitivity,
    statistical_average,
)

__all__ = [
    "Activity",
    "Question",
    "QuestionnaireSchema",
    "AnswerSheet",
    "QUESTION_IDS",
    "StandardModel",
    "build_standard_model",
    "standard_engine",
    "CascadeLeaf",
    "CascadeNode",
    "CascadeTrace",
    "GroupTrace",
    "reduce_group",
    "LevelClassification",
    "ActivityScore",
    "AssessmentResult",
    "ComparisonReport",
    "assess",
    "classify_level",
    "compare_report",
    "sensitivity",
    "statistical_average",
]
