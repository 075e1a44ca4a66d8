"""Assessment over the standard model: cascade, classification, baseline.

All operations are pure functions of the answer sheet; the shared engine is
immutable, so independent sheets can be assessed concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..fuzzy.engine import TwoInputSystem
from ..fuzzy.shapes import UNIVERSE_MAX, UNIVERSE_MIN
from ..fuzzy.terms import TermSet
from ..errors import UniverseRangeError
from .cascade import CascadeTrace, GroupTrace, reduce_group
from .questionnaire import ACTIVITY_QUESTION_IDS, QUESTION_IDS, Activity, AnswerSheet
from .standard import build_standard_model, standard_engine

OVERALL = "overall"

DEFAULT_SENSITIVITY_DELTA = 10.0


@dataclass(frozen=True)
class LevelClassification:
    """Linguistic reading of a crisp score: the output terms it belongs to.

    The output terms overlap pairwise only, so a score belongs to one term
    or two adjacent ones: the label is "X" or "X to Y" and the CMM levels
    are adjacent integers.
    """

    terms: tuple[str, ...]
    levels: tuple[int, ...]

    @property
    def label(self) -> str:
        return " to ".join(self.terms)

    @property
    def level_label(self) -> str:
        return " to ".join(str(level) for level in self.levels)


@dataclass(frozen=True)
class ActivityScore:
    score: float
    classification: LevelClassification


@dataclass(frozen=True)
class AssessmentResult:
    organization: str
    core_asset: ActivityScore
    product_development: ActivityScore
    management: ActivityScore
    overall: ActivityScore
    baseline_average: float
    baseline_classification: LevelClassification
    declared_cmm: int | None
    trace: CascadeTrace

    def activity_score(self, activity: Activity) -> ActivityScore:
        return getattr(self, activity.value)


@dataclass(frozen=True)
class ComparisonReport:
    """Fuzzy cascade vs statistical average vs the declared CMM level."""

    organization: str
    fuzzy_score: float
    fuzzy_classification: LevelClassification
    average_score: float
    average_classification: LevelClassification
    declared_cmm: int | None
    fuzzy_matches_declared: bool | None
    average_matches_declared: bool | None
    fuzzy_matches_average: bool


def classify_level(x: float, output_terms: TermSet | None = None) -> LevelClassification:
    """Every output term with positive coverage membership at ``x``, by rank."""
    if output_terms is None:
        output_terms = build_standard_model().output_terms
    if not UNIVERSE_MIN <= x <= UNIVERSE_MAX:
        raise UniverseRangeError(f"score {x} outside [{UNIVERSE_MIN:g}, {UNIVERSE_MAX:g}]")
    hits = [term for term in output_terms if output_terms.membership(term.name, x) > 0.0]
    return LevelClassification(
        terms=tuple(term.name for term in hits),
        levels=tuple(term.rank for term in hits),
    )


def _reduce_activity(
    sheet: AnswerSheet, activity: Activity, engine: TwoInputSystem
) -> tuple[float, GroupTrace]:
    qids = ACTIVITY_QUESTION_IDS[activity]
    return reduce_group(
        sheet.values(qids), engine, group=activity.value, refs=qids
    )


def assess(sheet: AnswerSheet, engine: TwoInputSystem | None = None) -> AssessmentResult:
    """Full assessment: three activity cascades, the overall cascade,
    classification of every score, and the statistical-average baseline.

    The overall score reduces [core asset, product development, management]
    with the same pairwise cascade: core with product first, then that
    intermediate with management.
    """
    if engine is None:
        engine = standard_engine()
    output_terms = engine.output_terms

    scores: dict[Activity, float] = {}
    traces: dict[str, GroupTrace] = {}
    for activity in Activity:
        score, trace = _reduce_activity(sheet, activity, engine)
        scores[activity] = score
        traces[activity.value] = trace

    overall_score, overall_trace = reduce_group(
        [scores[a] for a in Activity],
        engine,
        group=OVERALL,
        refs=[a.value for a in Activity],
    )
    traces[OVERALL] = overall_trace

    def scored(value: float) -> ActivityScore:
        return ActivityScore(value, classify_level(value, output_terms))

    average = sheet.mean()
    return AssessmentResult(
        organization=sheet.organization,
        core_asset=scored(scores[Activity.CORE_ASSET]),
        product_development=scored(scores[Activity.PRODUCT_DEVELOPMENT]),
        management=scored(scores[Activity.MANAGEMENT]),
        overall=scored(overall_score),
        baseline_average=average,
        baseline_classification=classify_level(average, output_terms),
        declared_cmm=sheet.declared_cmm,
        trace=CascadeTrace(traces),
    )


def statistical_average(sheet: AnswerSheet) -> tuple[float, LevelClassification]:
    """Arithmetic mean of the 17 answers with its level classification."""
    average = sheet.mean()
    return average, classify_level(average)


def sensitivity(
    sheet: AnswerSheet,
    delta: float = DEFAULT_SENSITIVITY_DELTA,
    engine: TwoInputSystem | None = None,
) -> dict[str, float]:
    """Change in the overall score when each answer is raised by ``delta``.

    Each question is perturbed independently to min(answer + delta, 50); the
    map reports perturbed overall minus baseline overall.
    """
    if delta < 0:
        raise ValueError(f"sensitivity delta must be >= 0, got {delta}")
    if engine is None:
        engine = standard_engine()
    baseline = assess(sheet, engine).overall.score
    deltas: dict[str, float] = {}
    for qid in QUESTION_IDS:
        raised = min(sheet.answers[qid] + delta, UNIVERSE_MAX)
        perturbed = sheet.replace_answer(qid, raised)
        deltas[qid] = assess(perturbed, engine).overall.score - baseline
    return deltas


def compare_report(
    sheet: AnswerSheet,
    declared_cmm: int | None = None,
    engine: TwoInputSystem | None = None,
) -> ComparisonReport:
    """Bundle fuzzy overall, statistical average and declared CMM level.

    ``declared_cmm`` falls back to the sheet's metadata; agreement against
    the declared level is reported only when one is available.  A method
    "matches" a declared level when that level appears among the method's
    classified levels.
    """
    result = assess(sheet, engine)
    if declared_cmm is None:
        declared_cmm = sheet.declared_cmm
    average = result.baseline_average
    average_cls = result.baseline_classification
    fuzzy_cls = result.overall.classification
    if declared_cmm is None:
        fuzzy_matches = average_matches = None
    else:
        fuzzy_matches = declared_cmm in fuzzy_cls.levels
        average_matches = declared_cmm in average_cls.levels
    return ComparisonReport(
        organization=sheet.organization,
        fuzzy_score=result.overall.score,
        fuzzy_classification=fuzzy_cls,
        average_score=average,
        average_classification=average_cls,
        declared_cmm=declared_cmm,
        fuzzy_matches_declared=fuzzy_matches,
        average_matches_declared=average_matches,
        fuzzy_matches_average=bool(set(fuzzy_cls.levels) & set(average_cls.levels)),
    )
