"""Questionnaire schema and answer sheets.

Seventeen questions rated 0-50 (0 lowest, 50 highest), grouped into the
three essential product-line activities: core asset development (q1-q5),
product development (q6-q10) and management (q11-q17).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from ..errors import ValidationError
from ..fuzzy.shapes import UNIVERSE_MAX, UNIVERSE_MIN

QUESTION_IDS: tuple[str, ...] = tuple(f"q{i}" for i in range(1, 18))


class Activity(str, Enum):
    CORE_ASSET = "core_asset"
    PRODUCT_DEVELOPMENT = "product_development"
    MANAGEMENT = "management"


ACTIVITY_QUESTION_IDS: dict[Activity, tuple[str, ...]] = {
    Activity.CORE_ASSET: QUESTION_IDS[0:5],
    Activity.PRODUCT_DEVELOPMENT: QUESTION_IDS[5:10],
    Activity.MANAGEMENT: QUESTION_IDS[10:17],
}


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    activity: Activity


@dataclass(frozen=True)
class QuestionnaireSchema:
    """The canonical 17-question schema, in questionnaire order."""

    questions: tuple[Question, ...]
    _by_id: Mapping[str, Question] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ids = tuple(q.id for q in self.questions)
        if ids != QUESTION_IDS:
            raise ValueError(f"schema must contain exactly q1..q17 in order, got {ids}")
        for q in self.questions:
            if q.id not in ACTIVITY_QUESTION_IDS[q.activity]:
                raise ValueError(f"question {q.id} assigned to the wrong activity {q.activity}")
        object.__setattr__(self, "_by_id", {q.id: q for q in self.questions})

    def question(self, qid: str) -> Question:
        return self._by_id[qid]

    def by_activity(self, activity: Activity) -> tuple[Question, ...]:
        return tuple(q for q in self.questions if q.activity is activity)


@dataclass(frozen=True)
class AnswerSheet:
    """One organization's 17 crisp answers, each in [0, 50].

    ``declared_cmm`` is optional organization metadata (the CMM level the
    organization reports for itself); it never enters the computation.
    """

    organization: str
    answers: Mapping[str, float]
    declared_cmm: int | None = None

    def __post_init__(self):
        problems = []
        for qid in QUESTION_IDS:
            if qid not in self.answers:
                problems.append(f"{qid}: missing answer")
        for qid in self.answers:
            if qid not in QUESTION_IDS:
                problems.append(f"{qid}: not a valid question id")
        for qid in QUESTION_IDS:
            if qid not in self.answers:
                continue
            value = self.answers[qid]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                problems.append(f"{qid}: answer must be a number, got {value!r}")
            elif not math.isfinite(value):
                problems.append(f"{qid}: answer must be finite, got {value!r}")
            elif not UNIVERSE_MIN <= value <= UNIVERSE_MAX:
                problems.append(
                    f"{qid}: answer {value} outside [{UNIVERSE_MIN:g}, {UNIVERSE_MAX:g}]"
                )
        if self.declared_cmm is not None:
            if (
                isinstance(self.declared_cmm, bool)
                or not isinstance(self.declared_cmm, int)
                or not 1 <= self.declared_cmm <= 5
            ):
                problems.append(
                    f"declared_cmm: must be an integer CMM level 1..5, got {self.declared_cmm!r}"
                )
        if problems:
            raise ValidationError(problems)
        object.__setattr__(self, "answers", {qid: float(self.answers[qid]) for qid in QUESTION_IDS})

    def values(self, qids: tuple[str, ...]) -> list[float]:
        return [self.answers[qid] for qid in qids]

    def activity_values(self, activity: Activity) -> list[float]:
        return self.values(ACTIVITY_QUESTION_IDS[activity])

    def mean(self) -> float:
        return sum(self.answers[qid] for qid in QUESTION_IDS) / len(QUESTION_IDS)

    def replace_answer(self, qid: str, value: float) -> "AnswerSheet":
        return AnswerSheet(
            organization=self.organization,
            answers={**self.answers, qid: value},
            declared_cmm=self.declared_cmm,
        )
