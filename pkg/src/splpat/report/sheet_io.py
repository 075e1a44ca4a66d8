"""Answer-sheet document format.

One UTF-8 JSON object per sheet:

    {
      "organization": "A",
      "declared_cmm": 2,
      "answers": {"q1": 35, ..., "q17": 7}
    }

``declared_cmm`` is optional; everything else is required.  Unknown fields
are rejected.  Answers accept integer or decimal literals in [0, 50].
"""
from __future__ import annotations

import json

from ..errors import SheetParseError, ValidationError
from ..model.questionnaire import QUESTION_IDS, AnswerSheet

_TOP_LEVEL_FIELDS = ("organization", "declared_cmm", "answers")


def _reject_constant(value: str):
    raise ValueError(f"non-finite number {value} is not allowed")


def parse_answer_sheet(data: bytes | str) -> AnswerSheet:
    """Parse and validate one answer-sheet document.

    Raises :class:`SheetParseError` for malformed text (with position when
    known) and :class:`ValidationError` for structural problems, naming
    every offending field.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SheetParseError(f"document is not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SheetParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    except ValueError as exc:
        raise SheetParseError(str(exc)) from exc

    problems = []
    if not isinstance(doc, dict):
        raise ValidationError(["document: top level must be an object"])
    for key in doc:
        if key not in _TOP_LEVEL_FIELDS:
            problems.append(f"{key}: unknown field")

    organization = doc.get("organization")
    if "organization" not in doc:
        problems.append("organization: missing field")
    elif not isinstance(organization, str):
        problems.append(f"organization: must be a string, got {organization!r}")

    answers = doc.get("answers")
    if "answers" not in doc:
        problems.append("answers: missing field")
    elif not isinstance(answers, dict):
        problems.append("answers: must be an object mapping q1..q17 to numbers")

    if problems:
        raise ValidationError(problems)

    # AnswerSheet validates completeness, ranges and declared_cmm itself,
    # naming question ids in its error.
    return AnswerSheet(
        organization=organization,
        answers=answers,
        declared_cmm=doc.get("declared_cmm"),
    )


def render_answer_sheet(sheet: AnswerSheet) -> bytes:
    """Serialize a sheet to the canonical document form (round-trip safe)."""
    doc: dict = {"organization": sheet.organization}
    if sheet.declared_cmm is not None:
        doc["declared_cmm"] = sheet.declared_cmm
    doc["answers"] = {qid: sheet.answers[qid] for qid in QUESTION_IDS}
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
