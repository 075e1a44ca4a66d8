"""Report rendering: human-readable text and machine-readable JSON."""
from __future__ import annotations

import json

from .. import __version__
from ..model.assessment import (
    ActivityScore,
    AssessmentResult,
    ComparisonReport,
    LevelClassification,
)
from ..model.cascade import CascadeTrace, GroupTrace
from ..model.questionnaire import QuestionnaireSchema
from ..model.standard import build_standard_model

TEXT = "text"
MACHINE = "machine"

ACTIVITY_TITLES = {
    "core_asset": "Core Asset Development Assessment",
    "product_development": "Product Development Process Assessment",
    "management": "Management Process Assessment",
    "overall": "Software Product Line Process Assessment",
}

_GROUP_ORDER = ("core_asset", "product_development", "management", "overall")


def _check_format(fmt: str):
    if fmt not in (TEXT, MACHINE):
        raise ValueError(f"unknown format {fmt!r}; expected {TEXT!r} or {MACHINE!r}")


def _score_record(title: str, entry: ActivityScore) -> dict:
    return {
        "title": title,
        "score": entry.score,
        "score_display": f"{entry.score:.2f}",
        "terms": list(entry.classification.terms),
        "levels": list(entry.classification.levels),
        "label": entry.classification.label,
        "level_label": entry.classification.level_label,
    }


def _baseline_record(average: float, classification: LevelClassification) -> dict:
    return {
        "method": "statistical_average",
        "score": average,
        "score_display": f"{average:.2f}",
        "terms": list(classification.terms),
        "levels": list(classification.levels),
        "label": classification.label,
        "level_label": classification.level_label,
    }


def _agreement_record(result: AssessmentResult) -> dict | None:
    declared = result.declared_cmm
    if declared is None:
        return None
    return {
        "fuzzy_vs_declared": declared in result.overall.classification.levels,
        "average_vs_declared": declared in result.baseline_classification.levels,
        "fuzzy_vs_average": bool(
            set(result.overall.classification.levels)
            & set(result.baseline_classification.levels)
        ),
    }


def _trace_document(trace: CascadeTrace) -> dict:
    groups = {}
    for name in _GROUP_ORDER:
        group = trace[name]
        groups[name] = {
            "leaves": [{"ref": leaf.ref, "value": leaf.value} for leaf in group.leaves],
            "nodes": [
                {
                    "id": node.node_id,
                    "stage": node.stage,
                    "left": node.left,
                    "right": node.right,
                    "left_value": node.left_value,
                    "right_value": node.right_value,
                    "rule_strengths": list(node.rule_strengths),
                    "clip_levels": dict(node.clip_levels),
                    "output": node.output,
                }
                for node in group.nodes
            ],
            "output": group.output,
        }
    return {"groups": groups}


def report_document(result: AssessmentResult, include_trace: bool = False) -> dict:
    """Machine-readable assessment report (JSON-serializable dict)."""
    doc = {
        "tool": "splpat",
        "version": __version__,
        "organization": result.organization,
        "assessments": {
            name: _score_record(ACTIVITY_TITLES[name], getattr(result, name))
            for name in _GROUP_ORDER
        },
        "baseline": _baseline_record(result.baseline_average, result.baseline_classification),
        "declared_cmm": result.declared_cmm,
        "agreement": _agreement_record(result),
    }
    if include_trace:
        doc["trace"] = _trace_document(result.trace)
    return doc


def _agreement_lines(result: AssessmentResult) -> list[str]:
    agreement = _agreement_record(result)
    if agreement is None:
        return []
    return [
        f"Declared CMM level: {result.declared_cmm}",
        f"Fuzzy assessment matches declared CMM: {'yes' if agreement['fuzzy_vs_declared'] else 'no'}",
        f"Statistical average matches declared CMM: {'yes' if agreement['average_vs_declared'] else 'no'}",
    ]


def render_report(
    result: AssessmentResult, fmt: str = TEXT, include_trace: bool = False
) -> bytes:
    """Render an assessment result.

    Text format: a four-row activity table plus the baseline comparison.
    Machine format: the JSON report document.
    """
    _check_format(fmt)
    if fmt == MACHINE:
        doc = report_document(result, include_trace=include_trace)
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")

    lines = [
        "Software Product Line Process Assessment Report",
        f"Organization: {result.organization}",
        "",
        "Activity | Score | Linguistic Output | CMM Level",
    ]
    for name in _GROUP_ORDER:
        entry = getattr(result, name)
        lines.append(
            f"{ACTIVITY_TITLES[name]} | {entry.score:.2f} | "
            f"{entry.classification.label} | {entry.classification.level_label}"
        )
    lines.append("")
    lines.append(
        f"Statistical average baseline: {result.baseline_average:.2f} | "
        f"{result.baseline_classification.label} | "
        f"{result.baseline_classification.level_label}"
    )
    lines.extend(_agreement_lines(result))
    if include_trace:
        lines.append("")
        lines.append(render_trace_text(result.trace).rstrip("\n"))
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_comparison(report: ComparisonReport, fmt: str = TEXT) -> bytes:
    """Render the fuzzy vs statistical-average vs declared-CMM comparison."""
    _check_format(fmt)
    if fmt == MACHINE:
        doc = {
            "tool": "splpat",
            "version": __version__,
            "organization": report.organization,
            "fuzzy": {
                "score": report.fuzzy_score,
                "score_display": f"{report.fuzzy_score:.2f}",
                "terms": list(report.fuzzy_classification.terms),
                "levels": list(report.fuzzy_classification.levels),
                "label": report.fuzzy_classification.label,
                "level_label": report.fuzzy_classification.level_label,
            },
            "average": {
                "score": report.average_score,
                "score_display": f"{report.average_score:.2f}",
                "terms": list(report.average_classification.terms),
                "levels": list(report.average_classification.levels),
                "label": report.average_classification.label,
                "level_label": report.average_classification.level_label,
            },
            "declared_cmm": report.declared_cmm,
            "agreement": None
            if report.declared_cmm is None
            else {
                "fuzzy_vs_declared": report.fuzzy_matches_declared,
                "average_vs_declared": report.average_matches_declared,
                "fuzzy_vs_average": report.fuzzy_matches_average,
            },
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")

    output_terms = build_standard_model().output_terms
    lines = [
        "Process Assessment Comparison",
        f"Organization: {report.organization}",
        "",
        "Method | Score | CMM Level",
        (
            f"Fuzzy cascade | {report.fuzzy_score:.2f} | "
            f"{report.fuzzy_classification.level_label} ({report.fuzzy_classification.label})"
        ),
        (
            f"Statistical average | {report.average_score:.2f} | "
            f"{report.average_classification.level_label} ({report.average_classification.label})"
        ),
    ]
    if report.declared_cmm is not None:
        declared_name = output_terms.terms[report.declared_cmm - 1].name
        lines.append(f"Declared CMM | - | {report.declared_cmm} ({declared_name})")
        lines.append("")
        lines.append(
            f"Fuzzy cascade matches declared CMM: "
            f"{'yes' if report.fuzzy_matches_declared else 'no'}"
        )
        lines.append(
            f"Statistical average matches declared CMM: "
            f"{'yes' if report.average_matches_declared else 'no'}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_schema(schema: QuestionnaireSchema, fmt: str = TEXT) -> bytes:
    """Render the questionnaire listing (id, activity, text)."""
    _check_format(fmt)
    if fmt == MACHINE:
        doc = {
            "tool": "splpat",
            "version": __version__,
            "questions": [
                {"id": q.id, "activity": q.activity.value, "text": q.text}
                for q in schema.questions
            ],
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    lines = ["Questionnaire"]
    for q in schema.questions:
        lines.append(f"{q.id} [{q.activity.value}] {q.text}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _fired_line(strengths: tuple[float, ...]) -> str | None:
    rules = build_standard_model().rule_base.rules
    fired = [
        f"{rule.antecedent1} & {rule.antecedent2} -> {rule.consequent} @ {s:.2f}"
        for rule, s in zip(rules, strengths)
        if s > 0.0
    ]
    if not fired:
        return None
    return "fired: " + "; ".join(fired)


def _render_group_tree(group: GroupTrace) -> list[str]:
    by_id = {node.node_id: node for node in group.nodes}
    leaf_values = {leaf.ref: leaf.value for leaf in group.leaves}

    def walk(ref: str, depth: int) -> list[str]:
        pad = "  " * depth
        if ref in by_id:
            node = by_id[ref]
            out = [
                f"{pad}{node.node_id}: combine({node.left_value:.2f}, "
                f"{node.right_value:.2f}) -> {node.output:.2f}"
            ]
            fired = _fired_line(node.rule_strengths)
            if fired:
                out.append(f"{pad}  {fired}")
            out.extend(walk(node.left, depth + 1))
            out.extend(walk(node.right, depth + 1))
            return out
        return [f"{pad}{ref} = {leaf_values[ref]:.2f}"]

    title = ACTIVITY_TITLES.get(group.group, group.group)
    return [f"{title} = {group.output:.2f}"] + walk(group.root, 1)


def render_trace_text(trace: CascadeTrace) -> str:
    """Indented per-group reduction trees with per-node rule firings."""
    lines = ["Cascade trace"]
    for name in _GROUP_ORDER:
        lines.append("")
        lines.extend(_render_group_tree(trace[name]))
    return "\n".join(lines) + "\n"
