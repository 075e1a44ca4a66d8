"""Answer-sheet persistence and report rendering."""

from .sheet_io import parse_answer_sheet, render_answer_sheet
from .render import (
    ACTIVITY_TITLES,
    render_comparison,
    render_report,
    render_schema,
    render_trace_text,
    report_document,
)

__all__ = [
    "parse_answer_sheet",
    "render_answer_sheet",
    "render_report",
    "render_comparison",
    "render_schema",
    "render_trace_text",
    "report_document",
    "ACTIVITY_TITLES",
]
