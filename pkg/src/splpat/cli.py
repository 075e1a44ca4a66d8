"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 I/O or bind failure.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import SheetParseError, ValidationError
from .model.assessment import assess, compare_report
from .model.standard import build_standard_model
from .report.render import TEXT, render_comparison, render_report, render_schema, render_trace_text
from .report.sheet_io import parse_answer_sheet

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splpat",
        description="Fuzzy-logic software product line process assessment",
    )
    parser.add_argument("--version", action="version", version=f"splpat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_assess = sub.add_parser("assess", help="assess an answer-sheet file")
    p_assess.add_argument("path", help="answer-sheet document (JSON)")
    p_assess.add_argument("--format", choices=("text", "machine"), default=TEXT)
    p_assess.add_argument(
        "--trace", action="store_true", help="append the full cascade trace"
    )

    p_compare = sub.add_parser(
        "compare", help="compare fuzzy, statistical-average and declared CMM levels"
    )
    p_compare.add_argument("path", help="answer-sheet document (JSON)")
    p_compare.add_argument("--format", choices=("text", "machine"), default=TEXT)

    p_schema = sub.add_parser("schema", help="list the questionnaire")
    p_schema.add_argument("--format", choices=("text", "machine"), default=TEXT)

    p_explain = sub.add_parser(
        "explain", help="render the cascade trace for an answer-sheet file"
    )
    p_explain.add_argument("path", help="answer-sheet document (JSON)")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--bind", default="127.0.0.1")
    p_serve.add_argument(
        "--ui", default=None, metavar="DIR", help="also serve static UI assets from DIR"
    )
    return parser


def _read_file(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _emit(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _load_sheet(path: str):
    return parse_answer_sheet(_read_file(path))


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "assess":
            result = assess(_load_sheet(args.path))
            _emit(render_report(result, fmt=args.format, include_trace=args.trace))
        elif args.command == "compare":
            report = compare_report(_load_sheet(args.path))
            _emit(render_comparison(report, fmt=args.format))
        elif args.command == "schema":
            _emit(render_schema(build_standard_model().schema, fmt=args.format))
        elif args.command == "explain":
            result = assess(_load_sheet(args.path))
            _emit(render_trace_text(result.trace).encode("utf-8"))
        elif args.command == "serve":
            from .service import serve

            try:
                serve(bind=args.bind, port=args.port, ui_root=args.ui)
            except OSError as exc:
                print(f"splpat: cannot bind {args.bind}:{args.port}: {exc}", file=sys.stderr)
                return EXIT_IO
    except (ValidationError, SheetParseError) as exc:
        print(f"splpat: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        path = getattr(exc, "filename", None)
        detail = f"{path}: {exc.strerror}" if path else str(exc)
        print(f"splpat: cannot read input: {detail}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
