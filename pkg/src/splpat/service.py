"""Stateless HTTP API over the assessment model.

Endpoints:

* ``GET /api/schema`` -- the questionnaire (same payload as ``splpat schema
  --format machine``).
* ``POST /api/assess`` -- full assessment of a submitted answer map,
  including the cascade trace and a what-if sensitivity map.

Every request is an independent pure evaluation over the immutable model;
nothing is persisted server-side.  Cross-origin use is allowed so the web
UI can run from another origin, and built UI assets can optionally be
served under ``/``.
"""
from __future__ import annotations

import json
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .errors import SheetParseError, ValidationError
from .model.assessment import DEFAULT_SENSITIVITY_DELTA, assess, sensitivity
from .model.questionnaire import AnswerSheet
from .model.standard import build_standard_model
from .report.render import render_schema, report_document

_REQUEST_FIELDS = ("organization", "declared_cmm", "answers", "sensitivity_delta")
_ROUTES = {"/api/schema": ("GET",), "/api/assess": ("POST",)}


def _parse_assess_request(raw: bytes) -> tuple[AnswerSheet, float]:
    try:
        doc = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise SheetParseError(f"body is not valid UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SheetParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    if not isinstance(doc, dict):
        raise ValidationError(["body: top level must be an object"])
    problems = [f"{key}: unknown field" for key in doc if key not in _REQUEST_FIELDS]

    organization = doc.get("organization", "")
    if not isinstance(organization, str):
        problems.append(f"organization: must be a string, got {organization!r}")
    if "answers" not in doc:
        problems.append("answers: missing field")
    elif not isinstance(doc["answers"], dict):
        problems.append("answers: must be an object mapping q1..q17 to numbers")

    delta = doc.get("sensitivity_delta", DEFAULT_SENSITIVITY_DELTA)
    if isinstance(delta, bool) or not isinstance(delta, (int, float)) or delta < 0:
        problems.append(f"sensitivity_delta: must be a number >= 0, got {delta!r}")

    if problems:
        raise ValidationError(problems)
    sheet = AnswerSheet(
        organization=organization,
        answers=doc["answers"],
        declared_cmm=doc.get("declared_cmm"),
    )
    return sheet, float(delta)


def assess_response_document(sheet: AnswerSheet, delta: float) -> dict:
    """Report document plus sensitivity map, as served by POST /api/assess."""
    result = assess(sheet)
    doc = report_document(result, include_trace=True)
    doc["sensitivity"] = {
        "delta": delta,
        "overall_delta": sensitivity(sheet, delta),
    }
    return doc


class AssessmentRequestHandler(BaseHTTPRequestHandler):
    """Routes the two API endpoints and optional static UI assets."""

    server_version = "splpat"
    ui_root: Path | None = None

    # -- helpers ---------------------------------------------------------
    def _send(self, status: int, body: bytes, content_type: str):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, doc: dict):
        self._send(status, (json.dumps(doc, indent=2) + "\n").encode("utf-8"), "application/json")

    def _send_error_json(self, status: int, kind: str, detail: str, problems=None):
        doc = {"error": kind, "detail": detail}
        if problems is not None:
            doc["problems"] = list(problems)
        self._send_json(status, doc)

    def _reject_method(self, path: str):
        allowed = _ROUTES[path]
        self.send_response(405)
        self.send_header("Allow", ", ".join(allowed))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def _path_only(self) -> str:
        return self.path.split("?", 1)[0]

    # -- handlers --------------------------------------------------------
    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        path = self._path_only()
        if path == "/api/schema":
            body = render_schema(build_standard_model().schema, fmt="machine")
            self._send(200, body, "application/json")
            return
        if path in _ROUTES:
            self._reject_method(path)
            return
        if self.ui_root is not None and self._serve_static(path):
            return
        self._send_error_json(404, "not_found", f"unknown path {path}")

    def do_POST(self):
        path = self._path_only()
        if path == "/api/assess":
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length)
            try:
                sheet, delta = _parse_assess_request(raw)
            except SheetParseError as exc:
                self._send_error_json(400, "parse", str(exc))
                return
            except ValidationError as exc:
                self._send_error_json(400, "validation", str(exc), problems=exc.problems)
                return
            self._send_json(200, assess_response_document(sheet, delta))
            return
        if path in _ROUTES:
            self._reject_method(path)
            return
        self._send_error_json(404, "not_found", f"unknown path {path}")

    def _serve_static(self, path: str) -> bool:
        relative = path.lstrip("/") or "index.html"
        root = self.ui_root.resolve()
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            return False
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            return False
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type)
        return True

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        # Default implementation writes to stderr, which is what we want for
        # request logging; just keep the noise down for tests.
        import sys

        print(f"{self.address_string()} - {format % args}", file=sys.stderr)


def create_server(
    bind: str = "127.0.0.1", port: int = 8000, ui_root: str | Path | None = None
) -> ThreadingHTTPServer:
    """Build (and bind) the threaded HTTP server without starting it."""
    handler = type(
        "BoundHandler",
        (AssessmentRequestHandler,),
        {"ui_root": Path(ui_root) if ui_root else None},
    )
    server = ThreadingHTTPServer((bind, port), handler)
    server.daemon_threads = True
    return server


def serve(bind: str = "127.0.0.1", port: int = 8000, ui_root: str | Path | None = None):
    """Run the API until interrupted, announcing the bound address."""
    server = create_server(bind=bind, port=port, ui_root=ui_root)
    host, actual_port = server.server_address[:2]
    print(f"splpat API listening on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
