"""The compiled and pure-Python centroid kernels must agree bit-for-bit."""
import json
import random
import subprocess
import sys
from array import array

import pytest

from splpat.fuzzy import _centroid_py
from splpat.fuzzy.defuzz import KERNEL_BACKEND, CentroidDefuzzifier
from splpat.model.standard import build_standard_model

compiled = pytest.importorskip(
    "splpat.fuzzy._centroid", reason="compiled kernel not built"
)

OUTPUT = build_standard_model().output_terms


def test_backend_reports_compiled():
    assert KERNEL_BACKEND == "compiled"
    assert compiled.BACKEND == "compiled"
    assert _centroid_py.BACKEND == "python"


def test_kernels_bit_identical_on_random_clips():
    d = CentroidDefuzzifier(OUTPUT)
    rng = random.Random(1234)
    for _ in range(500):
        clips = array("d", (rng.random() if rng.random() > 0.3 else 0.0 for _ in range(5)))
        if not any(clips):
            clips[rng.randrange(5)] = rng.random() + 1e-9
        assert compiled.centroid(d._xs, d._table, clips) == _centroid_py.centroid(
            d._xs, d._table, clips
        )


def test_kernels_bit_identical_on_fine_grid():
    d = CentroidDefuzzifier(OUTPUT, step=0.005)
    clips = array("d", (0.25, 0.0, 0.9, 0.1, 0.5))
    assert compiled.centroid(d._xs, d._table, clips) == _centroid_py.centroid(
        d._xs, d._table, clips
    )


def test_pure_python_fallback_selected_via_env(tmp_path):
    script = (
        "import json, splpat.fuzzy.defuzz as d\n"
        "from splpat.model.assessment import assess\n"
        "from splpat.model.questionnaire import AnswerSheet\n"
        "answers = {f'q{i}': 30.0 for i in range(1, 18)}\n"
        "r = assess(AnswerSheet('X', answers))\n"
        "print(json.dumps({'backend': d.KERNEL_BACKEND, 'overall': r.overall.score}))\n"
    )
    result = subprocess.run(
        [sys.executable, "-c", script],
        capture_output=True,
        text=True,
        env={"SPLPAT_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
        check=True,
    )
    doc = json.loads(result.stdout)
    assert doc["backend"] == "python"

    from splpat.model.assessment import assess
    from splpat.model.questionnaire import AnswerSheet

    local = assess(AnswerSheet("X", {f"q{i}": 30.0 for i in range(1, 18)}))
    assert doc["overall"] == local.overall.score
