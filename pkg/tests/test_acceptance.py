"""Acceptance suite: one test per release criterion, at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  Tolerances are fixed here, not calibrated elsewhere:

* partition of unity within 1e-9 at all 5001 grid points, under 1 second;
* centroid anchors within 0.01 (cross-checked against a step-0.001 oracle);
* case-study linguistic outputs and CMM levels exact;
* case-study crisp scores within 0.5 (one documented deviation, see
  CALIBRATION.md);
* statistical averages within 0.01;
* commutativity bit-exact over 1000 seeded random pairs;
* every golden score moves less than 1e-3 when the grid step is halved;
* CLI output byte-stable against committed golden files.
"""
import random
import subprocess
import sys
import time

import pytest

from splpat.fuzzy.defuzz import CentroidDefuzzifier, defuzzify_centroid
from splpat.fuzzy.engine import infer_pair
from splpat.fuzzy.rules import AggregatedOutput
from splpat.model.assessment import assess, statistical_average
from splpat.model.standard import build_standard_model, standard_engine

from conftest import FIXTURES_DIR, GOLDEN_DIR
from oracle import fine_grid_centroid
import cases

MODEL = build_standard_model()

ANCHORS = {
    "Initial": 7.50,
    "Repeatable": 17.50,
    "Defined": 27.50,
    "Managed": 37.50,
    "Optimizing": 46.11,
}


def _passed(line: str):
    print(f"ACCEPTANCE PASS: {line}")


def _case_scores(result):
    return (
        result.core_asset,
        result.product_development,
        result.management,
        result.overall,
    )


def test_partition_of_unity_on_both_term_sets():
    started = time.perf_counter()
    points = [50.0 * i / 5000 for i in range(5001)]
    for term_set, label in ((MODEL.input_terms, "input"), (MODEL.output_terms, "output")):
        for x in points:
            total = sum(degree for _, degree in term_set.fuzzify(x).items())
            assert abs(total - 1.0) <= 1e-9, f"{label} set sums to {total} at x={x}"
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"partition check took {elapsed:.3f}s"
    _passed(
        "partition of unity holds within 1e-9 at 5001 points for both term sets "
        f"({elapsed * 1000:.0f} ms)"
    )


def test_analytic_centroid_anchors():
    for name, expected in ANCHORS.items():
        got = defuzzify_centroid(AggregatedOutput({name: 1.0}), MODEL.output_terms)
        assert got == pytest.approx(expected, abs=0.01), name
        oracle = fine_grid_centroid(MODEL.output_terms, {name: 1.0}, step=0.001)
        assert got == pytest.approx(oracle, abs=0.01), f"{name} vs fine-grid oracle"
    _passed("centroid anchors 7.50/17.50/27.50/37.50/46.11 within 0.01, oracle-checked")


def test_case_study_linguistic_goldens(case_sheets):
    for case in "ABCD":
        result = assess(case_sheets[case])
        for entry, terms, levels in zip(
            _case_scores(result), cases.PUBLISHED_TERMS[case], cases.PUBLISHED_LEVELS[case]
        ):
            assert entry.classification.terms == terms
            assert entry.classification.levels == levels
    overall_levels = [assess(case_sheets[c]).overall.classification.levels for c in "ABCD"]
    assert overall_levels == [(2,), (5,), (3,), (2,)]
    _passed("all 16 linguistic outputs and CMM levels match; overall levels 2,5,3,2")


def test_case_study_crisp_goldens(case_sheets):
    deviations = []
    for case in "ABCD":
        result = assess(case_sheets[case])
        for index, (entry, published) in enumerate(
            zip(_case_scores(result), cases.PUBLISHED_SCORES[case])
        ):
            pinned = cases.CALIBRATED_DEVIATIONS.get((case, index))
            if pinned is not None:
                assert entry.score == pytest.approx(pinned, abs=1e-3)
                deviations.append((case, index, entry.score, published))
            else:
                assert entry.score == pytest.approx(published, abs=0.5)
    assert deviations == [("A", 2, pytest.approx(9.7222, abs=1e-3), 8.64)]
    _passed(
        "15/16 crisp scores within 0.5 of the published tables; the remaining cell "
        "(case A management) is pinned at 9.72 per CALIBRATION.md"
    )


def test_statistical_average_baseline(case_sheets):
    for case in "ABCD":
        average, classification = statistical_average(case_sheets[case])
        assert average == pytest.approx(cases.EXPECTED_AVERAGES[case], abs=0.01)
        assert classification.levels == cases.AVERAGE_LEVELS[case]
    # case D: recomputed 31.76 (540/17); classification still "3 to 4"
    _, cls_d = statistical_average(case_sheets["D"])
    assert cls_d.level_label == "3 to 4"
    _passed("averages 26.88/35.00/33.67/31.76 within 0.01; case D classified 3 to 4")


def test_commutativity_bit_exact():
    engine = standard_engine()
    rng = random.Random(20260809)
    for _ in range(1000):
        x1 = rng.uniform(0.0, 50.0)
        x2 = rng.uniform(0.0, 50.0)
        assert infer_pair(x1, x2, engine) == infer_pair(x2, x1, engine)
    _passed("infer_pair commutes bit-exactly on 1000 seeded random pairs")


def test_quadrature_stability_under_step_halving(case_sheets):
    coarse = standard_engine(0.01)
    fine = standard_engine(0.005)
    worst = 0.0
    for case in "ABCD":
        low = assess(case_sheets[case], coarse)
        high = assess(case_sheets[case], fine)
        for a, b in zip(_case_scores(low), _case_scores(high)):
            worst = max(worst, abs(a.score - b.score))
    assert worst < 1e-3
    _passed(f"halving the grid step moves every golden score by at most {worst:.2e}")


def test_cli_golden_files_byte_stable():
    for command in ("assess", "compare"):
        for case in ("a", "b", "c", "d"):
            golden = (GOLDEN_DIR / f"{command}_case_{case}.txt").read_bytes()
            runs = [
                subprocess.run(
                    [
                        sys.executable,
                        "-m",
                        "splpat.cli",
                        command,
                        str(FIXTURES_DIR / f"case_{case}.json"),
                    ],
                    capture_output=True,
                    check=True,
                ).stdout
                for _ in range(2)
            ]
            assert runs[0] == golden
            assert runs[1] == golden
    _passed("assess and compare output byte-stable for all four fixture sheets")
