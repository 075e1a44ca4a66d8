"""Benchmark: compiled centroid kernel vs the pure-Python fallback.

Times the raw kernel on the standard output-term grid (5001 points, five
terms) and a full 17-question assessment with each kernel patched in.

    python benchmarks/bench_centroid.py [--repeats N]
"""
import argparse
import random
import statistics
import time
from array import array

from splpat.fuzzy import _centroid_py
from splpat.fuzzy import defuzz
from splpat.fuzzy.defuzz import CentroidDefuzzifier
from splpat.model.assessment import assess
from splpat.model.questionnaire import AnswerSheet
from splpat.model.standard import build_standard_model

try:
    from splpat.fuzzy import _centroid as _centroid_c
except ImportError:
    _centroid_c = None


def bench_raw(kernel, xs, table, clip_sets, repeats):
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        for clips in clip_sets:
            kernel.centroid(xs, table, clips)
        timings.append((time.perf_counter() - start) / len(clip_sets))
    return min(timings)


def bench_assess(kernel, sheet, repeats):
    original = defuzz._kernel
    defuzz._kernel = kernel
    try:
        timings = []
        for _ in range(repeats):
            start = time.perf_counter()
            assess(sheet)
            timings.append(time.perf_counter() - start)
        return min(timings)
    finally:
        defuzz._kernel = original


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    model = build_standard_model()
    grid = CentroidDefuzzifier(model.output_terms)
    rng = random.Random(99)
    clip_sets = []
    for _ in range(200):
        clips = array("d", (rng.random() if rng.random() > 0.4 else 0.0 for _ in range(5)))
        if not any(clips):
            clips[2] = 0.5
        clip_sets.append(clips)
    sheet = AnswerSheet(
        "bench", {f"q{i}": rng.uniform(0, 50) for i in range(1, 18)}
    )

    py_raw = bench_raw(_centroid_py, grid._xs, grid._table, clip_sets, args.repeats)
    py_assess = bench_assess(_centroid_py, sheet, args.repeats)
    print(f"pure-python kernel : {py_raw * 1e6:10.1f} us/defuzzify   "
          f"{py_assess * 1e3:8.2f} ms/assessment")

    if _centroid_c is None:
        print("compiled kernel    : not built (install with Cython available)")
        return

    c_raw = bench_raw(_centroid_c, grid._xs, grid._table, clip_sets, args.repeats)
    c_assess = bench_assess(_centroid_c, sheet, args.repeats)
    print(f"compiled kernel    : {c_raw * 1e6:10.1f} us/defuzzify   "
          f"{c_assess * 1e3:8.2f} ms/assessment")
    print(f"speedup            : {py_raw / c_raw:10.1f}x raw kernel    "
          f"{py_assess / c_assess:7.1f}x end-to-end")

    mismatches = sum(
        1
        for clips in clip_sets
        if _centroid_c.centroid(grid._xs, grid._table, clips)
        != _centroid_py.centroid(grid._xs, grid._table, clips)
    )
    print(f"bit-identical      : {len(clip_sets) - mismatches}/{len(clip_sets)} clip sets")


if __name__ == "__main__":
    main()
