import json
import subprocess
import sys

import pytest

from conftest import FIXTURES_DIR, GOLDEN_DIR


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "splpat.cli", *args],
        capture_output=True,
        **kwargs,
    )


class TestGoldenOutputs:
    @pytest.mark.parametrize("command", ["assess", "compare"])
    @pytest.mark.parametrize("case", ["a", "b", "c", "d"])
    def test_output_is_byte_stable(self, command, case):
        golden = (GOLDEN_DIR / f"{command}_case_{case}.txt").read_bytes()
        result = run_cli(command, str(FIXTURES_DIR / f"case_{case}.json"))
        assert result.returncode == 0
        assert result.stdout == golden

    def test_assess_repeat_runs_identical(self):
        path = str(FIXTURES_DIR / "case_b.json")
        first = run_cli("assess", path)
        second = run_cli("assess", path)
        assert first.stdout == second.stdout

    def test_case_b_report_content(self):
        result = run_cli("assess", str(FIXTURES_DIR / "case_b.json"), "--format", "text")
        text = result.stdout.decode()
        assert "Optimizing" in text
        assert "46.11" in text

    def test_compare_case_a_content(self):
        text = run_cli("compare", str(FIXTURES_DIR / "case_a.json")).stdout.decode()
        assert "26.88" in text  # statistical average, level 3
        assert "Fuzzy cascade | 17.50 | 2 (Repeatable)" in text
        assert "Declared CMM | - | 2 (Repeatable)" in text

    def test_compare_without_declared_level(self, tmp_path):
        doc = json.loads((FIXTURES_DIR / "case_a.json").read_text())
        del doc["declared_cmm"]
        path = tmp_path / "sheet.json"
        path.write_text(json.dumps(doc))
        text = run_cli("compare", str(path)).stdout.decode()
        assert "Declared CMM" not in text
        assert "matches declared" not in text


class TestMachineFormats:
    def test_assess_machine_parses(self):
        result = run_cli("assess", str(FIXTURES_DIR / "case_b.json"), "--format", "machine")
        doc = json.loads(result.stdout)
        assert doc["assessments"]["overall"]["score_display"] == "46.11"
        assert doc["assessments"]["overall"]["levels"] == [5]
        assert "trace" not in doc

    def test_assess_machine_with_trace(self):
        result = run_cli(
            "assess", str(FIXTURES_DIR / "case_a.json"), "--format", "machine", "--trace"
        )
        doc = json.loads(result.stdout)
        assert len(doc["trace"]["groups"]["management"]["leaves"]) == 7

    def test_schema_machine_has_all_questions(self):
        doc = json.loads(run_cli("schema", "--format", "machine").stdout)
        assert len(doc["questions"]) == 17


class TestSchemaCommand:
    def test_schema_lists_seventeen_rows(self):
        lines = run_cli("schema").stdout.decode().strip().splitlines()
        rows = [line for line in lines if line.startswith("q")]
        assert len(rows) == 17

    def test_schema_activity_counts(self):
        text = run_cli("schema").stdout.decode()
        assert text.count("[core_asset]") == 5
        assert text.count("[product_development]") == 5
        assert text.count("[management]") == 7

    def test_q12_text_present(self):
        assert "description and analysis of domain" in run_cli("schema").stdout.decode()


class TestTraceAndExplain:
    def test_assess_trace_shows_management_leaves(self):
        result = run_cli("assess", str(FIXTURES_DIR / "case_a.json"), "--trace")
        text = result.stdout.decode()
        for i in range(11, 18):
            assert f"q{i} = " in text

    def test_explain_renders_indented_tree(self):
        text = run_cli("explain", str(FIXTURES_DIR / "case_a.json")).stdout.decode()
        assert "Cascade trace" in text
        assert "fired:" in text
        assert "combine(" in text


class TestExitCodes:
    def test_missing_file_exits_two_naming_path(self):
        result = run_cli("assess", "no_such_sheet.json")
        assert result.returncode == 2
        assert "no_such_sheet.json" in result.stderr.decode()

    def test_invalid_sheet_exits_one(self, tmp_path):
        doc = json.loads((FIXTURES_DIR / "case_a.json").read_text())
        doc["answers"]["q3"] = 99
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        result = run_cli("assess", str(path))
        assert result.returncode == 1
        assert "q3" in result.stderr.decode()

    def test_malformed_json_exits_one(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nope")
        result = run_cli("assess", str(path))
        assert result.returncode == 1

    def test_success_exits_zero(self):
        assert run_cli("schema").returncode == 0
