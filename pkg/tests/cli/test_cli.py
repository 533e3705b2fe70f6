"""Tests for the command-line entry point."""
from __future__ import annotations

import csv
from pathlib import Path

import orjson
import pytest

from src.xxzring.main import main


def _write(path: Path, document: dict) -> Path:
    path.write_bytes(orjson.dumps(document))
    return path


def _read_csv_rows(path: Path) -> list[dict[str, str]]:
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


@pytest.fixture
def plan_file(tmp_path) -> Path:
    return _write(
        tmp_path / "plan.json",
        {
            "base": {"n": 6, "j": 1.0, "jz": 0.65, "b": 0.4, "temperature": 1.0, "impurities": [2, 4]},
            "axis1": {"param": "alpha", "grid": [0.5, 2.0]},
            "axis2": {"param": "temperature", "grid": [0.5, 1.0]},
            "pairs": [[1, 2], [2, 3]],
        },
    )


class TestPresetCommand:

    def test_prints_spec_document(self, capsys):
        assert main(["preset", "fig1a"]) == 0
        document = orjson.loads(capsys.readouterr().out)
        assert document["impurities"] == [4, 6]
        assert set(document) == {"n", "j", "jz", "b", "temperature", "impurities", "alpha", "beta"}

    def test_unknown_preset(self, capsys):
        assert main(["preset", "fig9"]) == 1
        error = orjson.loads(capsys.readouterr().err.strip().splitlines()[-1])["error"]
        assert error["code"] == "PRESET_NOT_FOUND"


class TestSweepCommand:

    def test_writes_csv_and_json(self, tmp_path, plan_file, capsys):
        out, full = tmp_path / "out" / "sweep.csv", tmp_path / "sweep.json"
        assert main(["sweep", "--plan", str(plan_file), "--out", str(out), "--json", str(full), "--threads", "2"]) == 0
        rows = _read_csv_rows(out)
        assert len(rows) == 2 * 2 * 2
        assert list(rows[0]) == ["axis1", "axis2", "pair", "concurrence"]
        assert (rows[0]["axis1"], rows[0]["axis2"], rows[0]["pair"]) == ("0.5", "0.5", "1-2")
        document = orjson.loads(full.read_bytes())
        assert len(document["rows"]) == 8
        assert set(document["metadata"]) == {"timestamp", "code_version", "spec_hash", "plan_hash"}
        assert "8 rows" in capsys.readouterr().out

    def test_repeat_runs_are_byte_identical(self, tmp_path, plan_file):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["sweep", "--plan", str(plan_file), "--out", str(first), "--threads", "1"]) == 0
        assert main(["sweep", "--plan", str(plan_file), "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_missing_plan(self, tmp_path, capsys):
        code = main(["sweep", "--plan", str(tmp_path / "missing.json"), "--out", str(tmp_path / "x.csv")])
        assert code == 1
        assert "missing.json" in capsys.readouterr().err
        assert not (tmp_path / "x.csv").exists()

    @pytest.mark.parametrize("threads", ["-1", "two"])
    def test_bad_thread_count_is_usage_error(self, tmp_path, plan_file, threads, capsys):
        out = tmp_path / "x.csv"
        assert main(["sweep", "--plan", str(plan_file), "--out", str(out), "--threads", threads]) == 1
        assert "USAGE_ERROR" in capsys.readouterr().err
        assert not out.exists()

    def test_invalid_plan(self, tmp_path, capsys):
        plan = _write(tmp_path / "bad.json", {"base": {"n": 2}, "axis1": {"param": "alpha", "grid": [1.0]}})
        assert main(["sweep", "--plan", str(plan), "--out", str(tmp_path / "x.csv")]) == 1
        assert "VALIDATION_ERROR" in capsys.readouterr().err


class TestCriticalTemperatureCommand:

    def test_no_interaction_spec_fails_numerically(self, tmp_path, capsys):
        spec = _write(tmp_path / "free.json", {"n": 4, "j": 0.0, "jz": 0.0, "b": 0.4, "temperature": 1.0})
        code = main(["tc", "--spec", str(spec), "--pair", "1,2", "--t-lo", "0.1", "--t-hi", "5"])
        assert code == 2
        assert "BRACKET_ERROR" in capsys.readouterr().err

    def test_preset_with_override(self, capsys):
        code = main(["tc", "--preset", "fig1b", "--alpha", "2", "--pair", "3,4", "--t-lo", "1", "--t-hi", "10", "--tol", "0.01"])
        assert code == 0
        document = orjson.loads(capsys.readouterr().out)
        assert document["pair"] == "3-4"
        assert 1.0 < document["critical_temperature"] < 10.0
        assert document["tol"] == 0.01

    def test_bad_pair(self, capsys):
        assert main(["tc", "--preset", "fig1a", "--pair", "2,2", "--t-lo", "1", "--t-hi", "2"]) == 1


class TestValidateCommand:

    def test_reports_bonds_and_dumps_hamiltonian(self, tmp_path, capsys):
        spec = _write(tmp_path / "ring.json", {"n": 4, "j": 1.0, "jz": 0.65, "b": 0.4, "temperature": 1.0, "impurities": [2]})
        dump = tmp_path / "h.csv"
        assert main(["validate", str(spec), "--dump-hamiltonian", str(dump)]) == 0
        document = orjson.loads(capsys.readouterr().out)
        assert document["valid"] is True
        assert [bond["kind"] for bond in document["bonds"]] == ["mixed", "mixed", "pure", "pure"]
        lines = dump.read_text().split("\n")
        assert lines[0] == "16"
        assert len(lines[1].split(",")) == 16

    def test_rejects_ring_above_cap(self, tmp_path, capsys):
        spec = _write(tmp_path / "big.json", {"n": 40, "j": 1.0, "jz": 0.65, "b": 0.4, "temperature": 1.0})
        assert main(["validate", str(spec)]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        error = orjson.loads(captured.err.strip().splitlines()[-1])["error"]
        assert error["code"] == "VALIDATION_ERROR"
        assert error["details"]["validation_errors"][0]["field"] == "n"

    def test_rejects_unknown_keys(self, tmp_path, capsys):
        spec = _write(tmp_path / "ring.json", {"n": 4, "j": 1.0, "jz": 0.65, "b": 0.4, "temperature": 1.0, "gamma": 2})
        assert main(["validate", str(spec)]) == 1
        assert "gamma" in capsys.readouterr().err


class TestUsage:

    @pytest.mark.parametrize("argv", [["frobnicate"], [], ["sweep", "--plan"], ["preset", "fig1a", "--bogus"]])
    def test_usage_errors_exit_one(self, argv, capsys):
        assert main(argv) == 1
        assert "USAGE_ERROR" in capsys.readouterr().err
