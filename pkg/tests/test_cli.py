"""
Tests for the qcorr command line: artifacts, schemas and exit codes.
"""

import csv
import io
import json
import math

import numpy as np
import pytest

from analysis import BisectionFailureError
from interfaces import EXIT_CONFIG, EXIT_IO, EXIT_NUMERICAL, EXIT_OK, EXIT_VERIFICATION, CommandLineInterface
from linalg import ConvergenceError
from parsers import CommandLineParser
from qcorr import create_interface
from src import (
    ArtifactFormatter,
    ArtifactWriter,
    ConfigError,
    ConfigProcessor,
    ReportRunner,
    ReportTable,
    RunConfig,
)


def run(argv):
    return create_interface(configure_logging=False).run(argv)


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.reader(handle))


# ============================================================
# Commands
# ============================================================

def test_counterexample_json(tmp_path, capsys):
    out = tmp_path / "ce.json"
    assert run(["counterexample", "--tol", "1e-12", "--format", "json", "--out", str(out)]) == EXIT_OK
    document = json.loads(out.read_text())
    assert set(document) == {"command", "parameters", "version", "seed", "columns", "rows", "report"}
    assert document["command"] == "counterexample"
    assert document["parameters"] == {"tol": 1e-12}
    row = document["rows"][0]
    assert row["a"] == 0.25
    assert 0.25 < row["b"] < 0.5
    assert row["verdict"] is True
    assert document["report"]["gap_identity_holds"] is True
    assert capsys.readouterr().out.strip() == f"counterexample: 1 rows -> {out} verdict=true"


def test_scan_werner_csv(tmp_path):
    out = tmp_path / "werner.csv"
    assert run(["scan-werner", "--grid-n", "100", "--format", "csv", "--out", str(out)]) == EXIT_OK
    rows = read_csv(out)
    assert rows[0] == ["F", "c1", "c2", "c3", "c3_prime", "ppt_min"]
    assert len(rows) == 102
    quarter = rows[26]
    assert float(quarter[0]) == 0.25
    assert abs(float(quarter[1])) < 1e-12


def test_scan_classical_header(tmp_path):
    out = tmp_path / "classical.csv"
    assert run(["scan-classical", "--fix", "p10=0.1", "--grid-n", "50", "--out", str(out)]) == EXIT_OK
    rows = read_csv(out)
    assert rows[0] == ["p00", "p01", "p10", "p11", "c1", "c2", "c3", "c3_prime"]
    assert len(rows) == 1 + 51 * 52 // 2
    assert all(float(row[2]) == 0.1 for row in rows[1:])


def test_scan_family(tmp_path):
    out = tmp_path / "family.csv"
    assert run(["scan-family", "--grid-n", "8", "--out", str(out)]) == EXIT_OK
    assert len(read_csv(out)) == 10


def test_artifacts_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["violations", "--pool-size", "5", "--seed", "4", "--out", str(first)]) == EXIT_OK
    assert run(["violations", "--pool-size", "5", "--seed", "4", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert b"\r\n" not in first.read_bytes()


def test_violations_between_c3_and_c3_prime(tmp_path, capsys):
    out = tmp_path / "v.csv"
    assert run(["violations", "--pool-size", "10", "--measures", "c3,c3_prime", "--out", str(out)]) == EXIT_OK
    assert read_csv(out) == [["state_a", "state_b", "measure_x", "measure_y", "x_a", "x_b", "y_a", "y_b"]]
    assert "0 rows" in capsys.readouterr().out


def test_axioms_command(tmp_path, capsys):
    out = tmp_path / "axioms.csv"
    assert run(["axioms", "--pool-size", "5", "--trials", "10", "--out", str(out)]) == EXIT_OK
    rows = read_csv(out)
    assert rows[0] == ["axiom", "measure", "trials", "passed", "worst_margin"]
    assert len(rows) == 1 + 16
    assert all(row[3] == "true" for row in rows[1:])
    assert capsys.readouterr().out.strip().endswith("passed=true")


def test_axioms_command_json(tmp_path, capsys):
    out = tmp_path / "axioms.json"
    assert run(["axioms", "--pool-size", "5", "--trials", "10", "--format", "json", "--out", str(out)]) == EXIT_OK
    document = json.loads(out.read_text())
    assert document["columns"] == ["axiom", "measure", "trials", "passed", "worst_margin"]
    assert len(document["rows"]) == 16
    assert all(row["passed"] is True for row in document["rows"])
    assert all(isinstance(row["worst_margin"], float) for row in document["rows"])
    assert capsys.readouterr().out.strip().endswith("passed=true")


def test_bounds_command(tmp_path):
    out = tmp_path / "bounds.json"
    assert run(["bounds", "--pool-size", "5", "--seed", "2", "--format", "json", "--out", str(out)]) == EXIT_OK
    document = json.loads(out.read_text())
    assert document["columns"] == ["label", "c1", "c2", "lower", "upper_loose", "upper_tight"]
    assert document["seed"] == 2
    assert all(row["lower"] <= row["c2"] + 1e-9 for row in document["rows"])


def test_default_output_path(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(["scan-werner", "--grid-n", "4"]) == EXIT_OK
    assert (tmp_path / "qcorr-scan-werner.csv").exists()
    assert not [p for p in tmp_path.iterdir() if p.name.endswith(".tmp")]


# ============================================================
# Exit codes
# ============================================================

@pytest.mark.parametrize("argv", [
    ["scan-classical"],
    ["scan-classical", "--fix", "p00=0.1"],
    ["scan-classical", "--fix", "p10"],
    ["scan-werner", "--grid-n", "1"],
    ["scan-werner", "--bogus"],
    ["scan-werner", "--grid"],
    ["counterexample", "--tol", "1e-3"],
    ["violations", "--measures", "c1"],
    ["violations", "--pool-size", "1"],
    ["plot"],
    [],
])
def test_invalid_arguments_exit_2(argv, capsys):
    assert run(argv) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_unwritable_output_exits_3(tmp_path):
    out = tmp_path / "missing-dir" / "werner.csv"
    assert run(["scan-werner", "--grid-n", "2", "--out", str(out)]) == EXIT_IO


class FailingRunner(ReportRunner):
    def run(self, config):
        return ReportTable(("verdict",), [{"verdict": False}], verified=False, summary={"verdict": False})


class RaisingRunner(ReportRunner):
    def __init__(self, error):
        super().__init__()
        self.error = error

    def run(self, config):
        raise self.error


def interface_with(runner):
    return CommandLineInterface(
        parser=CommandLineParser(),
        processor=ConfigProcessor(),
        runner=runner,
        formatter=ArtifactFormatter(),
        writer=ArtifactWriter(),
        configure_logging=False,
    )


def test_failed_verification_exits_4_but_writes_artifact(tmp_path, capsys):
    interface = interface_with(FailingRunner())
    out = tmp_path / "ce.csv"
    assert interface.run(["counterexample", "--out", str(out)]) == EXIT_VERIFICATION
    assert read_csv(out) == [["verdict"], ["false"]]
    assert capsys.readouterr().out.strip().endswith("verdict=false")


def test_failed_bisection_exits_4(tmp_path, capsys):
    out = tmp_path / "ce.csv"
    interface = interface_with(RaisingRunner(BisectionFailureError("no sign change on [0.25, 0.5]")))
    assert interface.run(["counterexample", "--out", str(out)]) == EXIT_VERIFICATION
    assert "no sign change" in capsys.readouterr().err
    assert not out.exists()


def test_numerical_failure_is_not_a_verification_failure(tmp_path, capsys):
    out = tmp_path / "werner.csv"
    interface = interface_with(RaisingRunner(ConvergenceError("off-diagonal norm 1e-3 after 100 sweeps")))
    assert interface.run(["scan-werner", "--out", str(out)]) == EXIT_NUMERICAL
    assert "qcorr: error: off-diagonal norm" in capsys.readouterr().err
    assert not out.exists()


# ============================================================
# Parser, processor and formatter
# ============================================================

def test_parser_builds_run_config():
    config = CommandLineParser().parse(["scan-classical", "--fix", "p11=0.4", "--grid-n", "7", "--format", "json"])
    assert config == RunConfig("scan-classical", fix=("p11", 0.4), grid_n=7, format="json")


def test_processor_fills_default_path():
    config = ConfigProcessor().process(RunConfig("bounds", format="json"))
    assert config.output_path == "qcorr-bounds.json"


def test_processor_rejects_duplicate_measures():
    with pytest.raises(ConfigError):
        ConfigProcessor().process(RunConfig("violations", measures=("c2", "c2")))


def test_numbers_use_seventeen_significant_digits():
    formatter = ArtifactFormatter()
    assert formatter.format_cell(0.1) == "0.10000000000000001"
    assert formatter.format_cell(0.25) == "0.25"
    assert formatter.format_cell(True) == "true"
    assert formatter.format_cell(None) == ""
    assert float(formatter.format_cell(math.pi)) == math.pi


def test_csv_quotes_labels_with_commas():
    table = ReportTable(("label", "c1"), [{"label": "classical(0,0.5,0.125,0.375)", "c1": 0.125}])
    text = ArtifactFormatter().format_csv(table)
    assert list(csv.reader(io.StringIO(text)))[1] == ["classical(0,0.5,0.125,0.375)", "0.125"]


def test_numpy_scalars_are_formatted_like_python_values():
    formatter = ArtifactFormatter()
    assert formatter.format_cell(np.bool_(True)) == "true"
    assert formatter.format_cell(np.float64(0.1)) == "0.10000000000000001"
    config = RunConfig("axioms", output_path="x.json", format="json")
    table = ReportTable(("passed", "worst_margin"), [{"passed": np.bool_(False), "worst_margin": np.float64(np.inf)}])
    assert json.loads(formatter.format_json(config, table))["rows"] == [{"passed": False, "worst_margin": None}]


def test_json_replaces_non_finite_values():
    config = RunConfig("bounds", output_path="x.json", format="json")
    table = ReportTable(("c2",), [{"c2": math.inf}])
    assert json.loads(ArtifactFormatter().format_json(config, table))["rows"] == [{"c2": None}]
