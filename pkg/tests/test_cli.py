from __future__ import annotations

import json
import math

import pytest

from osserman.cli import RunConfig, main


def _run(capsys, *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_list(capsys) -> None:
    code, report = _run(capsys, "list")
    assert code == 0
    assert report["command"] == "list"
    assert "scherk_doubly" in {entry["key"] for entry in report["entries"]}
    references = {entry["key"]: entry["reference"] for entry in report["entries"]}
    assert all(references.values())
    assert "Hoffman–Osserman" in references["catenoid_deform"]
    assert "−4π" in references["Fplus"]


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (["verify", "--chart", "paraboloid_test", "--n", "20"], 1),
        (["verify", "--chart", "scherk_doubly:lambda=0.7", "--n", "50"], 0),
        (["verify", "--chart", "sigmaN:2", "--n", "50"], 0),
        (["verify", "--chart", "holomorphic", "--n", "30"], 0),
    ],
)
def test_verify(argv: list[str], expected: int, capsys) -> None:
    code, report = _run(capsys, *argv)
    assert code == expected
    assert report["passed"] is (expected == 0)
    assert {check["name"] for check in report["checks"]} >= {"mss", "hyperquadric", "divergence_identities"}


def test_verify_reports_osserman_checks_for_families(capsys) -> None:
    _, report = _run(capsys, "verify", "--chart", "scherk_doubly", "--lambda", "0.7", "--n", "30")
    assert report["mu"] == pytest.approx(1.0 / math.tanh(0.7))
    assert {"osserman", "hyperplane", "conformal_invariance"} <= {check["name"] for check in report["checks"]}


def test_gauss_fit(capsys) -> None:
    code, report = _run(capsys, "gauss", "--chart", "helicoid_deform:lambda=1", "--fit")
    assert code == 0
    assert report["fit"]["degenerate"]
    assert report["expected_distance"] <= 1e-6


def test_curvature(capsys) -> None:
    code, report = _run(capsys, "curvature", "--family", "Fplus", "--T", "4", "6", "--n", "100")
    assert code == 0
    assert report["expected"] == pytest.approx(-4.0 * math.pi)
    assert [row["T"] for row in report["rows"]] == [4.0, 6.0]


def test_potential(capsys) -> None:
    code, report = _run(capsys, "potential", "--chart", "scherk", "--target", "0.4", "-0.3")
    assert code == 0
    assert report["error"] <= 1e-8
    assert report["disagreement"] <= 1e-10
    assert report["path_independence_checked"] is True


def test_potential_detects_a_non_exact_one_form(capsys) -> None:
    code, report = _run(
        capsys, "potential", "--chart", "catenoid_annulus", "--basepoint", "-2", "-2", "--target", "2", "2",
    )
    assert code == 1
    assert report["error"]["cause"] == "NonSimplyConnectedDomain"


@pytest.mark.parametrize(
    ("argv", "cause"),
    [
        (["verify", "--chart", "nonexistent"], "RegistryError"),
        (["verify", "--chart", "helicoid", "--lambda", "0.3"], "RegistryError"),
        (["verify", "--chart", "sigmaN:0"], "ParameterError"),
        (["verify", "--chart", "flat", "--bogus"], "UsageError"),
        (["verify", "--chart", "flat", "--n", "0"], "UsageError"),
        (["verify", "--chart", "flat", "--mu", "0"], "UsageError"),
        (["verify", "--chart", "Fplus"], "UsageError"),
        (["solve", "--nx", "9"], "UsageError"),
        (["sample", "--chart", "flat", "--project", "112"], "UsageError"),
        (["curvature", "--family", "Fplus", "--n", "8"], "UsageError"),
    ],
)
def test_usage_errors(argv: list[str], cause: str, capsys) -> None:
    code, report = _run(capsys, *argv)
    assert code == 2
    assert report["error"]["cause"] == cause
    assert report["schema_version"] == 1


def test_sample_patch_mesh(capsys) -> None:
    code = main(["sample", "--family", "XN:1", "--grid", "5", "--format", "obj"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert sum(line.startswith("v ") for line in lines) == 25
    assert sum(line.startswith("f ") for line in lines) == 32
    assert sum(line.startswith("# x4 ") for line in lines) == 25


def test_sample_chart_point_cloud(capsys, tmp_path) -> None:
    out = tmp_path / "cloud.csv"
    assert main(["sample", "--chart", "flat", "--n", "10", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,y,f,g"
    assert len(lines) == 11


def test_sample_json_rows(capsys) -> None:
    code, report = _run(capsys, "sample", "--chart", "scherk_doubly:lambda=0.7", "--n", "12", "--format", "json")
    assert code == 0
    assert report["columns"] == ["x", "y", "f", "g"]
    assert len(report["samples"]) == 12 and all(len(row) == 4 for row in report["samples"])

    code, report = _run(capsys, "sample", "--family", "Fplus", "--grid", "4", "--format", "json")
    assert code == 0
    assert report["columns"] == ["u", "v", "x1", "x2", "x3", "x4"]
    assert len(report["samples"]) == 16


def test_solve_writes_the_grid_and_reports_to_stdout(capsys, tmp_path) -> None:
    out = tmp_path / "grid.json"
    argv = ["solve", "--chart", "scherk_doubly:lambda=0.5", "--nx", "9", "--ny", "9", "--out", str(out)]
    code, first = _run(capsys, *argv)
    assert code == 0
    assert first["converged"] and first["command"] == "solve"
    assert first["max_nodal_error"] <= 1e-2
    assert json.loads(out.read_text())["nx"] == 9

    _, second = _run(capsys, *argv)
    assert first == second

    code, warm = _run(capsys, "solve", "--input", str(out), "--warm-start")
    assert code == 0
    assert warm["iterations"] <= 1


def test_run_config_resolves_keys() -> None:
    config = RunConfig.from_arguments(["gauss", "--chart", "catenoid_deform", "--lambda", "0.3"])
    assert config.chart.mu == pytest.approx(1.0 / math.tanh(0.3))
    assert config.overrides == {"lambda": 0.3}
