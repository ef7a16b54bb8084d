from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Tuple

import pytest

from cliquegraph.cli import (
    EXIT_IO,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    main,
)
from cliquegraph.core.graph6 import parse_graph6, write_graph6
from cliquegraph.core.srg import SrgParams, classify_srg
from cliquegraph.data.families import rook_graph
from cliquegraph.data.settings import ENV_EXACT_LIMIT
from cliquegraph.report import SCHEMA, structural_shape


def run_cli(capsys: pytest.CaptureFixture[str], argv: List[str]) -> Tuple[int, str, str]:
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_rook_input(tmp_path: Path, n: int = 3) -> Path:
    path = tmp_path / f"rook{n}.g6"
    path.write_text(write_graph6(rook_graph(n)) + "\n", encoding="ascii")
    return path


def entries_of(spectrum: List[Dict[str, object]]) -> List[Tuple[object, object]]:
    return [(entry["value"], entry["multiplicity"]) for entry in spectrum]


# --- gen ----------------------------------------------------------------------------
def test_gen_writes_one_graph6_line(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run_cli(capsys, ["gen", "rook", "3"])
    assert code == EXIT_OK
    graph = parse_graph6(out.strip())
    found = classify_srg(graph)
    assert found is not None and found.params == SrgParams(9, 4, 1, 2)


def test_gen_to_a_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    target = tmp_path / "gq.g6"
    code, out, _ = run_cli(capsys, ["gen", "gq-dual-collinearity", "symplectic", "2", "-o", str(target)])
    assert code == EXIT_OK
    assert out == ""
    assert parse_graph6(target.read_text(encoding="ascii")).n == 15


@pytest.mark.parametrize(
    "argv, message",
    [
        (["gen", "hypercube", "3"], "unknown family"),
        (["gen", "rook", "three"], "must be integers"),
        (["gen", "rook", "3", "4"], "takes 1 integer parameter"),
        (["gen", "gq-symplectic", "4"], "prime fields"),
    ],
)
def test_gen_usage_errors(capsys: pytest.CaptureFixture[str], argv: List[str], message: str) -> None:
    code, _, err = run_cli(capsys, argv)
    assert code == EXIT_USAGE
    assert message in err


# --- analyze --------------------------------------------------------------------------
def test_analyze_rook_graph(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, out, _ = run_cli(capsys, ["analyze", str(write_rook_input(tmp_path)), "--omega", "3"])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["schema"] == SCHEMA
    assert report["command"] == "analyze"
    assert report["graph"]["n"] == 9 and report["graph"]["k"] == 4
    assert report["clique_regular_orders"] == [2, 3]
    assert report["srg"] == {"n": 9, "k": 4, "lambda": 1, "mu": 2, "boring": False}
    assert report["spectrum"]["mode"] == "exact"
    assert entries_of(report["spectrum"]["entries"]) == [("4", 1), ("1", 4), ("-2", 4)]

    (block,) = report["cliques"]
    assert block["clique_count"] == 6
    assert block["clique_regular"] is True
    assert block["regular_clique_assembly"] is True
    assert block["clique_graph"]["shape"] == "K_{3,3}"
    assert block["clique_graph"]["srg"]["boring"] is True
    assert block["bounds"]["interlacing"]["holds"] and block["bounds"]["degree"]["holds"]
    assert block["transfer"] == {
        "provenance": "exact",
        "holds": True,
        "predicted_charpoly": ["0", "0", "0", "0", "-9", "0", "1"],
    }


def test_analyze_defaults_to_the_clique_number(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, out, _ = run_cli(capsys, ["analyze", str(write_rook_input(tmp_path, 4))])
    assert code == EXIT_OK
    (block,) = json.loads(out)["cliques"]
    assert block["omega"] == 4
    assert block["clique_graph"]["shape"] == "K_{4,4}"


def test_analyze_reports_a_counterexample_edge(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = tmp_path / "k4.g6"
    path.write_text("C~\n", encoding="ascii")
    code, out, _ = run_cli(capsys, ["analyze", str(path), "--omega", "3"])
    assert code == EXIT_OK
    (block,) = json.loads(out)["cliques"]
    assert block["clique_regular"] is False
    assert block["counterexample"] == {"edge": [0, 1], "cliques_containing": 2}
    assert "bounds" not in block


def test_analyze_pretty_output(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, out, _ = run_cli(capsys, ["analyze", str(write_rook_input(tmp_path)), "--omega", "3", "--pretty"])
    assert code == EXIT_OK
    assert out.startswith("Graph: n=9 edges=18")
    assert "Strongly regular: srg(9, 4, 1, 2)" in out
    assert "C_omega: n=6 edges=9 [K_{3,3}]" in out


def test_analyze_timestamp(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    _, out, _ = run_cli(capsys, ["analyze", str(write_rook_input(tmp_path)), "--timestamp"])
    assert "timestamp" in json.loads(out)


def test_analyze_input_errors(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    two_lines = tmp_path / "two.g6"
    two_lines.write_text("Bw\nBw\n", encoding="ascii")
    code, _, err = run_cli(capsys, ["analyze", str(two_lines)])
    assert code == EXIT_USAGE
    assert "exactly one graph6 line" in err

    bad = tmp_path / "bad.g6"
    bad.write_text("Bx\n", encoding="ascii")
    assert run_cli(capsys, ["analyze", str(bad)])[0] == EXIT_USAGE

    assert run_cli(capsys, ["analyze", str(tmp_path / "missing.g6")])[0] == EXIT_IO


def test_analyze_exact_past_the_limit(
    capsys: pytest.CaptureFixture[str], tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setenv(ENV_EXACT_LIMIT, "4")
    path = write_rook_input(tmp_path)
    code, _, err = run_cli(capsys, ["analyze", str(path), "--exact"])
    assert code == EXIT_RESOURCE
    assert "without --exact" in err

    code, out, _ = run_cli(capsys, ["analyze", str(path)])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["spectrum"]["mode"] == "numeric"
    assert report["cliques"][0]["transfer"]["provenance"] == "numeric"
    assert report["cliques"][0]["transfer"]["holds"] is True


# --- predict --------------------------------------------------------------------------
def test_predict_locally_linear_parameters(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run_cli(capsys, ["predict", "9", "4", "1", "2", "--omega", "3"])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["srg_spectrum"] == {"k": 4, "r": "1", "s": "-2", "f": 4, "g": 4}
    assert report["clique_graph"]["is_srg"] is True
    assert report["clique_graph"]["predicted"] == {"n": 6, "k": 3, "lambda": 0, "mu": 3}
    assert report["rca_necessary_condition"] is True
    assert report["locally_linear_params"] == {"n": 6, "k": 3, "lambda": 0, "mu": 3}
    assert report["same_parameters"] is False


def test_predict_conway_parameters(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run_cli(capsys, ["predict", "99", "14", "1", "2", "--omega", "3"])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["clique_graph"]["is_srg"] is False
    assert report["clique_graph"]["predicted"] is None
    assert entries_of(report["clique_graph"]["predicted_spectrum"]) == [("18", 1), ("7", 54), ("0", 44), ("-3", 132)]
    assert "locally_linear_params" not in report


def test_predict_pretty_output(capsys: pytest.CaptureFixture[str]) -> None:
    _, out, _ = run_cli(capsys, ["predict", "15", "6", "1", "3", "--omega", "3", "--pretty"])
    assert "Input: srg(15, 6, 1, 3), omega=3" in out
    assert "Predicted parameters: srg(15, 6, 1, 3)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["predict", "10", "3", "0", "2", "--omega", "2"],
        ["predict", "15", "6", "1", "3", "--omega", "4"],
        ["predict", "4", "3", "2", "0", "--omega", "2"],
    ],
)
def test_predict_rejects_invalid_input(capsys: pytest.CaptureFixture[str], argv: List[str]) -> None:
    assert run_cli(capsys, argv)[0] == EXIT_USAGE


def test_argument_errors_exit_with_usage_code() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["predict", "9", "4", "1", "2"])
    assert excinfo.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        main(["predict", "9", "4", "1", "2", "--omega", "1"])
    assert excinfo.value.code == EXIT_USAGE


# --- verify --------------------------------------------------------------------------
def test_verify_three_graph_classification(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run_cli(capsys, ["verify", "three-graph-classification"])
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["passed"] is True
    rejections = {entry["candidate"]: entry["reason"] for entry in result["details"]["search"]["rejections"]}
    assert "absolute bound" in rejections["s=-k/2: srg(63, 22, 1, 11)"]


def test_verify_small_sample_run(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run_cli(
        capsys, ["verify", "clique-orders", "--samples", "20", "--seed", "3", "--corpus", "quick", "--pretty"]
    )
    assert code == EXIT_OK
    assert out.startswith("clique-orders: PASS")


def test_verify_usage_errors(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(capsys, ["verify", "no-such-theorem"])[0] == EXIT_USAGE
    assert run_cli(capsys, ["verify", "gq-duality", "--q", "4"])[0] == EXIT_USAGE
    assert run_cli(capsys, ["verify", "srg-classification", "--corpus", "huge"])[0] == EXIT_USAGE


# --- report helpers ------------------------------------------------------------------
def test_structural_shapes() -> None:
    assert structural_shape(parse_graph6("?")) == "empty"
    assert structural_shape(parse_graph6("B?")) == "edgeless"
    assert structural_shape(parse_graph6("Bw")) == "K_3"
    assert structural_shape(rook_graph(3)) is None
