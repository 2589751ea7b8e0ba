"""End-to-end command-line behavior, including exit codes."""

from __future__ import annotations

import json

import pytest

from oriented_ideals.cli import main
from oriented_ideals.covers import CAP_ENV_VAR


LINE5 = {
    "vertices": ["x1", "x2", "x3", "x4", "x5"],
    "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x5"]],
    "weights": {"x1": 1, "x2": 2, "x3": 1, "x4": 1, "x5": 1},
}

LINE3 = {
    "vertices": ["x1", "x2", "x3"],
    "edges": [["x1", "x2"], ["x2", "x3"]],
    "weights": {"x1": 1, "x2": 2, "x3": 2},
}


@pytest.fixture
def graph_file(tmp_path):
    def write(data, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_covers_text(graph_file, capsys):
    code, out, _ = run(capsys, "covers", graph_file(LINE3))
    assert code == 0
    assert "strong covers (3):" in out
    assert "{x2}" in out
    assert "{x1, x3}" in out


def test_covers_json_partition(graph_file, capsys):
    code, out, _ = run(
        capsys, "covers", graph_file(LINE3), "--json", "--partition"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload[0] == {"cover": ["x2"], "L1": ["x2"], "L2": [], "L3": []}


def test_covers_minimal_and_maximal(graph_file, capsys):
    code, out, _ = run(capsys, "covers", graph_file(LINE5), "--minimal", "--json")
    assert code == 0
    assert json.loads(out) == [
        ["x2", "x4"],
        ["x1", "x3", "x4"],
        ["x1", "x3", "x5"],
        ["x2", "x3", "x5"],
    ]
    code, out, _ = run(capsys, "covers", graph_file(LINE5), "--maximal", "--json")
    assert code == 0
    assert len(json.loads(out)) == 4


def test_decompose_json(graph_file, capsys):
    code, out, _ = run(capsys, "decompose", graph_file(LINE3), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["edge_ideal"] == ["x1*x2^2", "x2*x3^2"]
    assert payload["intersection_equals_edge_ideal"] is True
    assert [c["cover"] for c in payload["components"]] == [
        ["x2"], ["x1", "x3"], ["x2", "x3"]
    ]


def test_power_ordinary(graph_file, capsys):
    code, out, _ = run(
        capsys, "power", graph_file(LINE3), "--ordinary", "--s", "2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["s"] == 2
    assert payload["ordinary"] == [
        "x1^2*x2^4", "x1*x2^3*x3^2", "x2^2*x3^4"
    ]


def test_power_symbolic_with_oracle(graph_file, capsys):
    code, out, _ = run(
        capsys, "power", graph_file(LINE5), "--symbolic", "--s", "3",
        "--oracle", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle_agrees"] is True
    assert "x1*x2^2*x3^2*x4" in payload["symbolic"]


def test_power_compare_table(graph_file, capsys):
    code, out, _ = run(capsys, "power", graph_file(LINE5), "--s", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["s", "|I^s|", "|I^(s)|", "equal", "witness"]
    assert lines[1].split() == ["1", "4", "4", "true", "-"]
    assert lines[3].split() == ["3", "20", "19", "false", "x1*x2^2*x3^2*x4"]


def test_power_compare_json(graph_file, capsys):
    code, out, _ = run(capsys, "power", graph_file(LINE5), "--json", "--oracle")
    assert code == 0
    payload = json.loads(out)
    assert payload["first_inequality"] == 3
    assert payload["oracle_agrees"] is True


def test_power_rejects_ordinary_oracle(graph_file, capsys):
    code, _, err = run(
        capsys, "power", graph_file(LINE3), "--ordinary", "--oracle"
    )
    assert code == 2
    assert "--oracle" in err


def test_power_rejects_bad_exponent(graph_file, capsys):
    code, _, err = run(capsys, "power", graph_file(LINE3), "--s", "0")
    assert code == 2
    assert "--s" in err


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "covers", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_malformed_json_is_input_error(graph_file, capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "covers", str(path))
    assert code == 2
    assert "error:" in err


def test_invalid_graph_is_input_error(graph_file, capsys):
    bad = {"vertices": ["a"], "edges": [["a", "a"]], "weights": {"a": 1}}
    code, _, err = run(capsys, "covers", graph_file(bad))
    assert code == 2
    assert "error:" in err


def test_cap_exceeded_exit_code(graph_file, capsys, monkeypatch):
    monkeypatch.setenv(CAP_ENV_VAR, "3")
    code, _, err = run(capsys, "covers", graph_file(LINE5))
    assert code == 3
    assert CAP_ENV_VAR in err


def test_verify_needs_a_mode(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert "--family" in err


def test_verify_line_family(graph_file, capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "line", "--weights", "1,2,1,1,1"
    )
    assert code == 0
    assert "PASS" in out
    assert "line_characterization" in out
    assert "line_cubic_witness" in out


def test_verify_line_family_needs_weights(capsys):
    code, _, err = run(capsys, "verify", "--family", "line")
    assert code == 2
    assert "--weights" in err


def test_verify_all_families(capsys):
    code, out, _ = run(capsys, "verify", "--family", "all", "--json")
    assert code == 0
    payload = json.loads(out)
    statuses = {r["check"]: r["status"] for r in payload["checks"]}
    assert statuses["line_cover_families"] == "pass"
    assert statuses["broom_equality"] == "pass"
    assert all(r["status"] in ("pass", "skip") for r in payload["checks"])


def test_verify_random_regression(capsys):
    code, out, _ = run(
        capsys, "verify", "--random", "--seed", "5", "--trials", "8"
    )
    assert code == 0
    assert "random regression seed=5 trials=8 failures=0" in out


def test_verify_reports_failures(capsys, monkeypatch):
    import oriented_ideals.cli as cli
    from oriented_ideals import CheckResult

    broken = CheckResult(
        check="cycle_equality", instance="rigged", hypotheses_ok=True,
        prediction="equal", computed="unequal", passed=False,
    )
    monkeypatch.setattr(cli, "check_cycle_equality", lambda *a, **k: broken)
    code, out, _ = run(capsys, "verify", "--family", "cycle")
    assert code == 1
    assert "FAIL" in out


def test_oracle_disagreement_exits_one(graph_file, capsys, monkeypatch):
    import oriented_ideals.cli as cli
    from oriented_ideals import MonomialIdeal

    ambient = tuple(LINE3["vertices"])
    rigged = MonomialIdeal(ambient, ["x1^9"])
    monkeypatch.setattr(cli, "symbolic_power_oracle", lambda g, s: rigged)
    code, out, _ = run(
        capsys, "power", graph_file(LINE3), "--symbolic", "--s", "2", "--oracle"
    )
    assert code == 1
    assert "oracle agrees: false" in out
