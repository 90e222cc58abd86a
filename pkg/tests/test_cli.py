"""Command-line front end: output shapes, headers and exit codes."""

import json

import pytest

from permutrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count_prints_a_bare_integer(capsys):
    code, out = run(capsys, "count", "--decoration", "ddd")
    assert code == 0 and out.strip() == "5"
    default = run(capsys, "count", "--decoration", "oddo")[1]
    for method in ("brute", "root_sum", "topmost_sum"):
        assert run(capsys, "count", "--decoration", "oddo", "--method", method)[1] == default


def test_enumerate_json_has_header(capsys):
    code, out = run(capsys, "enumerate", "--decoration", "odu", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["header"].startswith("permutrees ") and "decoration=odu" in data["header"]


def test_csv_header_line(capsys):
    _, out = run(capsys, "enumerate", "--decoration", "odu", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "# permutrees 0.1.0 decoration=odu"
    assert len(lines) == 2 + 5


def test_lattice_dot(capsys):
    _, out = run(capsys, "lattice", "--decoration", "ooo", "--format", "dot")
    assert out.startswith("// permutrees")
    assert out.count("->") == 6


def test_polytope_off(capsys):
    _, out = run(capsys, "polytope", "--decoration", "oooo", "--format", "off")
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert body[0] == "OFF"
    assert body[1] == "24 14 0"


def test_hopf_verbs(capsys):
    _, out = run(capsys, "hopf", "--op", "product", "--tree", "21@du", "--tree", "1@o")
    assert "P[duo;213] + P[duo;321]" in out
    _, out = run(capsys, "hopf", "--op", "coproduct", "--tree", "132@odo", "--basis", "F")
    assert out.count("⊗") == 8
    _, out = run(capsys, "hopf", "--op", "ipt", "--tree", "12@oo", "--degree", "2")
    assert "x1*x2" in out


def test_schroder_verbs(capsys):
    assert run(capsys, "schroder", "--decoration", "ddd")[1].strip().splitlines()[-1] == "11"
    _, out = run(capsys, "schroder", "--op", "insert", "--decoration", "doodoou", "--partition", "125|37|46")
    assert "46[3,7>.]" in out


def test_verify_one_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "1", "--n", "3")
    assert code == 0 and out.startswith("PASS [1]")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["count", "--decoration", "odx"], 2),
        (["enumerate", "--decoration", "o" * 12], 3),
        (["hopf", "--op", "ipt", "--tree", "12@o"], 2),
        (["count", "--decoration", "odub", "--method", "topmost_sum"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["lattice", "--decoration", "odub", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
    target = tmp_path / "poly.csv"
    assert main(["polytope", "--decoration", "dub", "--format", "csv", "--out", str(target)]) == 0
    assert target.read_text().startswith("# permutrees")
