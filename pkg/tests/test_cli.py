import csv
import io
import json

import pytest

from snsuper.cli import main
from snsuper.exactlinalg import ExactMatrix
from snsuper.specht import seminormal_rep
from snsuper.supermod import supermodule


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partitions_classify(capsys):
    code, out, _ = run(capsys, "--format", "json", "partitions", "4", "--classify")
    data = json.loads(out)
    assert code == 0 and len(data["partitions"]) == 5
    assert [c["kind"] for c in data["classes"]] == ["Q", "Q", "M"]


def test_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "partitions", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["partition"] for r in rows] == ["3", "2,1", "1,1,1"]


def test_pretty_default(capsys):
    code, out, _ = run(capsys, "blocks", "dihedral", "6")
    assert code == 0 and "M=2, Q=2" in out


@pytest.mark.parametrize("argv,key", [
    (["rep", "3,1", "--gen", "2"], "matrix"),
    (["rep", "2,1", "--perm", "(1 3)"], "matrix"),
    (["jm", "3,2", "4"], "matrix"),
    (["phi", "2,2"], "matrix"),
    (["supermodule", "2,2"], "grading"),
    (["supermodule", "3,1,1"], "grading"),
])
def test_matrices_round_trip(capsys, argv, key):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    M = ExactMatrix.from_json(json.loads(out)[key])
    assert ExactMatrix.from_json(M.to_json()) == M


def test_rep_values(capsys):
    _, out, _ = run(capsys, "--format", "json", "rep", "3,1", "--gen", "2")
    assert ExactMatrix.from_json(json.loads(out)["matrix"]) == seminormal_rep((3, 1)).gen(2)
    _, out, _ = run(capsys, "--format", "json", "supermodule", "2,2")
    assert ExactMatrix.from_json(json.loads(out)["grading"]) == supermodule((2, 2)).grading


def test_json_is_stable(capsys):
    _, a, _ = run(capsys, "--format", "json", "supermodule", "3,1")
    _, b, _ = run(capsys, "--format", "json", "supermodule", "3,1")
    assert a == b
    keys = list(json.loads(a))
    assert keys == sorted(keys)


def test_tableaux_and_branch(capsys):
    _, out, _ = run(capsys, "--format", "json", "tableaux", "2,1")
    assert [t["content"] for t in json.loads(out)["tableaux"]] == [[0, -1, 1], [0, 1, -1]]
    code, out, _ = run(capsys, "--format", "json", "branch", "5,1")
    assert code == 0 and [s["dim"] for s in json.loads(out)["summands"]] == [8, 2]


def test_closure_with_json(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, err = run(capsys, "--format", "json", "closure", "4", "--json", str(path))
    assert code == 0 and json.loads(out)["dim"] == 22
    assert "pass 1" in err
    data = json.loads(path.read_text())
    assert len(data["basis"]["even"]["rows"]) == 11


def test_closure_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SNSUPER_BUDGET", "0")
    code, out, _ = run(capsys, "--format", "json", "closure", "5", "--quiet")
    assert code == 1 and json.loads(out)["complete"] is False


def test_matrixlie(capsys):
    code, out, _ = run(capsys, "--format", "json", "matrixlie", "sl", "2", "2", "--odd-generation")
    assert code == 0 and json.loads(out)["dim"] == 15
    code, out, _ = run(capsys, "--format", "json", "matrixlie", "sq", "2", "--odd-generation")
    assert code == 1


def test_blocks_sym(capsys):
    code, out, _ = run(capsys, "--format", "json", "blocks", "sym", "5")
    assert code == 0 and (json.loads(out)["M"], json.loads(out)["Q"]) == (1, 3)


def test_verify_writes_report(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--json", str(path), "--quiet")
    assert code == 0 and "ALL PASS" in out
    data = json.loads(path.read_text())
    assert data["pass"] and data["reports"][0]["n"] == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "--output", str(path), "partitions", "2")
    assert code == 0 and out == "" and "1,1" in path.read_text(encoding="utf-8")


@pytest.mark.parametrize("argv", [
    ["partitions", "0"], ["partitions"], ["bogus"], ["rep", "2,1"], ["verify", "--max-n", "1"],
    ["partitions", "3", "--unknown"], ["tableaux", "2,x"], ["blocks", "dihedral", "2"],
    ["supermodule", "2,1,1"], ["matrixlie", "sl", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2
