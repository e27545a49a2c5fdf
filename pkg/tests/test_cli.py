import csv
import io
import json

import pytest

from mod2red.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--k", "11", "--a2", "8+sqrt(226)")
    data = json.loads(out)
    assert code == 0
    assert data["case"] == "τ′≥t"
    assert data["result"]["c"] == "1"
    assert data["result"]["lambda_minpoly"] == "x^2+x+1"
    assert "τ′" in out  # not escaped


def test_classify_with_witness(capsys):
    code, out, _ = run(capsys, "classify", "--k", "8", "--a2", "2*zeta3", "--witness")
    assert code == 0
    assert json.loads(out)["witness"]["verified"] is True


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--k", "4", "--a2", "sqrt(2)", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["tau_prime"] == "-1/2" and rows[0]["result.type"] == "Irreducible"


def test_table1(capsys):
    code, out, err = run(capsys, "table", "--fixture", "table1")
    assert code == 0
    assert "12/12 rows pass" in err
    assert len(json.loads(out)) == 12


def test_table_from_path(capsys, tmp_path):
    path = tmp_path / "mini.csv"
    path.write_text("row,k,a2_expr,expected_tau_prime,expected_verdict\n"
                    "1,4,sqrt(2),-1/2,Irreducible\n"
                    "2,5,sqrt(2),5/2,Irreducible\n", encoding="utf-8")
    code, out, err = run(capsys, "table", "--fixture", str(path), "--format", "text")
    assert code == 1
    assert "1/2 rows pass" in err
    lines = out.splitlines()
    assert lines[1].split()[0] == "1" and lines[2].split()[0] == "2"
    assert lines[1].split()[-1] == "True" and lines[2].split()[-1] == "False"


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", "--id", "CMB1", "--r-max", "40")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["checked"] == 39


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "--k", "7", "--a2", "6")
    assert code == 0
    assert json.loads(out)["generator"] == "T[1,X]"


def test_tree_selftest(capsys):
    code, out, _ = run(capsys, "tree-selftest", "--seed", "2")
    assert code == 0 and json.loads(out)["passed"] is True


@pytest.mark.parametrize("argv", [
    ["classify", "--k", "3", "--a2", "sqrt(2)"],
    ["classify", "--k", "6", "--a2", "sqrt(2)+zeta3"],
    ["classify", "--k", "6", "--a2", "sqrt(2"],
    ["classify", "--k", "6", "--a2", "2", "--precision", "8"],
    ["lemmas", "--id", "nope", "--r-max", "10"],
    ["table", "--fixture", "no-such-table"],
    ["frobnicate"],
])
def test_input_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MOD2RED_PRECISION", "8")
    assert main(["classify", "--k", "6", "--a2", "2"]) == 2
    monkeypatch.setenv("MOD2RED_PRECISION", "32")
    assert main(["classify", "--k", "6", "--a2", "2"]) == 0
