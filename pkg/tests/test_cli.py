import csv
import io
import json

import numpy as np
import pytest

from numrad.cli import main
from numrad.matrixio import write_matrix


@pytest.fixture
def jordan(tmp_path):
    p = tmp_path / "j.txt"
    write_matrix(p, np.array([[0, 1], [0, 0]]))
    return str(p)


@pytest.fixture
def ident(tmp_path):
    p = tmp_path / "i.txt"
    write_matrix(p, np.eye(2))
    return str(p)


def test_list_json(capsys):
    assert main(["list", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 34 and data[0]["id"] == "N1"


def test_list_text(capsys):
    assert main(["list"]) == 0
    assert capsys.readouterr().out.count("\n") == 34


def test_run_json_and_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "--suite", "N1,REF1", "--dims", "2", "--samples", "3", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert [r["check"] for r in rows] == ["N1", "REF1"]
    keys = {"check", "dim", "samples", "minSlack", "minSlackSeed", "violations", "verdict", "wallTimeMs"}
    assert keys <= set(rows[0])
    assert rows[0]["wallTimeMs"] is None


def test_run_csv(capsys):
    assert main(["run", "--suite", "N1", "--dims", "2,3", "--samples", "2", "--format", "csv", "--timing"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 2 and rows[0]["violations"] == "0" and float(rows[0]["wallTimeMs"]) >= 0


def test_run_exit_codes(capsys):
    assert main(["run", "--suite", "C3.10", "--dims", "2", "--samples", "20", "--literal"]) == 2
    assert main(["run", "--suite", "KT-C3.9p", "--dims", "2", "--samples", "2"]) == 0
    assert main(["run", "--samples", "0"]) == 3
    assert main(["run", "--suite", "bogus"]) == 3
    assert main(["run", "--dims", "x"]) == 3
    assert main(["frobnicate"]) == 3


def test_check_command(jordan, ident, capsys):
    assert main(["check", "N1", "--matrix", jordan]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["holds"] and out["parts"][1]["slack"] == pytest.approx(0.5)
    assert main(["check", "KT-C3.9p", "--matrix", ident, "--matrix", ident, "--params", "p=1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["slack"] == pytest.approx(-1.0)
    assert main(["check", "C3.10", "--matrix", ident, "--matrix", ident, "--params", "p=3,literal=true"]) == 2
    assert main(["check", "N1", "--matrix", jordan, "--matrix", jordan]) == 3
    assert main(["check", "F1", "--matrix", jordan, "--params", "r=0.2"]) == 3


def test_fov_command(jordan, tmp_path):
    out = tmp_path / "fov.csv"
    assert main(["fov", "--matrix", jordan, "--points", "12", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 12
    assert all(abs(abs(complex(float(r["re"]), float(r["im"]))) - 0.5) < 1e-9 for r in rows)


def test_tighten_and_replay(capsys):
    assert main(["tighten", "N1", "--restarts", "1", "--steps", "5", "--part", "upper", "--classes", "normal"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["minSlack"] <= 1e-6
    assert main(["run", "--suite", "C2.7", "--dims", "3", "--samples", "3"]) == 0
    row = json.loads(capsys.readouterr().out)[0]
    assert main(["replay", "C2.7", str(row["minSlackSeed"])]) == 0
    assert json.loads(capsys.readouterr().out)["slack"] == row["minSlack"]
