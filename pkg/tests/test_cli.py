import json
import subprocess
import sys
from fractions import Fraction

import pytest

from eeespline.cli import main
from eeespline.fixtures import fixture_path
from eeespline.io import read_basis
from eeespline.partition import cells_containing


def fx(name):
    return str(fixture_path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim_all_symmetric(capsys):
    code, out, _ = run(capsys, "dim", fx("ms_symmetric"), "-d", "2", "-s", "1")
    assert code == 0
    assert "oracle: 7" in out and "eee: 7" in out and "formula: n/a" in out


def test_dim_json_generic(capsys):
    code, out, _ = run(capsys, "dim", fx("ms_generic"), "-d", "2", "-s", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["values"] == {"formula": None, "oracle": 6, "eee": 6}


def test_dim_single_cell(capsys):
    code, out, _ = run(capsys, "dim", fx("triangle"), "-d", "3", "-s", "1", "--method", "formula")
    assert code == 0 and "formula: 10" in out


def test_dim_disagreement_exit(capsys, monkeypatch):
    import eeespline.cli as cli
    monkeypatch.setattr(cli, "dimension_oracle", lambda p, d, mu: 99)
    code, out, _ = run(capsys, "dim", fx("triangle"), "-d", "2", "-s", "1")
    assert code == 9 and "agreement: NO" in out


@pytest.mark.parametrize("argv,code", [
    (["dim", "FIX:ms_generic", "-d", "2", "-s", "1", "--method", "formula"], 6),
    (["dim", "FIX:triangle", "-d", "1", "-s", "2"], 2),
    (["dim", "/nonexistent.json", "-d", "1", "-s", "0"], 3),
])
def test_error_exit_codes(capsys, argv, code):
    argv = [fx(a[4:]) if a.startswith("FIX:") else a for a in argv]
    assert run(capsys, *argv)[0] == code


def test_partition_error_code(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"vertices": [[0, 0], [2, 0], [2, 2], [0, 2]],
                             "edges": [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]]}))
    assert run(capsys, "dim", str(p), "-d", "1", "-s", "0")[0] == 4


def test_nonconvex_code(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"vertices": [[0, 0], [4, 0], [4, 4], [2, 1], [0, 4], [2, 0]],
                             "edges": [[0, 5], [5, 1], [1, 2], [2, 3], [3, 4], [4, 0], [5, 3]]}))
    assert run(capsys, "extend", str(p))[0] == 5


def test_extend(capsys, tmp_path):
    out_path = tmp_path / "ext.json"
    code, out, _ = run(capsys, "extend", fx("ms_symmetric"), "-o", str(out_path))
    assert code == 0 and "3 added sub-edges" in out
    doc = json.loads(out_path.read_text())
    assert len(doc["added_subedges"]) == 3
    code, out, _ = run(capsys, "extend", fx("square_cross"))
    assert "0 added" in out


@pytest.fixture
def basis_file(tmp_path, capsys):
    path = tmp_path / "b.json"
    assert main(["basis", fx("ms_symmetric"), "-d", "2", "-s", "1", "-o", str(path)]) == 0
    capsys.readouterr()
    return str(path)


def test_basis_and_check(capsys, basis_file):
    code, out, _ = run(capsys, "check", basis_file)
    assert code == 0 and out.startswith("ok: 7")


def test_check_failure(capsys, basis_file, tmp_path):
    doc = json.loads(open(basis_file).read())
    doc["functions"].pop()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run(capsys, "check", str(bad))[0] == 10


def test_basis_stdout_deterministic(capsys):
    _, a, _ = run(capsys, "basis", fx("ms_symmetric"), "-d", "2", "-s", "1")
    _, b, _ = run(capsys, "basis", fx("ms_symmetric"), "-d", "2", "-s", "1")
    assert a == b


def test_eval(capsys, basis_file):
    code, out, _ = run(capsys, "eval", basis_file, "--point", "1/3,1/7", "-i", "0")
    assert code == 0 and out.strip() == "1"
    assert run(capsys, "eval", basis_file, "--point", "9,9")[0] == 7
    assert run(capsys, "eval", basis_file, "--point", "0,0", "-i", "7")[0] == 8


def test_eval_across_eliminated_edge(capsys, basis_file):
    # a point on the extension line FG between F=(0,-2) and G=(2/3,-3)
    code, out, _ = run(capsys, "eval", basis_file, "--point", "1/3,-5/2", "-i", "6", "--format", "json")
    assert code == 0
    b = read_basis(basis_file)
    pt = (Fraction(1, 3), Fraction(-5, 2))
    cells = cells_containing(b.partition, pt)
    values = {b[6].polys[c](*pt) for c in cells}
    # the point is interior to one base cell; both sides of the extension line agree
    assert len(cells) == 1 and len(values) == 1
    assert json.loads(out)["values"]["6"] == str(values.pop())


def test_sample(capsys, basis_file):
    code, out, _ = run(capsys, "sample", basis_file, "-i", "0", "--grid", "5")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "x,y,f0"
    assert all(r.endswith(",1.0") for r in rows[1:])


def test_svg(capsys, basis_file, tmp_path):
    out_path = tmp_path / "f.svg"
    code, _, _ = run(capsys, "svg", basis_file, "-i", "6", "--grid", "32", "-o", str(out_path))
    text = out_path.read_text()
    assert code == 0 and text.startswith("<svg") and text.count("<polygon") == 7


def test_d1(capsys):
    code, out, _ = run(capsys, "d1", "basis", "-d", "2", "-s", "1", "--coarse", "0", "1/2", "1",
                       "--fine", "1/4", "--format", "json")
    assert code == 0 and len(json.loads(out)["coefficients"]) == 4
    code, out, _ = run(capsys, "d1", "eval", "-d", "2", "-s", "1", "--breakpoints", "0", "1/2", "1",
                       "-i", "1", "-x", "1/4")
    assert out.strip() == "5/8"
    assert run(capsys, "d1", "eval", "-d", "2", "-s", "1", "--breakpoints", "0", "1",
               "-i", "0", "-x", "2")[0] == 7


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "eeespline", "dim", fx("square_cross"),
                          "-d", "2", "-s", "1", "--method", "oracle"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "oracle: 8" in out.stdout
