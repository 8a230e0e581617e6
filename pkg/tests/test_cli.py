import cmath
import csv
import io
import json
import math
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from wigner_ur import SqrtRational
from wigner_ur.cli import main, parse_output


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def json_values(*argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    return {tuple(labs): v for labs, v in parse_output(out).entries}


def test_cg_example():
    code, out, _ = run("cg", "1/2", "1/2", "1/2", "-1/2", "0", "0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "+sqrt(1/2)"


def test_basis_j1_r1_json():
    vals = json_values("basis", "--j", "1", "--r", "1")
    w = cmath.exp(2j * math.pi / 3)
    # |1 -1; 1> = (w|1 -1> + |1 0> + w^-1|1 +1>)/sqrt3
    for m, p in (("-1", 1), ("0", 0), ("1", -1)):
        assert abs(vals[("-1", m)] - w ** p / math.sqrt(3)) < 1e-14
    assert len(vals) == 9


def test_verify_mub_trivial():
    code, out, _ = run("verify", "--suite", "mub", "--j", "0", "--r", "1")
    assert code == 0
    assert "worst deviation 0," in out and "PASS" in out


def test_twice_flag_is_equivalent():
    a = run("sixj", "1/2", "1/2", "1", "1/2", "1/2", "1")[1]
    b = run("sixj", "1", "1", "2", "1", "1", "2", "--twice")[1]
    assert a.splitlines()[-1] == b.splitlines()[-1]
    a = json_values("fr", "1/2", "1/2", "1", "--r", "1")
    b = json_values("fr", "1", "1", "2", "--r", "1", "--twice")
    assert a == b


def test_ninej_and_threejm():
    _, out, _ = run("ninej", "1/2", "1/2", "1", "1/2", "1/2", "1", "1", "1", "0")
    assert SqrtRational.parse(out.splitlines()[-1]) == SqrtRational.parse("-sqrt(1/324)")
    _, out, _ = run("threejm", "1", "1", "1", "0", "0", "0")
    assert out.splitlines()[-1] == "0"


def test_json_round_trip():
    code, out, _ = run("fbar", "1", "1", "1", "--r", "37/100", "--format", "json")
    res = parse_output(out)
    assert json.loads(json.dumps(res.to_json())) == json.loads(out)
    assert res.provenance["r"] == "37/100"


def test_single_alpha_selection():
    full = json_values("cg-ur", "1/2", "1/2", "1", "--r", "1")
    one = json_values("cg-ur", "1/2", "1/2", "1", "--r", "1", "--alpha", "-1/2", "t=1", "0")
    assert len(one) == 1
    # alpha is defined modulo 2j+1
    assert json_values("fr", "1", "1", "1", "--r", "0", "--alpha", "5", "2", "-1") == \
        json_values("fr", "1", "1", "1", "--r", "0", "--alpha", "2", "2", "2")
    (key, v), = one.items()
    assert full[key] == v


def test_csv_columns():
    _, out, _ = run("metric", "--j", "1/2", "--r", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][-3:] == ["re", "im", "exact"]
    assert len(rows) == 5


def test_overlap_and_dmat():
    vals = json_values("overlap", "--j", "1/2", "--r", "1", "--s", "0")
    assert len(vals) == 4
    vals = json_values("dmat", "--j", "1", "--euler", "0", "0", "0")
    for (a, b), v in vals.items():
        assert abs(v - (1 if a == b else 0)) < 1e-15


def test_out_file(tmp_path):
    target = tmp_path / "cg.json"
    code, out, _ = run("cg", "1", "1", "0", "0", "2", "0", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert parse_output(target.read_text()).entries[0][1] == SqrtRational.sqrt(Fraction(2, 3))


@pytest.mark.parametrize("argv", [
    ("cg", "1/2", "1", "0", "0", "1", "0"),
    ("cg", "1/3", "1", "0", "0", "1", "0"),
    ("basis", "--j", "1", "--r", "abc"),
    ("verify", "--suite", "nope"),
    ("sixj", "1", "1"),
    ("fr", "1", "1", "1", "--r", "0", "--alpha", "1/2", "0", "0"),
])
def test_bad_input_exits_2(argv):
    code, _, err = run(*argv)
    assert code == 2 and "error" in err


def test_verify_failure_exits_1():
    code, out, _ = run("verify", "--suite", "quon", "--tol", "1e-30")
    assert code == 1 and "FAIL" in out


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("WIGNER_UR_TOL", "1e-30")
    assert run("verify", "--suite", "quon")[0] == 1
    # explicit --tol wins over the environment
    assert run("verify", "--suite", "quon", "--tol", "1e-12")[0] == 0


def test_verify_json_report():
    code, out, _ = run("verify", "--suite", "sixj", "--jmax", "1/2", "--r", "0,1", "--format", "json")
    body = json.loads(out)
    assert code == 0 and body["schema"] == 1 and body["passed"] is True


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "wigner_ur", "cg", "1/2", "1/2", "1/2", "1/2", "0", "0"],
                       capture_output=True, text=True, check=True)
    assert p.stdout.strip().splitlines()[-1] == "0"
