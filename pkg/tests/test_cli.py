import io
import json
import subprocess
import sys

import pytest

from semigroup_mobius.cli import main
from semigroup_mobius.harness import Target


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_compute_deddens():
    code, out = run("compute", "--gens", "2,3", "--x", "5")
    assert code == 0
    assert json.loads(out) == {"x": 5, "mu": 1, "method": "deddens"}


def test_compute_even_with_rep():
    code, out = run("compute", "--arith", "22,5,2", "--x", "54", "--method", "even")
    assert code == 0
    assert json.loads(out) == {"x": 54, "mu": 2, "method": "even", "rep": [1, 0, 1]}


def test_compute_negative():
    code, out = run("compute", "--gens", "3,4,5", "--x", "-1")
    assert json.loads(out)["mu"] == 0


def test_compute_csv():
    code, out = run("compute", "--gens", "3,4,5", "--x", "8", "--method", "chains", "--format", "csv")
    assert out == "x,mu,method\n8,2,chains\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--gens", "4,6", "--x", "1"),
        ("compute", "--arith", "5,2,7", "--x", "1"),
        ("compute", "--gens", "2,3", "--x", "1", "--method", "arith"),
        ("compute", "--gens", "2,3", "--arith", "2,1,1", "--x", "1"),
        ("compute", "--x", "1"),
        ("range", "--gens", "2,3", "--from", "3", "--to", "1"),
        ("table", "--q", "4", "--d", "2"),
        ("apery", "--gens", "3,4,5", "--mod", "2"),
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--gens", "2,x", "--x", "1"], io.StringIO())
    assert exc.value.code == 2


def test_overflow_exit_3():
    assert run("compute", "--int64", "--gens", "3,4,5", "--x", "600", "--method", "recursive")[0] == 3
    code, out = run("compute", "--gens", "3,4,5", "--x", "600", "--method", "recursive")
    assert code == 0 and abs(json.loads(out)["mu"]) > 2**63


def test_range_csv():
    code, out = run("range", "--gens", "2,3", "--from", "0", "--to", "6", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "x,mu,method"
    assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 0, -1, -1, 0, 1, 1]


def test_range_arith_default_format():
    code, out = run("range", "--arith", "3,1,2", "--from", "0", "--to", "8")
    assert [int(l.split(",")[1]) for l in out.splitlines()[1:]] == [1, 0, 0, -1, -1, -1, 0, 1, 2]


def test_range_single():
    code, out = run("range", "--gens", "5,7", "--from", "0", "--to", "0")
    assert out == "x,mu,method\n0,1,deddens\n"


def test_csv_json_agree():
    args = ("range", "--gens", "22,27,32", "--from", "-5", "--to", "120")
    _, csv_out = run(*args, "--format", "csv")
    _, json_out = run(*args, "--format", "json")
    rows = [l.split(",") for l in csv_out.splitlines()[1:]]
    recs = json.loads(json_out)
    assert [(int(x), int(m), meth) for x, m, meth in rows] == [(r["x"], r["mu"], r["method"]) for r in recs]


def test_range_jobs_identical():
    args = ("range", "--gens", "3,4,5", "--from", "-3", "--to", "90", "--method", "recursive")
    assert run(*args)[1] == run(*args, "--jobs", "3")[1]


def test_table_csv():
    code, out = run("table", "--q", "11", "--d", "5", "--rows", "3")
    assert out.splitlines() == [
        "x0,0,1,2,3,4,5,6,7,8,9,10",
        "0,1,-1,0,0,0,0,0,0,0,0,0",
        "1,-1,2,-1,0,0,0,0,0,0,0,0",
        "2,0,-1,2,-1,0,0,0,0,0,0,0",
    ]


def test_table_small():
    code, out = run("table", "--q", "2", "--d", "1", "--rows", "2")
    assert out.splitlines()[1:] == ["0,1,-1", "1,-1,2"]


def test_apery():
    code, out = run("apery", "--arith", "3,1,2")
    lines = out.splitlines()
    assert lines[:3] == ["0", "4", "5"]
    assert lines[4:] == ["0,0", "1,4", "2,5"]
    code, out = run("apery", "--gens", "2,3", "--mod", "2", "--format", "json")
    assert json.loads(out)["elements"] == [0, 3]


def test_apery_other_modulus():
    code, out = run("apery", "--gens", "3,4,5", "--mod", "7", "--format", "json")
    doc = json.loads(out)
    assert len(doc["elements"]) == 7 and "roberts" not in doc


@pytest.mark.parametrize("suite", ["table", "deddens"])
def test_check(suite):
    code, out = run("check", "--suite", suite)
    assert code == 0
    assert out.startswith(f"PASS {suite}")


def test_check_all_tiny():
    code, out = run("check", "--suite", "all", "--bound", "tiny")
    assert code == 0
    assert out.count("PASS") == 5


def test_check_failure_exit_1(monkeypatch):
    from semigroup_mobius import harness

    def broken(bounds, jobs=1, strict=False):
        r = harness.SuiteResult("table")
        r.expect(False, "forced")
        return r

    monkeypatch.setitem(harness.SUITES, "table", broken)
    code, out = run("check", "--suite", "table")
    assert code == 1
    assert "diff: forced" in out


def test_auto_is_applicable():
    for gens in [(2, 3), (3, 4, 5), (22, 27, 32), (6, 9, 20), (4, 5, 6, 7), (1,), (2, 3, 4)]:
        t = Target.from_generators(gens)
        assert t.applicable(t.auto_method())


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "semigroup_mobius", "range", "--gens", "4,5,6", "--from", "0", "--to", "50", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
