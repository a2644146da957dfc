import csv
import io
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from splinenorm.cli import format_float, main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, [str(a) for a in args])
    return invoke


def test_norms_csv(run):
    res = run("norms", "--max-n", 2)
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == "n,norm_exact,norm_float,argmax_k,gap_float"
    assert lines[1].startswith('1,5/3,1.6666666666666667,"0,1",')
    assert lines[2].startswith('2,17/9,1.8888888888888888,"0,2",')


def test_norms_json(run):
    res = run("norms", "--max-n", 1, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data) == 1
    assert data[0]["n"] == 1 and data[0]["norm_exact"] == "5/3" and data[0]["argmax_k"] == "0,1"


def test_norms_with_oracle(run):
    res = run("norms", "--max-n", 3, "--with-oracle")
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert len(rows) == 3
    assert all(float(r["oracle_dev"]) < 1e-8 for r in rows)


def test_norms_csv_round_trip(run, tmp_path):
    out = tmp_path / "norms.csv"
    res = run("norms", "--max-n", 25, "--out", out)
    assert res.exit_code == 0
    text = out.read_text()
    rows = list(csv.DictReader(io.StringIO(text)))
    for r in rows:
        q = Fraction(r["norm_exact"])
        assert format_float(q.numerator / q.denominator) == r["norm_float"]
        assert format_float(float(2 - q)) == r["gap_float"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(rows[0].keys())
    for r in rows:
        q = Fraction(r["norm_exact"])
        w.writerow([r["n"], r["norm_exact"], format_float(q.numerator / q.denominator),
                    r["argmax_k"], format_float((2 - q).numerator / (2 - q).denominator)])
    assert buf.getvalue() == text


def test_norms_deterministic(run):
    a = run("norms", "--max-n", 12, "--with-oracle").output
    b = run("norms", "--max-n", 12, "--with-oracle").output
    assert a == b


def test_norms_unwritable(run, tmp_path):
    res = run("norms", "--max-n", 2, "--out", tmp_path / "missing" / "x.csv")
    assert res.exit_code != 0
    assert "cannot write" in res.output


def test_usage_errors(run):
    assert run("norms", "--max-n", 0).exit_code == 2
    assert run("norms").exit_code == 2
    assert run("oracle", "--n", 2, "--grid", 15).exit_code == 2
    assert run("bogus").exit_code == 2


def test_verify_small(run):
    res = run("verify", "--max-n", 2, "--max-k", 10)
    assert res.exit_code == 0
    assert "FAIL" not in res.output
    assert "theorems" in res.output


def test_verify_fault_a(run):
    res = run("verify", "--max-n", 2, "--max-k", 10, "--corrupt-a", 6)
    assert res.exit_code == 1
    assert "A_k^2-3B_k^2=1 failed at k=6" in res.output


def test_verify_fault_gram(run):
    res = run("verify", "--max-n", 4, "--max-k", 10, "--corrupt-gram", "2:3:1/7")
    assert res.exit_code == 1
    assert "row=2" in res.output and "row=3" in res.output


def test_oracle_cmd(run):
    assert run("oracle", "--n", 2, "--grid", 128, "--tol", 1e-8).exit_code == 0
    assert run("oracle", "--n", 1, "--grid", 8, "--tol", 1e-6).exit_code == 0
    res = run("oracle", "--n", 2, "--grid", 128, "--tol", 1e-16)
    assert res.exit_code == 1
    assert "norm_estimate:" in res.output and "knot_max:" in res.output


def test_gram_cmd(run):
    assert run("gram", "--n", 1).output == "1/3,1/6\n1/6,1/3\n"
    assert run("gram", "--n", 1, "--inverse").output == "4,-2\n-2,4\n"
    assert run("gram", "--n", 2, "--inverse").output == "7,-2,1\n-2,4,-2\n1,-2,7\n"
    out = run("gram", "--n", 5).output.splitlines()
    assert len(out) == 6 and all(len(r.split(",")) == 6 for r in out)
