import json

import pytest

from diagqsym import cli
from diagqsym.quotient import HilbertMatrix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_shuffle(capsys):
    code, data = run_json(capsys, "shuffle", "2,0/1,3", "0,2/1,0")
    assert code == 0
    assert len(data["payload"]) == 13
    code, data = run_json(capsys, "shuffle", "-", "1/0")
    assert data["payload"] == ["1/0"]


def test_shuffle_multiset(capsys):
    code, out, _ = run(capsys, "shuffle", "1/0", "1/0", "--multiset")
    assert code == 0
    assert out.split("\n")[:2] == ["1 2/0", "2 1,1/0,0"]


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "shuffle", "1,0/0,0", "1/0")
    assert code == 2 and "cannot parse" in err
    with pytest.raises(SystemExit) as exc:
        cli.main(["hilbert", "dq", "notanint"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "harmonics", "2", "1")
    assert code == 2


def test_guard(capsys):
    code, _, err = run(capsys, "hilbert", "dq", "6")
    assert code == 2 and "--force" in err


def test_mult_fbasis_expand(capsys):
    code, data = run_json(capsys, "mult", "1/0", "1/0")
    assert sorted(data["payload"]) == [["1,1/0,0", "2"], ["2/0", "1"]]
    code, data = run_json(capsys, "fbasis", "2,0/1,1")
    assert len(data["payload"]) == 8
    code, out, _ = run(capsys, "expand", "1/0", "3")
    assert out.strip() == "x1 + x2 + x3"


def test_hilbert_dq_json_roundtrip(capsys):
    code, data = run_json(capsys, "hilbert", "dq", "3")
    assert code == 0
    assert data["status"] == "pass"
    payload = data["payload"]
    assert payload["prediction"] == "MATCH"
    assert HilbertMatrix.from_dict(payload).rows() == [[2], [2, 2], [1, 2, 2]]


def test_hilbert_text(capsys):
    code, out, _ = run(capsys, "hilbert", "dq", "3")
    assert code == 0 and "MATCH predicted" in out
    code, out, _ = run(capsys, "hilbert", "rdiag", "2")
    assert out.splitlines()[:4] == ["1", "  1", "  1 1", "1     1"]
    code, out, _ = run(capsys, "hilbert", "runi", "3")
    assert code == 0 and "MATCH Psi_n" in out


def test_hilbert_guess(capsys):
    code, data = run_json(capsys, "hilbert", "guess", "2", "--trunc", "3,3")
    coeffs = {(i, j): v for i, j, v in data["payload"]["coefficients"]}
    assert coeffs[3, 1] == "-1"


def test_harmonics_and_basis(capsys):
    code, data = run_json(capsys, "harmonics", "2", "1,0")
    assert code == 0 and len(data["payload"]) == 1
    code, data = run_json(capsys, "basis", "3")
    assert code == 0
    assert sorted(data["payload"]["basis"]["1,1"]) == ["x3*y3", "y2*x3"]


def test_verify(capsys):
    for suite, bound in [("kernel", 4), ("frobenius", 3), ("duality", 2), ("lyndon", 3), ("hopf", 3)]:
        code, data = run_json(capsys, "verify", suite, str(bound))
        assert code == 0 and data["status"] == "pass", suite
    code, out, _ = run(capsys, "verify", "basis", "3")
    assert code == 0 and "basis: PASS" in out


def test_deterministic(capsys):
    _, a = run_json(capsys, "hilbert", "rdiag", "2")
    _, b = run_json(capsys, "hilbert", "rdiag", "2")
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_failure_exit_code(capsys, monkeypatch):
    from diagqsym import verify
    bad = verify.SuiteResult("kernel")
    bad.fail("witness")
    monkeypatch.setitem(verify.SUITES, "kernel", lambda bound: bad)
    code, out, _ = run(capsys, "verify", "kernel", "3")
    assert code == 1 and "counterexample" in out


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "diagqsym", "shuffle", "1/0", "0/1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "# 3 bicompositions" in res.stdout
