import json
from pathlib import Path

import pytest

from redvar import cli, jsonio, orbits4

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_classify_o6(capsys):
    code, out = run(capsys, "classify", "--subspace", str(DATA / "O6.json"))
    assert code == 0 and out.out.strip() == "O6"


def test_classify_json(capsys, tmp_path):
    f = tmp_path / "o9.json"
    f.write_text(jsonio.dumps(jsonio.format_subspace(orbits4.representative("O9"))))
    code, out = run(capsys, "classify", "--subspace", str(f), "--json")
    assert code == 0 and json.loads(out.out)["orbit"] == "O9"


def test_theta_kernel(capsys):
    code, out = run(capsys, "theta-kernel", "--n", "4")
    assert code == 0 and out.out.strip() == "245"


def test_betti_reports_failure_honestly(capsys):
    code, out = run(capsys, "betti")
    assert out.out.strip().endswith("chi = 193")
    assert code == 1


def test_euler_and_table(capsys):
    assert run(capsys, "euler")[0] == 0
    code, out = run(capsys, "fixed-points", "--table")
    assert code == 0 and "O12" in out.out


def test_tn_eval(capsys):
    code, out = run(capsys, "tn-eval", "--subspace", str(DATA / "O12.json"), "--at", str(DATA / "x_diag.json"))
    assert code == 0 and out.out.strip() == "1008"
    code, out = run(capsys, "tn-eval", "--subspace", str(DATA / "O12.json"), "--at", str(DATA / "x_diag.json"),
                    "--twisted")
    assert out.out.strip() == "0"


def test_quadric_on_file(capsys):
    code, out = run(capsys, "quadric", "--basis", str(DATA / "o_bound4.json"))
    assert code == 0 and out.out.strip() == "0"


@pytest.mark.parametrize("payload, fragment", [
    ({"n": 4, "basis": [[["1/0"]]]}, "zero denominator"),
    ({"n": 4, "basis": [[["1", "0"], ["0", "1"]]]}, "expected 4x4"),
    ({"n": 4, "basis": [[["x"] * 4] * 4]}, "malformed scalar"),
    ({"basis": []}, "'n' and 'basis'"),
])
def test_malformed_input(capsys, tmp_path, payload, fragment):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(payload))
    code, out = run(capsys, "classify", "--subspace", str(f))
    assert code == 2 and fragment in out.err


def test_nonabelian_input(capsys, tmp_path):
    m = [["0"] * 4 for _ in range(4)]
    a, b, c = [r[:] for r in m], [r[:] for r in m], [r[:] for r in m]
    a[0][1], b[1][0], c[2][3] = "1", "1", "1"
    f = tmp_path / "na.json"
    f.write_text(json.dumps({"n": 4, "basis": [a, b, c]}))
    code, out = run(capsys, "classify", "--subspace", str(f))
    assert code == 2 and "not abelian" in out.err


def test_missing_file_argument(capsys):
    code, out = run(capsys, "classify")
    assert code == 2 and "--subspace" in out.err


def test_degenerations_exit_code(capsys):
    code, out = run(capsys, "degenerations")
    assert code == 1 and "FAIL" in out.out and "[supplementary]" in out.out


def test_reproduce_subset_is_deterministic(capsys):
    _, first = run(capsys, "reproduce-all", "--only", "1", "7", "15", "--json")
    _, second = run(capsys, "reproduce-all", "--only", "1", "7", "15", "--json")
    assert first.out == second.out
    assert json.loads(first.out)["passed"] == 3
