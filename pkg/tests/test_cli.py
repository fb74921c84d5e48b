import csv
import io
import json
import math
import subprocess
import sys

import pytest

from rieszcap.cli import main


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("# unit equilateral triangle\n0 0\n1 0\n0.5 %r\n" % (math.sqrt(3) / 2))
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_capacity(capsys, tri_file):
    code, out, err = run(capsys, "capacity", "--points", tri_file, "--p", -1)
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["capacity"] == pytest.approx(2 / 3, rel=1e-14)
    assert payload["unique"] is True and payload["family_dimension"] == 0
    assert payload["measures"][0]["support"] == [0, 1, 2]


def test_triangle_first_branch(capsys):
    code, out, _ = run(capsys, "triangle", "--a", 0.3, "--b", 0.4, "--c", 1, "--p", -1)
    payload = json.loads(out)
    assert code == 0
    assert payload["capacity"] == 0.5
    assert payload["weights"] == [0.5, 0.5, 0.0]
    assert payload["support"] == ["endpoint_c_1", "endpoint_c_2"]


def test_ratio(capsys, tri_file):
    code, out, _ = run(capsys, "ratio", "--points", tri_file, "--p", -4, "--q", -3)
    assert code == 0
    assert json.loads(out)["ratio"] == pytest.approx((2 / 3) ** (1 / 12), rel=1e-14)


def test_optimize_is_reproducible(capsys, tmp_path):
    argv = ["optimize", "--n", 2, "--k", 3, "--p", -4, "--q", -3, "--seed", 5, "--restarts", 2, "--iters", 300]
    pts = tmp_path / "best.txt"
    code, first, _ = run(capsys, *argv, "--points-out", pts)
    assert code == 0
    _, second, _ = run(capsys, *argv)
    assert first == second
    payload = json.loads(first)
    assert payload["seed"] == 5 and len(payload["traces"]) == 2
    assert pts.read_text().startswith("# cap_q/cap_p = ")


def test_optimize_needs_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["optimize", "--n", "2", "--k", "3", "--p", "-4", "--q", "-3"])
    assert exc.value.code == 2


def test_region_map(capsys, tmp_path):
    target = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "-o", target, "region-map", "--pmin", -4, "--pmax", -3,
                       "--qmin", -4.5, "--qmax", -3.5, "--steps", 3, "--n", 2)
    assert code == 0 and out == ""
    rows = list(csv.reader(io.StringIO(target.read_text())))
    assert rows[0][0] == "p" and len(rows) == 10


@pytest.mark.parametrize("argv, key, value", [
    (["closed-form", "kpoint", "--k", "3", "--p", "-1"], "capacity", 2 / 3),
    (["closed-form", "interval", "--p", "-2"], "capacity", 2 ** -0.5),
    (["closed-form", "ball", "--n", "2", "--p", "-1"], "capacity", 4 / math.pi),
    (["closed-form", "ellipse", "--b", "1"], "log_capacity", 1.0),
])
def test_closed_form(capsys, argv, key, value):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out)[key] == pytest.approx(value, rel=1e-10)


def test_closed_form_missing_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["closed-form", "kpoint", "--p", "-1"])
    assert exc.value.code == 2


def test_verify_kite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kite", "--suite", "qstar")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS") and "kite" in lines[0]
    assert lines[-1] == "2/2 suites passed"


@pytest.mark.parametrize("argv, code_name", [
    (["triangle", "--a", "2", "--b", "0.4", "--c", "1", "--p", "-1"], "domain-error"),
    (["closed-form", "interval", "--p", "-0.5"], "unsupported-parameter"),
    (["closed-form", "ball", "--n", "4", "--p", "-1"], "unsupported-parameter"),
    (["ratio", "--points", "/nonexistent/pts.txt", "--p", "-2", "--q", "-1"], "io-error"),
])
def test_error_codes(capsys, argv, code_name):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert err.startswith(f"error: {code_name}: ")
    assert err.count("\n") == 1


def test_degenerate_and_resource_errors(capsys, tmp_path):
    dup = tmp_path / "dup.txt"
    dup.write_text("0 0\n0 0\n1 0\n")
    code, _, err = run(capsys, "capacity", "--points", dup, "--p", -1)
    assert code == 1 and err.startswith("error: degenerate-configuration: ")
    big = tmp_path / "big.txt"
    big.write_text("".join(f"{i} {i * i}\n" for i in range(6)))
    code, _, err = run(capsys, "capacity", "--points", big, "--p", -1, "--max-points", 4)
    assert code == 1 and err.startswith("error: resource-limit: ")


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "rieszcap", "capacity", "--p", "-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_module_entry_point_byte_identical(tri_file):
    argv = [sys.executable, "-m", "rieszcap", "capacity", "--points", str(tri_file), "--p", "-3"]
    a = subprocess.run(argv, capture_output=True)
    b = subprocess.run(argv, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout
