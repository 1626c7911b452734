"""Command-line front end: artifacts, determinism, exit codes."""

import csv
import subprocess
import sys

import pytest

from detproc import cli


def run(args):
    return cli.main(args)


def read_csv(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_kernel_lattice(tmp_path):
    out = tmp_path / "k.csv"
    assert run(["kernel", "--family", "bessel", "--theta", "1",
                "--window", "10", "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["x_doubled", "y_doubled", "value"]
    assert len(rows) == 1 + 20 * 20
    xs = {int(r[0]) for r in rows[1:]}
    assert max(xs) == 19 and min(xs) == -19    # |x| <= 19/2


def test_kernel_zw_lattice(tmp_path):
    out = tmp_path / "zw.csv"
    assert run(["kernel", "--family", "zw-l", "--z-re", "0.3", "--z-im", "0.8",
                "--xi", "0.5", "--window", "4", "-o", str(out)]) == 0
    rows = read_csv(out)
    assert len(rows) == 1 + 8 * 8
    # same-sign pairs vanish
    for r in rows[1:]:
        if int(r[0]) * int(r[1]) > 0:
            assert float(r[2]) == 0.0


def test_kernel_whittaker_points(tmp_path):
    out = tmp_path / "w.csv"
    assert run(["kernel", "--family", "whittaker", "--z-re", "0.25",
                "--z-im", "0.6", "--points", "0.5,-0.5", "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["x", "y", "value"]
    assert len(rows) == 5


def test_fredholm_pass_and_content(tmp_path):
    out = tmp_path / "f.csv"
    assert run(["fredholm", "--theta", "1", "--window", "30",
                "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["det_one_plus_l", "e_theta", "rel_err"]
    assert float(rows[1][2]) < 1e-10


def test_fredholm_check_failure_exit_code(tmp_path):
    out = tmp_path / "f.csv"
    # impossible tolerance forces exit 1
    assert run(["fredholm", "--theta", "1", "--window", "30",
                "--tol", "1e-30", "-o", str(out)]) == 1


def test_oracle_compare_bessel(tmp_path):
    out = tmp_path / "oc.csv"
    assert run(["oracle-compare", "--family", "bessel", "--theta", "1",
                "--window", "25", "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["x_doubled", "y_doubled", "analytic", "oracle", "abs_diff"]
    assert max(float(r[4]) for r in rows[1:]) < 1e-8


def test_prob_command(tmp_path):
    out = tmp_path / "p.csv"
    assert run(["prob", "--rows", "3,3,1", "--theta", "1", "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[1][0] == "3|3|1"
    assert float(rows[1][3]) < 1e-12


def test_sample_deterministic(tmp_path):
    out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    for out in (out1, out2):
        assert run(["sample", "--theta", "2", "--n", "100", "--seed", "7",
                    "-o", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_correlation_command(tmp_path):
    out = tmp_path / "c.csv"
    assert run(["correlation", "--theta", "1", "--points", "1",
                "--n", "20000", "--seed", "5", "--substreams", "2",
                "-o", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["points_doubled", "estimate", "stderr",
                       "prediction", "sigmas"]
    assert float(rows[1][4]) < 4.0


def test_verify_suites(tmp_path):
    for suite in ("two-point", "contour", "cd", "special-functions",
                  "drhp", "psi"):
        out = tmp_path / f"{suite}.csv"
        assert run(["verify", "--suite", suite, "-o", str(out)]) == 0
        rows = read_csv(out)
        assert rows[0] == ["check_id", "point", "residual", "tolerance", "pass"]
        assert all(r[4] == "true" for r in rows[1:])


def test_limits_studies(tmp_path):
    assert run(["limits", "--study", "zw-degeneration", "--theta", "1",
                "-o", str(tmp_path / "l1.csv")]) == 0
    assert run(["limits", "--study", "whittaker-scaling",
                "-o", str(tmp_path / "l2.csv")]) == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["kernel"])  # missing required arguments
    assert exc.value.code == 2


def test_invalid_parameters_exit_code(tmp_path):
    # integer z is a parameter error -> exit 2
    assert run(["kernel", "--family", "zw-l", "--z-re", "2", "--z-im", "0",
                "--xi", "0.5", "-o", str(tmp_path / "z.csv")]) == 2


def test_io_error_exit_code():
    assert run(["fredholm", "--theta", "1", "--window", "5",
                "-o", "/nonexistent-dir/f.csv"]) == 3


def test_console_entry_point(tmp_path):
    out = tmp_path / "f.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "detproc.cli", "fredholm", "--theta", "1",
         "--window", "20", "-o", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.exists()
