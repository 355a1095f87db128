"""CLI tests: exit codes, output contracts, determinism."""

import json
import math

import pytest

import casimir1d.cli as cli
from casimir1d import QuadratureError


def run_capture(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestForceCommand:
    def test_perfect_mirror_output(self, capsys):
        code, out, _ = run_capture(capsys, ["force", "--mu1", "1e6", "--mu2", "1e6", "--q", "1"])
        assert code == 0
        lines = dict(line.split(" = ") for line in out.strip().splitlines())
        assert float(lines["force"]) == pytest.approx(-0.130900, abs=1e-4)
        assert float(lines["abs_error_estimate"]) >= 0.0
        assert int(lines["evaluations"]) > 0

    def test_json_format(self, capsys):
        code, out, _ = run_capture(capsys, ["force", "--mu1", "2", "--mu2", "2",
                                            "--q", "1", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["force"] < 0.0

    def test_twelve_significant_digits(self, capsys):
        _, out, _ = run_capture(capsys, ["force", "--mu1", "1", "--mu2", "1", "--q", "1"])
        mantissa = out.splitlines()[0].split(" = ")[1]
        digits = mantissa.split("e")[0].replace("-", "").replace(".", "")
        assert len(digits) == 12

    def test_byte_identical_reruns(self, capsys):
        argv = ["force", "--mu1", "1.5", "--mu2", "0.5", "--lambda1", "2",
                "--lambda2", "-1", "--beta1", "1", "--beta2", "0.5", "--q", "0.7"]
        _, first, _ = run_capture(capsys, argv)
        _, second, _ = run_capture(capsys, argv)
        assert first == second

    def test_invalid_q_exits_2(self, capsys):
        code, _, err = run_capture(capsys, ["force", "--q", "-1"])
        assert code == 2
        assert "usage" in err

    def test_numeric_failure_exits_1_with_json_stderr(self, capsys, monkeypatch):
        def boom(cavity, rel_tol=1e-8):
            raise QuadratureError("panel budget exhausted")
        monkeypatch.setattr(cli, "casimir_force", boom)
        code, _, err = run_capture(capsys, ["force", "--q", "1"])
        assert code == 1
        payload = json.loads(err)
        assert payload["error"] == "QuadratureError"
        assert "panel budget" in payload["message"]


class TestVerifyCommand:
    def test_clean_mirror_exits_0(self, capsys):
        code, out, _ = run_capture(capsys, ["verify", "--mu", "2", "--lambda", "-2",
                                            "--beta", "1"])
        assert code == 0
        report = json.loads(out)
        assert report["max_reality_residual"] < 1e-10
        assert report["max_unitarity_residual_diag"] < 1e-10
        assert report["max_unitarity_residual_offdiag"] < 1e-10
        assert report["transparency_classification"]["kind"] == "full"

    def test_threshold_override_forces_failure(self, capsys):
        code, out, _ = run_capture(capsys, ["verify", "--mu", "2", "--lambda", "3",
                                            "--beta", "0", "--threshold", "0"])
        assert code == 1
        json.loads(out)  # report still emitted


class TestCoeffsCommand:
    def test_csv_plateau(self, capsys, tmp_path):
        out_path = tmp_path / "coeffs.csv"
        code, _, _ = run_capture(capsys, [
            "coeffs", "--mu", "1", "--lambda", "3", "--beta", "0",
            "--omega-max", "40", "--count", "64", "--out", str(out_path)])
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        header = lines[0].split(",")
        abs_r_col = header.index("abs_r_plus")
        last = lines[-1].split(",")
        assert float(last[abs_r_col]) == pytest.approx(0.6, abs=1e-4)

    def test_svg_output(self, capsys):
        code, out, _ = run_capture(capsys, ["coeffs", "--mu", "1", "--lambda", "3",
                                            "--beta", "1", "--count", "32",
                                            "--format", "svg"])
        assert code == 0
        assert out.startswith("<svg")


class TestSweepCommand:
    def test_distance_sweep_csv(self, capsys):
        code, out, _ = run_capture(capsys, ["sweep", "--grid", "q:0.5:2:4",
                                            "--mu1", "1", "--mu2", "1"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "q,F"
        assert len(lines) == 5
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert all(v < 0.0 for v in values)

    def test_plane_sweep_json_contains_contours(self, capsys):
        code, out, _ = run_capture(capsys, [
            "sweep", "--grid", "mu_both:0.5:3:4;lambda_both:1:3:3",
            "--q", "1", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert len(payload["values"]) == 3 and len(payload["values"][0]) == 4
        assert isinstance(payload["contours"], list) and payload["contours"]

    def test_plane_sweep_csv_writes_companion(self, capsys, tmp_path):
        out_path = tmp_path / "plane.csv"
        code, _, _ = run_capture(capsys, [
            "sweep", "--grid", "mu_both:0.5:3:4;lambda_both:1:3:3",
            "--q", "1", "--out", str(out_path)])
        assert code == 0
        assert out_path.read_text().splitlines()[0] == "x,y,F"
        companion = tmp_path / "plane_contours.csv"
        assert companion.exists()
        assert companion.read_text().splitlines()[0] == "contour_id,x,y"

    def test_plane_svg(self, capsys):
        code, out, _ = run_capture(capsys, [
            "sweep", "--grid", "mu_both:0.5:3:3;lambda_both:1:3:3",
            "--q", "1", "--format", "svg"])
        assert code == 0
        assert out.startswith("<svg") and "polyline" in out

    def test_ratio_mode_on_non_q_axis_rejected(self, capsys):
        code, _, err = run_capture(capsys, ["sweep", "--grid", "mu_both:1:2:3",
                                            "--mode", "ratio"])
        assert code == 2
        assert "ratio" in err

    def test_bad_axis_spec_exits_2(self, capsys):
        code, _, _ = run_capture(capsys, ["sweep", "--grid", "q:bogus"])
        assert code == 2


class TestContourCommand:
    def test_contour_csv(self, capsys):
        code, out, _ = run_capture(capsys, [
            "contour", "--grid", "mu_both:0.5:3:4;lambda_both:1:3:3", "--q", "1"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "contour_id,x,y"
        assert len(lines) > 1  # the plane contains a sign change


class TestParsing:
    def test_no_subcommand_exits_2(self, capsys):
        assert cli.run([]) == 2

    def test_unknown_subcommand_exits_2(self, capsys):
        assert cli.run(["frobnicate"]) == 2
