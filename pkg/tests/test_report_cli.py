import io
import json
import subprocess
import sys

import pytest

from gammerf import CheckRecord, Report, SkippedPoint, run_grid, write_csv


def small_report() -> Report:
    result = run_grid("I2", {"x": [0.5, 2.0]})
    return Report(
        tool_version="0.1.0",
        timestamp="2026-01-01T00:00:00+00:00",
        records=result.records,
        skipped=[SkippedPoint("I2", {"x": -1.0}, "x must be >= 0")],
        notes={"I2": "smoke note"},
    )


class TestReport:
    def test_summary_matches_tallies(self):
        rep = small_report()
        s = rep.summary
        assert s["total"] == len(rep.records)
        assert s["pass"] + s["fail"] == s["total"]
        assert s["skipped_out_of_domain"] == 1

    def test_json_round_trip_is_exact(self):
        rep = small_report()
        again = Report.from_json(rep.to_json())
        assert again == rep
        assert again.to_json() == rep.to_json()

    def test_tampered_summary_is_rejected(self):
        d = small_report().to_dict()
        d["summary"]["pass"] += 1
        with pytest.raises(ValueError, match="summary"):
            Report.from_dict(d)

    def test_failed_record_round_trips_through_nulls(self):
        rec = CheckRecord("I9", {"a": 0.5, "t": 1.0}, None, None, None, None,
                          False, None, None, 0.01, reason="route broke")
        rep = Report("0.1.0", "2026-01-01T00:00:00+00:00", [rec])
        again = Report.from_json(rep.to_json())
        assert again.records[0] == rec

    def test_csv_columns_and_padding(self):
        rep = small_report()
        rep.records = rep.records + [run_grid("I8", {"a": [0.5], "b": [0.5]}).records[0]]
        buf = io.StringIO()
        write_csv(rep, buf)
        lines = buf.getvalue().strip().splitlines()
        header = lines[0].split(",")
        assert header[:1] == ["identity"]
        assert header[1:3] == ["param_1", "param_2"]
        assert header[3:] == ["lhs", "rhs", "abs_diff", "rel_diff", "pass"]
        i2_row = lines[1].split(",")
        assert i2_row[0] == "I2"
        assert i2_row[1] == "x=0.5"
        assert i2_row[2] == ""  # padded: I2 has one parameter
        assert i2_row[-1] in ("true", "false")


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "gammerf", *args],
                          capture_output=True, text=True, **kwargs)


class TestCli:
    def test_eval_prints_value_and_error(self):
        proc = run_cli("eval", "erfc", "x=1")
        assert proc.returncode == 0
        value, err = proc.stdout.split()
        assert float(value) == pytest.approx(0.15729920705028513, rel=1e-15)
        assert float(err) >= 0.0

    def test_eval_seventeen_significant_digits(self):
        proc = run_cli("eval", "lower_gamma", "s=1", "x=1")
        assert proc.returncode == 0
        value = proc.stdout.split()[0]
        assert float(value) == pytest.approx(0.63212055882855767, rel=1e-14)
        assert len(value.replace(".", "").lstrip("0")) >= 16

    def test_eval_moment(self):
        proc = run_cli("eval", "erfc_moment", "r=0", "a=1")
        assert proc.returncode == 0
        assert float(proc.stdout.split()[0]) == pytest.approx(0.5, rel=1e-13)

    def test_eval_unknown_function_exits_2(self):
        assert run_cli("eval", "nosuch", "x=1").returncode == 2

    def test_eval_bad_argument_exits_2(self):
        assert run_cli("eval", "erfc", "y=1").returncode == 2
        assert run_cli("eval", "erfc", "x=abc").returncode == 2

    def test_eval_domain_error_exits_3(self):
        proc = run_cli("eval", "lower_gamma", "s=-1", "x=1")
        assert proc.returncode == 3
        assert "s > 0" in proc.stderr

    def test_verify_single_identity_json(self):
        proc = run_cli("verify", "I2", "--format", "json")
        assert proc.returncode == 0
        rep = Report.from_json(proc.stdout)
        assert rep.summary["fail"] == 0
        assert rep.summary["total"] == 15
        # diagnostics go to stderr, the report to stdout
        assert "passed" in proc.stderr

    def test_verify_unknown_id_exits_2(self):
        assert run_cli("verify", "I99").returncode == 2

    def test_verify_tolerance_override_reaches_exit_1(self):
        proc = run_cli("verify", "I8", "--tol-rel", "1e-30",
                       "--tol-abs", "1e-300")
        assert proc.returncode == 1

    def test_verify_inline_grid(self):
        proc = run_cli("verify", "I19", "--grid", "a=0.25,0.5")
        assert proc.returncode == 0
        rep = Report.from_json(proc.stdout)
        assert rep.summary["total"] == 2

    def test_verify_csv_to_file(self, tmp_path):
        out = tmp_path / "report.csv"
        proc = run_cli("verify", "I2", "--format", "csv", "--out", str(out))
        assert proc.returncode == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "identity,param_1,lhs,rhs,abs_diff,rel_diff,pass"
        assert len(lines) == 16

    def test_transform_plain_theta(self):
        proc = run_cli("transform", "--pair", "dirac(b=1)", "--a", "1",
                       "--form", "theta", "--weighted", "plain")
        assert proc.returncode == 0
        assert float(proc.stdout.split()[0]) == pytest.approx(0.1572992070, rel=1e-8)

    def test_transform_s_form_power(self):
        proc = run_cli("transform", "--pair", "power(r=0)", "--a", "1",
                       "--form", "s", "--weighted", "plain")
        assert proc.returncode == 0
        assert float(proc.stdout.split()[0]) == pytest.approx(0.5, rel=1e-8)

    def test_transform_guard_exits_3(self):
        proc = run_cli("transform", "--pair", "power(r=0)", "--a", "1",
                       "--form", "theta", "--weighted", "exp")
        assert proc.returncode == 3
        assert "sigma0" in proc.stderr

    def test_transform_parse_failure_exits_2(self):
        assert run_cli("transform", "--pair", "power(q=0)", "--a", "1",
                       "--form", "s").returncode == 2

    def test_version_flag(self):
        proc = run_cli("--version")
        assert proc.returncode == 0
        assert proc.stdout.strip()

    def test_usage_error_from_argparse_is_2(self):
        assert run_cli("verify").returncode == 2


class TestJsonShape:
    def test_notes_and_skips_appear_in_report(self):
        proc = run_cli("verify", "I16", "--format", "json")
        assert proc.returncode == 0
        d = json.loads(proc.stdout)
        assert "I16" in d["notes"]
        assert d["summary"]["skipped_out_of_domain"] == len(d["skipped"]) > 0
        assert all("diverges" in s["reason"] for s in d["skipped"])
