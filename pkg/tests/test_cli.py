"""The command line interface: exit codes, determinism, output shapes."""

import json

import pytest

from semivar.cli import main
from semivar.report import Report


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count_only(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--order", "2", "--count-only")
    assert code == 0
    assert out == "8\n"


def test_enumerate_lists_tables(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--order", "2")
    lines = out.strip().split("\n")
    assert code == 0
    assert len(lines) == 8
    assert lines[0] == "2;0 0;0 0"


def test_enumerate_dedup(capsys):
    code, out, err = run_cli(
        capsys, "enumerate", "--order", "2", "--dedup", "--count-only"
    )
    assert code == 0
    assert out == "5\n"


def test_enumerate_rejects_large_order(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--order", "6", "--count-only")
    assert code == 1
    assert "error" in err


def test_check_emits_report(capsys):
    code, out, err = run_cli(
        capsys, "check", "--orders", "2", "--claims", "C-2.5,C-3.4"
    )
    assert code == 0
    report = Report.loads(out)
    assert report.corpus["tables"] == {"2": 8}
    assert report.config["claims"] == ["C-2.5", "C-3.4"]
    assert all(r.status == "HOLDS" for r in report.results)


def test_check_observed_failures_exit_zero(capsys):
    code, out, err = run_cli(
        capsys, "check", "--orders", "2", "--claims", "C-4.1-reverse"
    )
    assert code == 0
    report = Report.loads(out)
    assert report.failed_claim_ids() == ["C-4.1-reverse"]


def test_check_unknown_claim(capsys):
    code, out, err = run_cli(capsys, "check", "--claims", "C-0.0")
    assert code == 1
    assert "unknown claim" in err


def test_check_bad_orders(capsys):
    code, out, err = run_cli(capsys, "check", "--orders", "2,x")
    assert code == 1


def test_check_is_deterministic(capsys):
    def stripped():
        code, out, _ = run_cli(
            capsys, "check", "--orders", "2", "--claims", "all"
        )
        assert code == 0
        lines = out.strip().split("\n")
        summary = json.loads(lines[-1])
        del summary["timestamp"]
        return lines[:-1], summary

    first = stripped()
    second = stripped()
    assert first == second


def test_check_writes_file(tmp_path, capsys):
    out_path = tmp_path / "report.jsonl"
    code, out, err = run_cli(
        capsys, "check", "--orders", "2", "--claims", "C-2.5",
        "--out", str(out_path),
    )
    assert code == 0
    assert out == ""
    report = Report.loads(out_path.read_text())
    assert report.corpus["orders"] == [2]


def test_inspect_green_and_star(tmp_path, capsys):
    sgt = tmp_path / "t.sgt"
    sgt.write_text("2\n0 0\n1 1\n")
    code, out, err = run_cli(capsys, "inspect", str(sgt))
    assert code == 0
    assert "order 2" in out
    assert "identity -" in out
    assert "idempotents 0 1" in out
    assert "L  {0,1}" in out
    assert "R  {0} {1}" in out
    assert "L* {0,1}" in out


def test_inspect_tilde_and_congruences(tmp_path, capsys):
    sgt = tmp_path / "t.sgt"
    sgt.write_text("2\n0 0\n0 1\n")
    code, out, err = run_cli(
        capsys, "inspect", str(sgt),
        "--show", "tilde:1,congruences,orders",
    )
    assert code == 0
    assert "L~[1] {0,1}" in out
    assert "congruence {0,1}" in out
    assert "congruence {0} {1}" in out
    assert "natural 0<=1" in out


def test_inspect_rejects_unknown_show(tmp_path, capsys):
    sgt = tmp_path / "t.sgt"
    sgt.write_text("2\n0 0\n1 1\n")
    code, out, err = run_cli(capsys, "inspect", str(sgt), "--show", "matrix")
    assert code == 1


def test_inspect_missing_file(capsys):
    code, out, err = run_cli(capsys, "inspect", "no-such-file.sgt")
    assert code == 1


def test_inspect_bad_table(tmp_path, capsys):
    sgt = tmp_path / "t.sgt"
    sgt.write_text("2\n1 0\n0 0\n")  # not associative
    code, out, err = run_cli(capsys, "inspect", str(sgt))
    assert code == 1
    assert "error" in err


def test_variant_prints_table(tmp_path, capsys):
    sgt = tmp_path / "z2.sgt"
    sgt.write_text("2\n0 1\n1 0\n")
    code, out, err = run_cli(capsys, "variant", str(sgt), "--at", "1")
    assert code == 0
    assert out == "2\n1 0\n0 1\n"


def test_variant_idempotent_only(tmp_path, capsys):
    sgt = tmp_path / "z2.sgt"
    sgt.write_text("2\n0 1\n1 0\n")
    code, out, err = run_cli(
        capsys, "variant", str(sgt), "--at", "1", "--idempotent-only"
    )
    assert code == 1
    assert "error" in err


def test_usage_error_exits_one(capsys):
    code, out, err = run_cli(capsys)
    assert code == 1
    code, out, err = run_cli(capsys, "frobnicate")
    assert code == 1


def test_help_exits_zero(capsys):
    code, out, err = run_cli(capsys, "--help")
    assert code == 0
    assert "check" in out and "enumerate" in out
