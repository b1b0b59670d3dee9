import json
from fractions import Fraction

import pytest

from eulersym import altsum, identities
from eulersym.cli import SweepConfig, emit_report, main, run_sweep


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- euler


def test_euler_coefficients(capsys):
    code, out, _ = run_cli(capsys, "euler", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["1/4", "0", "-3/2", "1"]


def test_euler_point_value(capsys):
    code, out, _ = run_cli(capsys, "euler", "--n", "2", "--x", "1/2")
    assert code == 0
    assert out.strip() == "-1/4"


def test_euler_rejects_negative_n(capsys):
    code, _, err = run_cli(capsys, "euler", "--n", "-1")
    assert code == 2
    assert "error" in err


# ---------------------------------------------------------------- altsum


def test_altsum_value(capsys):
    code, out, _ = run_cli(capsys, "altsum", "--k", "2", "--n", "3")
    assert code == 0
    assert out.strip() == "-6"


def test_altsum_rejects_negative(capsys):
    code, _, _ = run_cli(capsys, "altsum", "--k", "-2", "--n", "3")
    assert code == 2


# ---------------------------------------------------------------- series


def test_series_alternating_quotient(capsys):
    # L23 with i=3 at (1,1,3) collapses to (e^{3t}+1)/(e^t+1): T_k(2)
    code, out, _ = run_cli(
        capsys, "series", "--family", "L23", "--i", "3", "--w", "1,1,3",
        "--order", "3",
    )
    assert code == 0
    assert out.splitlines() == ["1", "1", "3", "7"]


def test_series_with_shifts(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--family", "L12_0", "--w", "2,3,4", "--y", "1/2",
        "--order", "4",
    )
    assert code == 0
    assert len(out.splitlines()) == 5


def test_series_parity_rejection(capsys):
    code, _, err = run_cli(
        capsys, "series", "--family", "L23", "--i", "1", "--w", "2,3,5",
        "--y", "0,0",
    )
    assert code == 2
    assert "odd" in err


def test_series_malformed_weights(capsys):
    code, _, _ = run_cli(capsys, "series", "--family", "L13", "--i", "3", "--w", "1,x,3")
    assert code == 2


# ---------------------------------------------------------------- verify


def test_verify_c10_worked_example(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--family", "C10", "--wset", "3", "--nmax", "1",
        "--ys", "0",
    )
    assert code == 0
    records = json.loads(out)
    assert len(records) == 2
    assert records[1] == {
        "family": "C10",
        "n": 1,
        "w": [3],
        "y": ["0"],
        "values": ["-1/2", "-1/2"],
        "equal": True,
    }
    assert "cases=2" in err and "failures=0" in err


def test_verify_single_record_bytes():
    config = SweepConfig(
        families=("C10",), w_set=(3,), n_max=1, y_samples=(Fraction(0),)
    )
    records, summary = run_sweep(config)
    assert summary.cases_run == 2 and summary.failures == 0
    payload = emit_report(records[1:], "json")
    assert payload == (
        b'[{"family":"C10","n":1,"w":[3],"y":["0"],'
        b'"values":["-1/2","-1/2"],"equal":true}]'
    )


def test_verify_is_deterministic(capsys):
    args = (
        "verify", "--family", "C9,C10", "--wset", "1,3,5", "--nmax", "3",
        "--ys", "0,1/2,-1/3",
    )
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--family", "C10", "--wset", "3", "--nmax", "1",
        "--ys", "0", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,n,w,y,values,equal"
    assert lines[2] == "C10,1,3,0,-1/2|-1/2,true"


def test_verify_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--family", "C10", "--wset", "3", "--nmax", "0",
        "--ys", "0", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    records = json.loads(target.read_text())
    assert records[0]["equal"] is True


def test_verify_parity_filter_yields_zero_cases(capsys):
    # odd-only families drop even weights even when the flag is set
    code, out, err = run_cli(
        capsys, "verify", "--family", "T2", "--wset", "2", "--nmax", "2",
        "--ys", "0", "--include-even-w",
    )
    assert code == 0
    assert json.loads(out) == []
    assert "0 admissible" in err


def test_empty_family_list_runs_zero_cases():
    config = SweepConfig(families=(), w_set=(3,), n_max=2, y_samples=(Fraction(0),))
    records, summary = run_sweep(config)
    assert records == [] and summary.cases_run == 0 and summary.ok


def test_emit_report_empty():
    assert emit_report([], "json") == b"[]"
    assert emit_report([], "csv") == b"family,n,w,y,values,equal\n"
    with pytest.raises(ValueError):
        emit_report([], "yaml")


def test_verify_include_even_w_extends_t16(capsys):
    args = ("verify", "--family", "T16", "--wset", "1,2", "--nmax", "1", "--ys", "0")
    code, out, _ = run_cli(capsys, *args)
    assert code == 0
    weights = {tuple(r["w"]) for r in json.loads(out)}
    assert weights == {(1, 1, 1)}

    code, out, _ = run_cli(capsys, *args, "--include-even-w")
    assert code == 0
    weights = {tuple(r["w"]) for r in json.loads(out)}
    assert weights == {t for t in weights} and (2, 2, 2) in weights
    assert len(weights) == 8


def test_verify_rejects_malformed_rational(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--family", "C10", "--wset", "3", "--nmax", "1",
        "--ys", "0,beta",
    )
    assert code == 2
    assert "malformed" in err


def test_verify_rejects_unknown_family(capsys):
    code, _, err = run_cli(capsys, "verify", "--family", "T99")
    assert code == 2
    assert "unknown famil" in err


def test_verify_rejects_bad_weight(capsys):
    code, _, _ = run_cli(capsys, "verify", "--family", "C10", "--wset", "0", "--nmax", "1")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--format", "yaml"])
    assert excinfo.value.code == 2


def test_sweep_order_is_lexicographic():
    config = SweepConfig(
        families=("T17", "C18"), w_set=(1, 3), n_max=1,
        y_samples=(Fraction(0),),
    )
    records, _ = run_sweep(config)
    keys = [(r.family_id, r.n, r.w, r.y) for r in records]
    assert keys == sorted(keys)


def test_failing_record_and_exit_code(monkeypatch, capsys):
    # Shift every alternating power sum one slot: T_k(w) instead of
    # T_k(w-1).  The sweep must notice and the process must exit 1.
    monkeypatch.setattr(
        identities, "_tval", lambda k, upper: altsum.alt_power_sum(k, upper + 1)
    )
    code, out, err = run_cli(
        capsys, "verify", "--family", "C10", "--wset", "3", "--nmax", "2",
        "--ys", "0,1/2",
    )
    assert code == 1
    records = json.loads(out)
    assert any(not r["equal"] for r in records)
    assert "cases=6 failures=5" in err
