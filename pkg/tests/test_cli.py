"""Command line behavior: formats, exit codes, error reporting."""

import json

from folindex.cli import main


def run_cli(tmp_path, capsys, text, *extra):
    path = tmp_path / "session.fol"
    path.write_text(text, encoding="utf-8")
    code = main(["run", str(path)] + list(extra))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_text_output_all_ok(tmp_path, capsys):
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := y^2 - x^3; milnor f at (0,0); "
        "v := vf(2*x, 3*y); homological v along f at (0,0);")
    assert code == 0
    assert err == ""
    assert "== milnor f at (0, 0)" in out
    assert "value: 2" in out
    assert "value: -1" in out
    assert out.count("verdict: OK") == 2


def test_json_output_rationals(tmp_path, capsys):
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := y^2 - x^3; milnor f at (0,0); "
        "v := vf(x, 7*y); bb v phi (c1^2) at (0,0);",
        "--format", "json")
    assert code == 0
    data = json.loads(out)
    records = data["records"]
    assert len(records) == 2
    # integers stay integers, proper fractions become "p/q" strings
    assert records[0]["value"] == 2
    assert records[1]["value"] == "64/7"
    for rec in records:
        assert set(rec) == {"command", "inputs", "value", "method",
                            "crosschecks", "verdict"}
        for check in rec["crosschecks"]:
            assert isinstance(check, list) and len(check) == 3
            assert isinstance(check[1], bool)


def test_check_pass_exit_zero(tmp_path, capsys):
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := y^2 - x^3; v := vf(2*x, 3*y); "
        "P0 := point (1, 0, 0); Pinf := point (0, 0, 1); "
        "b0 := branch(t^2, t^3) order 20; binf := branch(t^3, t) order 20; "
        "check cs_total of v along f points (P0 branch b0, Pinf branch binf);")
    assert code == 0
    assert "verdict: PASS" in out
    assert "value: 9" in out


def test_check_fail_exit_one(tmp_path, capsys):
    # no branches declared at either point: each local sum is 0, so the
    # total misses the closed form and the check must fail honestly
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := y^2 - x^3; v := vf(2*x, 3*y); "
        "P0 := point (1, 0, 0); Pinf := point (0, 0, 1); "
        "check cs_total of v along f points (P0, Pinf);")
    assert code == 1
    assert "verdict: FAIL" in out


def test_parse_error_exit_two(tmp_path, capsys):
    code, out, err = run_cli(tmp_path, capsys, "ring x,y; f := ;")
    assert code == 2
    assert out == ""
    assert "error:" in err and "line 1" in err


def test_undeclared_name_exit_two(tmp_path, capsys):
    code, out, err = run_cli(tmp_path, capsys, "ring x,y;\np := q + 1;")
    assert code == 2
    assert "line 2" in err and "column 6" in err


def test_missing_file_exit_two(tmp_path, capsys):
    code = main(["run", str(tmp_path / "absent.fol")])
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err


def test_oracle_flag(tmp_path, capsys):
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := y^2 - x^3; v := vf(2*x, 3*y); "
        "homological v along f at (0,0);",
        "--oracle", "on")
    assert code == 0
    assert "verdict: OK" in out


def test_step_budget_exit_two(tmp_path, capsys):
    code, out, err = run_cli(
        tmp_path, capsys,
        "ring x,y; f := x^5 + y^5 + x^2*y^2; milnor f at (0,0);",
        "--steps", "2")
    assert code == 2
    assert "error:" in err and "budget" in err
