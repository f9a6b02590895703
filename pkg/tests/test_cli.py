import pathlib

import pytest

from contactcalc.cli import main

DEMO = pathlib.Path(__file__).parent.parent / "demos" / "branched_cover_l21.scn"


def test_verify_forms_exit_zero(capsys):
    assert main(["verify", "forms", "--samples", "5"]) == 0
    out = capsys.readouterr().out
    assert "contact_margin_dz_plus_lambda_std" in out
    assert "FAIL" not in out


def test_verify_twist_exit_zero(capsys):
    assert main(["verify", "twist", "--n", "1", "--samples", "5"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_compose(capsys):
    assert main(["compose", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert "combined\t5" in out
    assert "zero_section^-5" in out


def test_surgery_descriptor(capsys):
    assert main(["surgery", "--n", "1", "--k", "-1"]) == 0
    out = capsys.readouterr().out
    assert '"zero_section"' in out and '"dim": 3' in out


def test_cover_descriptor(capsys):
    assert main(["cover", "--n", "1", "--q", "2"]) == 0
    assert '"dim": 3' in capsys.readouterr().out


def test_fibered(capsys):
    assert main(["fibered", "--n", "1"]) == 0
    assert "bd(D*S1 x D*S1)" in capsys.readouterr().out


def test_kirby_modes(capsys):
    assert main(["kirby", "surgery", "--k", "-1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("KIRBY 1")
    assert main(["kirby", "cover", "--q", "3"]) == 0
    assert capsys.readouterr().out.count("curve:") == 8


def test_out_flag(tmp_path):
    path = tmp_path / "report.txt"
    assert main(["verify", "forms", "--samples", "5", "--out", str(path)]) == 0
    assert "PASS" in path.read_text()


def test_run_demo_scenario(capsys):
    assert main(["run", str(DEMO)]) == 0
    out = capsys.readouterr().out
    assert "verify:equal:chained:sixfold\tequal\t-\tPASS" in out
    assert "kirby:dotted\t1\t-\tOK" in out


def test_run_corrupted_scenario(tmp_path, capsys):
    bad = tmp_path / "bad.scn"
    bad.write_text("page p dim=2 handles=[0:1] stein=true\nsum ghost ghost2 -> m\n")
    assert main(["run", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err and "E_UNDECLARED" in err


def test_surgery_error_exit(capsys):
    assert main(["surgery", "--n", "1", "--k", "0"]) == 2
    assert "error" in capsys.readouterr().err
