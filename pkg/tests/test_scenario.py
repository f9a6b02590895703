import pytest

from contactcalc.scenario import (E_ARITY, E_SYNTAX, E_UNDECLARED,
                                  ScenarioError, parse_scenario, run_scenario)

DECLS = """
page genus1 dim=2 handles=[0:1,1:2] stein=true spheres=[a,b]
word ta = a
word tb2 = b^2
word wid = a a^-1
openbook ob1 = (genus1, ta)
openbook ob2 = (genus1, tb2)
"""


def test_parse_declarations():
    s = parse_scenario(DECLS)
    assert s.pages["genus1"].half_dim == 1
    assert s.pages["genus1"].spheres == ("a", "b")
    assert str(s.words["ta"].word) == "a"
    assert s.words["wid"].word.is_identity()
    assert s.openbooks["ob1"].page.name == "genus1"


def test_empty_scenario():
    report, status, files = run_scenario(parse_scenario(""))
    assert report == "" and status == 0 and files == []


def test_sum_and_verify_equal():
    text = DECLS + """
word tab = a b^2
openbook ob3 = (genus1, tab)
sum ob1 ob2 -> m
verify equal m ob3
"""
    s = parse_scenario(text)
    report, status, _ = run_scenario(s)
    assert status == 0
    assert "verify:equal:m:ob3\tequal\t-\tPASS" in report


def test_verify_equal_failure_sets_exit():
    text = DECLS + "sum ob1 ob2 -> m\nverify equal m ob1\n"
    report, status, _ = run_scenario(parse_scenario(text))
    assert status == 1
    assert "FAIL" in report


def test_surgery_and_cover_commands():
    text = DECLS + """
surgery ob1 sphere=a k=-2 -> m1
cover ob2 q=3 over=binding -> c3
"""
    report, status, _ = run_scenario(parse_scenario(text))
    assert status == 0
    assert "surgery:m1\ta^3\t-\tOK" in report
    assert "cover:c3\tb^6\t-\tOK" in report


def test_kirby_command_counts_and_out(tmp_path):
    text = DECLS + "kirby cover genus1 q=2\nkirby surgery k=-1 out=d.kirby\n"
    report, status, files = run_scenario(parse_scenario(text),
                                         out_dir=str(tmp_path))
    assert status == 0
    assert "kirby:dotted\t1\t-\tOK" in report
    assert "kirby:two_handles\t2\t-\tOK" in report
    assert len(files) == 1
    assert (tmp_path / "d.kirby").read_text().startswith("KIRBY 1")


def test_verify_forms_in_scenario():
    report, status, _ = run_scenario(parse_scenario("verify forms samples=5\n"))
    assert status == 0
    assert "contact_margin_dz_plus_lambda_std" in report


def test_fibered_command():
    text = DECLS + "fibered genus1 ta tb2 -> f\n"
    report, status, _ = run_scenario(parse_scenario(text))
    assert status == 0
    assert "fibered:f" in report


def _err(text):
    with pytest.raises(ScenarioError) as exc:
        parse_scenario(text)
    return exc.value


def test_error_unknown_statement_position():
    e = _err("   bogus stuff\n")
    assert e.code == E_SYNTAX and e.line == 1 and e.col == 4


def test_error_undeclared_page():
    e = _err("word w = a\nopenbook ob = (ghost, w)\n")
    assert e.code == E_UNDECLARED and e.line == 2


def test_error_undeclared_sphere_label_at_letter():
    e = _err("page p dim=2 handles=[0:1,1:1] stein=true spheres=[a]\n"
             "word w = a c^2\n"
             "openbook ob = (p, w)\n")
    assert e.code == E_UNDECLARED
    assert e.line == 2 and e.col == 12  # points at the letter c^2


def test_error_missing_required_key():
    e = _err(DECLS + "surgery ob1 k=1 -> m\n")
    assert e.code == E_ARITY  # missing sphere=


def test_error_bad_integer():
    e = _err("page p dim=two handles=[0:1] stein=true\n")
    assert e.code == E_SYNTAX


def test_error_arity_sum():
    e = _err(DECLS + "sum ob1 -> m\n")
    assert e.code == E_ARITY


def test_error_missing_arrow():
    e = _err(DECLS + "sum ob1 ob2\n")
    assert e.code == E_ARITY


def test_targets_usable_downstream():
    text = DECLS + """
sum ob1 ob2 -> m
surgery m sphere=a k=1 -> m2
verify equal m2 m2
"""
    report, status, _ = run_scenario(parse_scenario(text))
    assert status == 0
