import json

from click.testing import CliRunner

from fatcat.cli import main
from fatcat.report import Report


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_passing_suite_exits_zero():
    res = run("check", "axioms", "--input", "builtin:z2")
    assert res.exit_code == 0
    assert "PASS" in res.output


def test_violations_exit_one():
    res = run("check", "coherence-base", "--input", "builtin:dsum2-corrupt")
    assert res.exit_code == 1
    assert "FAIL" in res.output
    assert "law.pentagon" in res.output or "associator-naturality" in res.output


def test_multiple_suites_one_bad_exits_one():
    res = run("check", "axioms", "coherence-base", "--input", "builtin:dsum2-corrupt")
    assert res.exit_code == 1
    assert "axioms" in res.output


def test_bad_input_exits_two():
    assert run("check", "axioms", "--input", "builtin:nope").exit_code == 2
    assert run("check", "no-such-suite", "--input", "builtin:z2").exit_code == 2
    assert run("check", "biholonomy", "--input", "builtin:z2").exit_code == 2


def test_json_output_is_byte_identical_across_runs():
    for args in (
        ("check", "axioms", "lemma1", "--input", "builtin:s3", "--format", "json"),
        ("check", "biholonomy", "--input", "builtin:lat-demo-z4", "--format", "json"),
        ("check", "interchange", "--input", "builtin:z3", "--format", "json"),
    ):
        first, second = run(*args), run(*args)
        assert first.exit_code == 0
        assert first.output == second.output


def test_json_report_round_trips():
    res = run("check", "crossed-module", "--input", "builtin:cm-trivial-s3", "--format", "json")
    assert res.exit_code == 1
    payload = json.loads(res.output)
    for entry in payload["reports"]:
        rep = Report.from_dict(entry)
        assert rep.to_dict() == entry


def test_max_size_caps_interchange():
    res = run(
        "check", "interchange", "--input", "builtin:gl2f2",
        "--max-size", "5000", "--format", "json",
    )
    assert res.exit_code == 0
    data = json.loads(res.output)["reports"][0]["data"]
    assert data["stride"] > 1
    assert data["grids_checked"] <= 5000 + data["stride"]


def test_predicate_option():
    res = run("check", "enrichment", "--input", "builtin:z2", "--predicate", "identity-table")
    assert res.exit_code == 1
    assert "right-translation-outside" in res.output


def test_list_command():
    res = run("list")
    assert res.exit_code == 0
    assert "builtin:s3" in res.output
    assert "interchange" in res.output


def test_biholonomy_table_rendering():
    res = run("check", "biholonomy", "--input", "builtin:lat-flat-z4")
    assert res.exit_code == 0
    assert "abelian: True" in res.output
