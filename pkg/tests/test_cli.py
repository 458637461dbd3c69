"""The command-line driver: suite wiring, exit codes, JSON determinism."""

import json

import pytest

from cosimplex.cli import SUITES, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_list_enumerates_suites(capsys):
    code, out = run(capsys, "--list")
    assert code == 0
    for name in SUITES:
        assert name in out


def test_no_suite_is_a_usage_error(capsys):
    assert main([]) == 2


def test_verify_ordinal_json_is_deterministic(capsys):
    argv = ("verify", "--example", "ordinal", "--n-max", "4", "--format", "json")
    code1, out1 = run(capsys, *argv)
    code2, out2 = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical for a fixed configuration
    payload = json.loads(out1)
    assert payload["status"] == "pass"
    assert payload["suite"] == "verify"
    assert payload["checked"] > 0
    assert payload["witnesses"] == []
    assert payload["timings"] == {}


def test_timings_are_opt_in(capsys):
    code, out = run(
        capsys, "verify", "--example", "ordinal", "--format", "json", "--timings"
    )
    assert code == 0
    assert "total_seconds" in json.loads(out)["timings"]


def test_verify_examples_pass(capsys):
    for extra in (
        ("--example", "tensor", "--n-max", "2"),
        ("--example", "sym", "--n-max", "3"),
        ("--example", "gl", "--n-max", "3", "--seed", "1"),
        ("--example", "flip", "--n-max", "2"),
        ("--example", "ybe-z3", "--n-max", "2"),
        ("--example", "tl", "--n-max", "2", "--m", "5"),
    ):
        code, out = run(capsys, "verify", *extra, "--format", "json")
        assert code == 0, out


def test_spreadability_tensor_passes(capsys):
    code, out = run(
        capsys,
        "spreadability",
        "--example",
        "tensor",
        "--degree",
        "2",
        "--pos-bound",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_spreadability_broken_table_fails_with_witness(capsys):
    code, out = run(
        capsys,
        "spreadability",
        "--example",
        "broken-table",
        "--degree",
        "2",
        "--pos-bound",
        "2",
        "--format",
        "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["status"] == "fail"
    assert len(payload["witnesses"]) == 1
    assert "skip position 1" in payload["witnesses"][0]["reindexing"]


def test_spreadability_invalid_bounds_is_usage_error(capsys):
    code = main(["spreadability", "--example", "tensor", "--degree", "0"])
    assert code == 2


def test_cohomology_trivial_table(capsys):
    code, out = run(
        capsys, "cohomology", "--action", "trivial", "--n-max", "4", "--format", "json"
    )
    assert code == 0
    table = json.loads(out)["config"]["table"]
    assert all(row["dim_H"] == 0 for row in table)


def test_cohomology_burau_passes(capsys):
    code, out = run(
        capsys,
        "cohomology",
        "--action",
        "burau",
        "--n-max",
        "3",
        "--q",
        "2",
        "0",
        "--format",
        "json",
    )
    assert code == 0, out
    assert json.loads(out)["status"] == "pass"


def test_braid_check_flip(capsys):
    code, out = run(
        capsys, "braid-check", "--action", "flip", "--n-max", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_ybe_solutions(capsys):
    for solution in ("z3", "swap"):
        code, out = run(
            capsys, "ybe", "--solution", solution, "--strands", "4", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"


def test_tl_suite_both_q_values(capsys):
    for q, unitary in ((("2", "0"), False), (("0", "1"), True)):
        code, out = run(
            capsys, "tl", "--q", q[0], q[1], "--m", "6", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "pass"
        assert payload["config"]["unitary"] is unitary


def test_q_parses_fraction_strings(capsys):
    code, out = run(
        capsys, "tl", "--q", "1/2", "0", "--m", "4", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_text_format_summarizes(capsys):
    code, out = run(capsys, "verify", "--example", "ordinal", "--n-max", "3")
    assert code == 0
    assert out.startswith("[pass] suite=verify")


def test_threads_env_is_recorded(capsys, monkeypatch):
    monkeypatch.setenv("COSIMPLEX_THREADS", "4")
    _, out = run(capsys, "verify", "--example", "ordinal", "--format", "json")
    assert json.loads(out)["config"]["threads"] == 4
    monkeypatch.setenv("COSIMPLEX_THREADS", "junk")
    _, out = run(capsys, "verify", "--example", "ordinal", "--format", "json")
    assert json.loads(out)["config"]["threads"] == 1
