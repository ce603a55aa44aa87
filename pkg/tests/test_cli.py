"""End-to-end checks of the command-line surface."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from onerelator import generate_random, save_complex
from onerelator.cli import main

GOLDEN = "tests/data/random_seed0_size3.json"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out else None
    return code, report, captured.err


# -- happy paths --------------------------------------------------------------


def test_analyze_gt(capsys):
    code, out, err = run_cli(capsys, "analyze", "--word", "at")
    assert code == 0
    assert out["command"] == "analyze"
    assert out["report"]["status"] == "Surjective"
    assert out["report"]["reason"] == "GtCollapse"
    assert "analyze: done" in err


def test_analyze_main_theorem(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--word", "bTatct", "--rank", "3"
    )
    assert code == 0
    rep = out["report"]
    assert (rep["status"], rep["reason"]) == ("NotSurjective", "MainTheorem")
    assert rep["evidence"]["t_shape"] == [-1, 1, 1]


def test_decompose(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--word", "bTatct", "--rank", "3"
    )
    assert code == 0
    rep = out["report"]
    assert rep["m"] == 1
    assert rep["pairs"] == [["(b)@0", "(a)@0"]]
    assert rep["two_variable_word"] == "bSascs"


def test_shape(capsys):
    code, out, _ = run_cli(capsys, "shape", "--word", "aT^2bt^3")
    assert code == 0
    rep = out["report"]
    assert rep["t_shape"] == [-2, 3]
    assert rep["exponent_sum"] == 1
    assert rep["coefficients"] == ["a", "b", ""]
    assert rep["amenable_known"] is False


def test_shape_amenable(capsys):
    _, out, _ = run_cli(capsys, "shape", "--word", "at")
    assert out["report"]["amenable"] is True


def test_validate(capsys):
    code, out, _ = run_cli(capsys, "validate", "--complex", GOLDEN)
    assert code == 0
    rep = out["report"]
    assert rep["passed"] is True
    assert "type1_witness" in rep and "type2_witness" in rep
    assert "csl" not in rep


def test_validate_with_word(capsys):
    code, out, _ = run_cli(
        capsys, "validate", "--complex", GOLDEN, "--word", "at"
    )
    assert code == 0
    csl = out["report"]["csl"]
    assert set(csl) == set("abcdefg")
    for item in csl.values():
        assert set(item) == {"detail", "passed"}


def test_simulate_default_horizon(capsys):
    code, out, _ = run_cli(capsys, "simulate", "--complex", GOLDEN)
    assert code == 0
    rep = out["report"]
    assert rep["at_least_two_complete_crashes"] in (True, False)
    assert rep["seed"] == 0
    assert all("/" in e["time"] for e in rep["events"])


def test_simulate_explicit_horizon(capsys):
    code, out, _ = run_cli(
        capsys, "simulate", "--complex", GOLDEN, "--horizon", "3/2", "--seed", "4"
    )
    assert code == 0
    rep = out["report"]
    assert rep["at_least_two_complete_crashes"] is None
    assert rep["horizon"] == "3/2"


def test_certify(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--word", "aTatt", "--rank", "1", "--max-degree", "4"
    )
    assert code == 0
    cert = out["report"]["certificate"]
    assert cert["degree"] == 3
    assert sorted(cert["images"]) == ["a", "t"]


def test_certify_none(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--word", "at", "--rank", "1", "--max-degree", "3"
    )
    assert code == 0
    assert out["report"]["certificate"] is None


def test_search_kernel(capsys):
    code, out, _ = run_cli(
        capsys,
        "search-kernel",
        "--word",
        "at",
        "--target-shape",
        "1",
        "--conj-len",
        "2",
        "--products",
        "2",
    )
    assert code == 0
    found = out["report"]["found"]
    assert found is not None and found["element"] == "at"


def test_search_kernel_miss(capsys):
    code, out, _ = run_cli(
        capsys,
        "search-kernel",
        "--word",
        "atataT",
        "--target-shape",
        "1",
        "--conj-len",
        "2",
        "--products",
        "2",
    )
    assert code == 0
    assert out["report"]["found"] is None


# -- determinism --------------------------------------------------------------


def subprocess_stdout(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "onerelator.cli", *argv],
        capture_output=True,
        check=True,
    )
    return proc.stdout


def test_reports_byte_identical():
    args = ("simulate", "--complex", GOLDEN, "--seed", "7")
    assert subprocess_stdout(*args) == subprocess_stdout(*args)
    args = ("analyze", "--word", "abtAB")
    assert subprocess_stdout(*args) == subprocess_stdout(*args)


# -- failure modes ------------------------------------------------------------


def test_bad_word_exits_2(capsys):
    code, out, err = run_cli(capsys, "analyze", "--word", "ax")
    assert code == 2 and out is None and "error" in err


def test_bad_rank_word_exits_2(capsys):
    code, _, _ = run_cli(capsys, "decompose", "--word", "c", "--rank", "2")
    assert code == 2


def test_decompose_nonunit_exponent_exits_2(capsys):
    code, _, _ = run_cli(capsys, "decompose", "--word", "att")
    assert code == 2


def test_missing_complex_exits_2(capsys):
    code, _, _ = run_cli(capsys, "validate", "--complex", "no/such/file.json")
    assert code == 2


def test_invalid_complex_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": []}))
    code, _, _ = run_cli(capsys, "validate", "--complex", str(path))
    assert code == 2


def test_bad_horizon_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "simulate", "--complex", GOLDEN, "--horizon", "x"
    )
    assert code == 2


def test_bad_target_shape_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "search-kernel", "--word", "at", "--target-shape", "1,z"
    )
    assert code == 2


def test_degree_cap_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "certify", "--word", "at", "--max-degree", "9"
    )
    assert code == 2


def test_unknown_command_usage_error(capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate"])
