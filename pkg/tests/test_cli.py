import json

import pytest

from cli.main import run
from delannoy.weights import render_scalar, weight
from riordan import export
from riordan.diagonals import diagonal_family
from riordan.matrix import from_T
from series.parser import parse_series


def out(capsys) -> str:
    return capsys.readouterr().out.strip()


def test_show_json(capsys):
    assert run(["show", "--expr-f", "1", "--expr-g", "1-x", "--rows", "4", "--format", "json"]) == 0
    data = json.loads(out(capsys))
    assert data["prefix"] == [["1"], ["1", "1"], ["1", "2", "1"], ["1", "3", "3", "1"]]


def test_show_from_coefficients_and_dh(capsys):
    assert run(["show", "--coeffs-f", "1", "--coeffs-g", "1,-1", "--rows", "3", "--format", "csv"]) == 0
    assert out(capsys) == "1,,\n1,1,\n1,2,1"
    assert run(["show", "--expr-d", "1/(1-x)", "--expr-h", "x/(1-x)", "--rows", "3", "--format", "csv"]) == 0
    assert out(capsys) == "1,,\n1,1,\n1,2,1"


def test_domain_error_names_flag(capsys):
    assert run(["show", "--expr-f", "x", "--expr-g", "1-x", "--rows", "3"]) == 1
    assert "--expr-f" in capsys.readouterr().err


def test_parse_error_is_usage_error(capsys):
    assert run(["show", "--expr-f", "1", "--expr-g", "1-y", "--rows", "3"]) == 2
    err = capsys.readouterr().err
    assert "--expr-g" in err and "position 2" in err


def test_missing_series_is_usage_error(capsys):
    assert run(["inverse", "--expr-f", "1"]) == 2
    assert "--expr-g" in capsys.readouterr().err


def test_unknown_command():
    assert run(["transpose"]) == 2


def test_aseq_and_apply(capsys):
    assert run(["aseq", "--expr-f", "1", "--expr-g", "1-x", "--rows", "4", "--format", "csv"]) == 0
    assert out(capsys) == "1,1,0,0"
    assert run(["apply", "--expr-f", "1", "--expr-g", "1-x", "--expr-gamma", "1/(1-x)", "--rows", "5"]) == 0
    assert out(capsys) == "1, 2, 4, 8, 16"


def test_product(capsys):
    args = ["product", "--expr-f", "1", "--expr-g", "1-x", "--expr-l", "1", "--expr-m", "1-x", "--rows", "3"]
    assert run(args + ["--format", "csv"]) == 0
    assert out(capsys) == "1,,\n2,1,\n4,4,1"


def test_diag_sprugnoli(capsys):
    args = ["diag", "--expr-f", "1", "--expr-g", "1-x", "--rows", "3", "--cols", "3", "--format", "json"]
    assert run(args) == 0
    assert json.loads(out(capsys))["rows"] == [["1", "1", "1"], ["1", "2", "3"], ["1", "3", "6"]]
    assert run(args + ["--sprugnoli"]) == 0
    assert json.loads(out(capsys))["rows"] == [["1", "0", "0"], ["1", "1", "0"], ["1", "2", "1"]]


def test_palindromic_commands(capsys):
    assert run(["palindromic", "construct", "--f0", "1", "--g0", "1", "--f1=-1", "--rows", "4", "--format", "csv"]) == 0
    assert out(capsys) == "1,,,\n1,1,,\n1,3,1,\n1,5,5,1"
    assert run(["palindromic", "classify", "--f0", "1", "--g0=-1", "--rows", "6"]) == 0
    assert out(capsys) == "involution"
    assert run(["palindromic", "check", "--expr-f", "1", "--expr-g", "(1+sqrt(1-4*x))/2", "--rows", "5", "--format", "json"]) == 0
    data = json.loads(out(capsys))
    assert data["palindromic"] is False
    assert data["counterexample"] == [2, 0]


def test_palindromic_rejects_zero_parameter(capsys):
    assert run(["palindromic", "construct", "--f0", "0", "--g0", "1"]) == 2
    assert "--f0" in capsys.readouterr().err


def test_gk_and_qcones(capsys):
    assert run(["gk-check", "--expr-g", "1+2*x^2-x^3", "--k", "3", "--cols", "5"]) == 0
    capsys.readouterr()
    assert run(["gk-check", "--expr-g", "1+x", "--k", "3"]) == 1
    assert "--expr-g" in capsys.readouterr().err
    assert run(["qcones", "--m", "2", "--q", "3", "--rows", "6", "--check"]) == 0


def test_delannoy_commands(capsys):
    assert run(["delannoy", "weight", "--n", "2", "--m", "2", "--symbolic"]) == 0
    assert out(capsys) == "a^4 + 4*a^2*b + b^2"
    assert run(["delannoy", "weight", "--n", "2", "--m", "2", "--a", "1", "--b", "2"]) == 0
    assert out(capsys) == "13"
    assert run(["delannoy", "paths", "--n", "3", "--m", "3"]) == 0
    assert out(capsys) == "63"
    assert run(["delannoy", "classes", "--n", "2", "--m", "2", "--format", "json"]) == 0
    assert len(json.loads(out(capsys))["rows"]) == 6
    assert run(["delannoy", "qmatrix", "--a", "1", "--b", "2", "--rows", "3", "--format", "csv"]) == 0
    assert out(capsys) == "1,,\n1,1,\n1,3,1"


def test_delannoy_degenerate_weight(capsys):
    assert run(["delannoy", "qmatrix", "--a", "0", "--b", "1", "--rows", "3"]) == 1
    assert "--a" in capsys.readouterr().err
    assert run(["delannoy", "weight", "--n", "1", "--m", "1"]) == 2


def test_fixtures(capsys):
    assert run(["fixtures", "--verify"]) == 0
    assert "delannoy: ok" in out(capsys)
    assert run(["fixtures", "--name", "pascal", "--format", "csv"]) == 0
    assert out(capsys).splitlines()[2] == "1,2,1,,,"
    assert run(["fixtures", "--name", "nope"]) == 2


@pytest.mark.parametrize("value", ["1.5", "x"])
def test_rational_flags(value):
    assert run(["delannoy", "weight", "--n", "1", "--m", "1", "--a", value, "--b", "1"]) == 2


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["delannoy", "gf", "--n", "2"], "--a"),
        (["delannoy", "factorize", "--rows", "4"], "--a"),
        (["delannoy", "paths", "--n=-1", "--m", "1"], "--n"),
        (["delannoy", "classes", "--n", "1", "--m=-2"], "--m"),
        (["diag", "--expr-f", "1", "--expr-g", "1-x", "--rows", "3", "--cols", "0"], "--cols"),
        (["qcones", "--m", "2", "--q", "3", "--cols", "0"], "--cols"),
        (["gk-check", "--expr-g", "1+x^2", "--k", "3", "--cols=-1"], "--cols"),
    ],
)
def test_out_of_range_flags_are_usage_errors(capsys, argv, flag):
    assert run(argv) == 2
    assert flag in capsys.readouterr().err


@pytest.mark.parametrize("action", ["paths", "classes"])
def test_enumeration_budget_names_flag(capsys, action):
    assert run(["delannoy", action, "--n", "9", "--m", "1"]) == 1
    assert "--n" in capsys.readouterr().err
    assert run(["delannoy", action, "--n", "1", "--m", "9"]) == 1
    assert "--m" in capsys.readouterr().err


def test_repeated_runs_print_the_same_bytes(capsys):
    args = ["diag", "--expr-f", "1/(1-x)^2", "--expr-g", "2*x-1", "--rows", "6", "--cols", "6", "--format", "csv"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first


def test_commands_print_the_library_result(capsys):
    D = from_T(parse_series("1/(1-x)^2", 6), parse_series("2*x-1", 6))
    series_flags = ["--expr-f", "1/(1-x)^2", "--expr-g", "2*x-1", "--rows", "6", "--format", "csv"]
    assert run(["show"] + series_flags) == 0
    assert out(capsys) == export.render_matrix(D, "csv").strip()
    assert run(["diag", "--cols", "6"] + series_flags) == 0
    grid = diagonal_family(D, 6, 6).grid()
    assert out(capsys) == export.render_table(list(grid.cells), "csv", name="diagonals").strip()
    assert run(["delannoy", "weight", "--n", "3", "--m", "4", "--a", "2", "--b=-1"]) == 0
    assert out(capsys) == render_scalar(weight(3, 4, 2, -1))
