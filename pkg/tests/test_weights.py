from fractions import Fraction

import pytest
import sympy

from delannoy.weights import (
    A,
    B,
    pascal_factorization_check,
    q_matrix,
    q_matrix_consistency,
    q_matrix_riordan,
    render_polynomial,
    render_scalar,
    weight,
    weight_by_classes,
    weight_closed,
    weight_recursive,
    weighted_delannoy_matrix,
    wn_generating_function,
)
from series.errors import BudgetError, DegenerateError

DELANNOY_ROWS = [[1], [1, 1], [1, 3, 1], [1, 5, 5, 1], [1, 7, 13, 7, 1]]
WEIGHT_PAIRS = [(1, 2), (2, -3), (Fraction(1, 3), Fraction(5, 2)), (-1, 1), (Fraction(-2, 3), 4)]


@pytest.mark.parametrize(
    "n, m, a, b, expected",
    [
        (2, 2, 1, 2, 13),
        (3, 3, 1, 2, 63),
        (2, 2, 1, 1, 6),
        (3, 4, 1, 1, 35),
        (1, 1, 2, 5, 9),
        (2, 1, "1/2", -1, Fraction(1, 8) - 2 * Fraction(1, 2)),
        (0, 4, 3, 7, 81),
    ],
)
def test_weights(n, m, a, b, expected):
    assert weight(n, m, a, b) == expected


@pytest.mark.parametrize("n", range(9))
def test_evaluators_agree(n):
    for m in range(9):
        for a, b in WEIGHT_PAIRS:
            closed = weight_closed(n, m, a, b)
            assert weight_recursive(n, m, a, b) == closed
            assert weight_by_classes(n, m, a, b) == closed


def test_symbolic_weight():
    w = weight(2, 2, A, B)
    assert sympy.expand(w - (A**4 + 4 * A**2 * B + B**2)) == 0
    assert render_scalar(w) == "a^4 + 4*a^2*b + b^2"


def test_render_polynomial_signs():
    assert render_polynomial(B - A**2) == "-a^2 + b"
    assert render_polynomial(sympy.Integer(0)) == "0"
    assert render_scalar(Fraction(-3, 4)) == "-3/4"


def test_exhaustive_evaluator_respects_cap(override_settings):
    override_settings(oracle_max=2)
    assert weight(3, 3, 1, 2) == 63
    with pytest.raises(BudgetError):
        weight(3, 3, 1, 2, exhaustive=True)


def test_negative_endpoint():
    with pytest.raises(ValueError):
        weight(-1, 2, 1, 1)


def test_generating_function_rows():
    for n in range(4):
        s = wn_generating_function(n, 2, 3, 6)
        assert list(s.coeffs) == [weight_closed(n, m, 2, 3) for m in range(6)]
    assert list(wn_generating_function(1, 1, 2, 5).coeffs) == [1, 3, 5, 7, 9]


def test_weighted_matrix_is_symmetric():
    grid = weighted_delannoy_matrix(2, 3, 5).grid
    assert all(grid[n][m] == grid[m][n] for n in range(5) for m in range(5))


@pytest.mark.parametrize("a, b", [(1, 2), (2, 5), ("1/2", -3)])
def test_pascal_factorization(a, b):
    assert pascal_factorization_check(a, b, 10).ok


def test_q_matrix_is_the_delannoy_triangle():
    assert q_matrix(1, 2, 5) == DELANNOY_ROWS
    assert q_matrix_riordan(1, 2, 5).prefix() == DELANNOY_ROWS


def test_q_matrix_unit_weights_is_pascal(pascal):
    assert q_matrix_riordan(1, 1, 8) == pascal


@pytest.mark.parametrize("a, b", [(1, 2), (1, 1), (3, Fraction(-1, 2)), (-2, 7)])
def test_q_matrix_consistency(a, b):
    report = q_matrix_consistency(a, b, 7)
    assert report.ok, report


def test_q_matrix_degenerate():
    with pytest.raises(DegenerateError):
        q_matrix(0, 1, 4)
    with pytest.raises(DegenerateError):
        q_matrix_riordan(0, 1, 4)


def test_symbolic_q_matrix_rows_are_palindromic():
    rows = q_matrix(A, B, 6)
    for row in rows:
        assert [render_scalar(c) for c in row] == [render_scalar(c) for c in reversed(row)]
    assert render_scalar(rows[5][2]) == "a^5 + 6*a^3*b + 3*a*b^2"


def test_weight_at_two_three():
    assert weight(2, 2, 2, 3) == 73
    assert weight(5, 0, 2, 3) == 32
    assert weight(4, 2, "1/3", 2) == weight(2, 4, "1/3", 2)
