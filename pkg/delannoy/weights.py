"""Weighted Delannoy numbers w_{a,b}(n, m).

H and V steps weigh a, D steps weigh b, and each class of D(n, m) is counted
once with the weight of any of its words. Three evaluators are kept side by side:

    closed      sum_k binom(n,k) binom(m,k) a^(n+m-2k) b^k
    recursive   w = a w(n-1,m) + a w(n,m-1) + (b - a^2) w(n-1,m-1)
    classes     sum over exhaustively found class representatives

Weights may be exact rationals or sympy expressions in the symbols a, b.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

import numpy as np
import sympy

from delannoy.paths import class_sizes
from riordan import oracles
from riordan.matrix import RiordanMatrix, from_dh
from riordan.palindromic import construct, is_palindromic, kim_to_params
from riordan.validators import KimParams
from series.errors import DegenerateError, EvaluatorMismatchError
from series.power_series import PowerSeries, format_rational, to_rational
from series.settings import get_settings

logger = logging.getLogger("delannoy.weights")

A, B = sympy.symbols("a b")

Scalar = Union[Fraction, sympy.Expr]


def _scalar(value) -> Scalar:
    if isinstance(value, sympy.Basic):
        return value
    return to_rational(value)


def _is_symbolic(*values) -> bool:
    return any(isinstance(v, sympy.Basic) for v in values)


def _tidy(value: Scalar) -> Scalar:
    return sympy.expand(value) if isinstance(value, sympy.Basic) else value


def _same(x: Scalar, y: Scalar) -> bool:
    if _is_symbolic(x, y):
        return sympy.expand(x - y) == 0
    return x == y


def weight_closed(n: int, m: int, a, b) -> Scalar:
    a, b = _scalar(a), _scalar(b)
    total = sum((comb(n, k) * comb(m, k) * a ** (n + m - 2 * k) * b**k for k in range(min(n, m) + 1)), 0)
    return _tidy(total)


def weight_recursive(n: int, m: int, a, b) -> Scalar:
    a, b = _scalar(a), _scalar(b)
    correction = _tidy(b - a**2)
    # row-by-row table of w(i, j) for j <= m
    prev = [_tidy(a**j) for j in range(m + 1)]
    for i in range(1, n + 1):
        row = [_tidy(a**i)]
        for j in range(1, m + 1):
            row.append(_tidy(a * prev[j] + a * row[j - 1] + correction * prev[j - 1]))
        prev = row
    return prev[m]


def weight_by_classes(n: int, m: int, a, b) -> Scalar:
    """One term a^(n+m-2k) b^k per class, read off the exhaustive census."""
    a, b = _scalar(a), _scalar(b)
    total = sum((a ** (n + m - 2 * rep.k) * b**rep.k for rep in class_sizes(n, m)), 0)
    return _tidy(total)


def weight(n: int, m: int, a, b, *, exhaustive: bool | None = None) -> Scalar:
    """w_{a,b}(n, m) after checking every available evaluator agrees.

    The class evaluator runs when both n and m are within the oracle cap,
    unless `exhaustive` says otherwise.
    """
    if n < 0 or m < 0:
        raise ValueError(f"endpoint ({n}, {m}) is outside N x N")
    closed = weight_closed(n, m, a, b)
    recursive = weight_recursive(n, m, a, b)
    if not _same(closed, recursive):
        raise EvaluatorMismatchError(f"closed sum {closed} and recursion {recursive} disagree at ({n}, {m})")
    cap = get_settings().oracle_max
    if exhaustive is None:
        exhaustive = n <= cap and m <= cap
    if exhaustive:
        by_classes = weight_by_classes(n, m, a, b)
        if not _same(closed, by_classes):
            raise EvaluatorMismatchError(f"closed sum {closed} and class sum {by_classes} disagree at ({n}, {m})")
    return closed


def render_scalar(value: Scalar) -> str:
    if isinstance(value, sympy.Basic):
        return render_polynomial(value)
    return format_rational(value)


def render_polynomial(expr) -> str:
    """Sorted monomials in a and b, e.g. "a^4 + 4*a^2*b + b^2"."""
    poly = sympy.Poly(sympy.expand(expr), A, B)
    parts: list[str] = []
    for (ea, eb), coeff in poly.terms():
        factors = []
        for sym, e in (("a", ea), ("b", eb)):
            if e == 1:
                factors.append(sym)
            elif e > 1:
                factors.append(f"{sym}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts) or "0"


def wn_generating_function(n: int, a, b, order: int) -> PowerSeries:
    """W_n(z) = (a + (b - a^2) z)^n / (1 - a z)^(n+1), rational weights only."""
    a, b = to_rational(a), to_rational(b)
    numerator = PowerSeries.from_coeffs([a, b - a * a], order) ** n
    return numerator * PowerSeries.geometric(a, order) ** (n + 1)


@dataclass(frozen=True)
class WeightedDelannoyMatrix:
    a: Scalar
    b: Scalar
    grid: tuple[tuple[Scalar, ...], ...]

    @property
    def size(self) -> int:
        return len(self.grid)

    def as_array(self) -> np.ndarray:
        return oracles.square(self.grid)

    def rendered(self) -> list[list[str]]:
        return [[render_scalar(c) for c in row] for row in self.grid]


def weighted_delannoy_matrix(a, b, size: int) -> WeightedDelannoyMatrix:
    a, b = _scalar(a), _scalar(b)
    grid = tuple(tuple(weight_closed(n, m, a, b) for m in range(size)) for n in range(size))
    return WeightedDelannoyMatrix(a, b, grid)


@dataclass(frozen=True)
class FactorizationReport:
    a: Fraction
    b: Fraction
    size: int
    first_difference: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return self.first_difference is None


def pascal_factorization_check(a, b, size: int) -> FactorizationReport:
    """W_{a,b} = P_a D_b P_a^T with P_a = [binom(n,k) a^(n-k)] and D_b = diag(b^k)."""
    a, b = to_rational(a), to_rational(b)
    p = oracles.lower_triangular([[comb(n, k) * a ** (n - k) for k in range(n + 1)] for n in range(size)])
    d = oracles.identity(size)
    for k in range(size):
        d[k, k] = b**k
    product = oracles.matmul(oracles.matmul(p, d), p.T)
    w = weighted_delannoy_matrix(a, b, size).as_array()
    diff = oracles.first_difference(product, w)
    if diff is not None:
        logger.warning(f"event=factorization_mismatch a={a} b={b} cell={diff}")
    return FactorizationReport(a, b, size, diff)


def q_matrix(a, b, size: int) -> list[list[Scalar]]:
    """Rows q(n, k) = w(n - k, k), 0 <= k <= n."""
    a, b = _scalar(a), _scalar(b)
    if not isinstance(a, sympy.Basic) and a == 0:
        raise DegenerateError("a = 0 gives h = b z^2, which is not a Riordan array")
    return [[weight_closed(n - k, k, a, b) for k in range(n + 1)] for n in range(size)]


def q_matrix_riordan(a, b, size: int) -> RiordanMatrix:
    """(1/(1 - a z), a z + b z^2/(1 - a z))."""
    a, b = to_rational(a), to_rational(b)
    if a == 0:
        raise DegenerateError("a = 0 gives h = b z^2, which is not a Riordan array")
    order = size + 1
    d = PowerSeries.geometric(a, order)
    h = PowerSeries.from_coeffs([0, a], order) + (b * PowerSeries.geometric(a, order)).mul_x(2).truncate(order)
    return from_dh(d, h, size)


@dataclass(frozen=True)
class QMatrixReport:
    a: Fraction
    b: Fraction
    size: int
    matches_riordan: bool
    matches_palindromic: bool
    rows_palindromic: bool

    @property
    def ok(self) -> bool:
        return self.matches_riordan and self.matches_palindromic and self.rows_palindromic


def q_matrix_consistency(a, b, size: int) -> QMatrixReport:
    """Weight table, Riordan array and palindromic construction via (d0, h1, h2) = (1, a, b)."""
    a, b = to_rational(a), to_rational(b)
    table = q_matrix(a, b, size)
    riordan = q_matrix_riordan(a, b, size)
    palindromic = construct(kim_to_params(KimParams(d0=1, h1=a, h2=b)), size)
    return QMatrixReport(
        a=a,
        b=b,
        size=size,
        matches_riordan=riordan.prefix() == table,
        matches_palindromic=palindromic.prefix() == table,
        rows_palindromic=bool(is_palindromic(riordan)),
    )
