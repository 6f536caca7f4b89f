"""Riordan matrices T(f|g), equivalently (d, h) with d = f/g and h = x/g.

The N x N prefix is filled once at construction by the column recurrences

    d_{0,0} = f_0/g_0
    d_{i,0} = (f_i - sum_{l=1..i} g_l d_{i-l,0}) / g_0
    d_{i,j} = (d_{i-1,j-1} - sum_{l=1..i-j} g_l d_{i-l,j}) / g_0

and is never extended afterwards. `direct_prefix` is the independent path
[x^i] d h^j; with RIORDAN_CROSSCHECK set every construction compares the two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from riordan import oracles
from series.errors import BudgetError, ConstructionError, CrossCheckError
from series.power_series import (
    PowerSeries,
    comp_inverse,
    compose,
    format_rational,
    invert,
    shift_divide,
    x_over,
)
from series.settings import get_settings

logger = logging.getLogger("riordan.matrix")


@dataclass(frozen=True)
class RowPolynomial:
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            body = format_rational(c)
            if k == 1:
                body += "*t"
            elif k > 1:
                body += f"*t^{k}"
            terms.append(body)
        return " + ".join(terms) or "0"


class RiordanMatrix:
    def __init__(self, f: PowerSeries, g: PowerSeries, order: int | None = None):
        if f.coeffs[0] == 0:
            raise ConstructionError("f must have a non-zero constant term", offender="f")
        if g.coeffs[0] == 0:
            raise ConstructionError("g must have a non-zero constant term", offender="g")
        available = min(f.order, g.order)
        if order is None:
            order = available
        if order < 1:
            raise ValueError("order must be >= 1")
        if order > available:
            raise BudgetError(f"prefix of {order} rows needs f and g to order {order}, got {available}")
        self.order = order
        self.f = f.truncate(order)
        self.g = g.truncate(order)
        self._rows = self._recurrence_prefix()
        logger.debug(f"event=prefix_built order={order} f0={format_rational(self.f[0])} g0={format_rational(self.g[0])}")
        if get_settings().crosscheck:
            self._crosscheck()

    # Construction

    @classmethod
    def from_T(cls, f: PowerSeries, g: PowerSeries, order: int | None = None) -> "RiordanMatrix":
        return cls(f, g, order)

    @classmethod
    def from_dh(cls, d: PowerSeries, h: PowerSeries, order: int | None = None) -> "RiordanMatrix":
        """Convert (d, h) to T(f|g) with g = x/h and f = d*g.

        g is known to one coefficient fewer than h.
        """
        if d.coeffs[0] == 0:
            raise ConstructionError("d must have a non-zero constant term", offender="d")
        if h.coeffs[0] != 0:
            raise ConstructionError("h must have zero constant term", offender="h")
        if h.order < 2 or h.coeffs[1] == 0:
            raise ConstructionError("h must have a non-zero linear coefficient", offender="h")
        g = invert(shift_divide(h, 1))
        return cls(d * g, g, order)

    @classmethod
    def identity(cls, order: int | None = None) -> "RiordanMatrix":
        return cls(PowerSeries.one(order), PowerSeries.one(order))

    def _recurrence_prefix(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.order
        f, g = self.f.coeffs, self.g.coeffs
        g0 = g[0]
        cols: list[list[Fraction]] = []
        rows: list[list[Fraction]] = [[] for _ in range(n)]
        # column j holds d_{i,j} for i >= j, indexed by i - j
        for j in range(n):
            col: list[Fraction] = []
            for i in range(j, n):
                head = f[i] if j == 0 else cols[j - 1][i - j]
                acc = head - sum((g[l] * col[i - l - j] for l in range(1, i - j + 1)), Fraction(0))
                col.append(acc / g0)
                rows[i].append(col[-1])
            cols.append(col)
        return tuple(tuple(r) for r in rows)

    def _crosscheck(self) -> None:
        direct = direct_prefix(self)
        for i, (a, b) in enumerate(zip(self._rows, direct)):
            if list(a) != b:
                j = next(k for k in range(i + 1) if a[k] != b[k])
                raise CrossCheckError(
                    f"recurrence gives {format_rational(a[j])} but [x^{i}] d h^{j} is {format_rational(b[j])} at ({i}, {j})"
                )

    # Derived series

    def d(self) -> PowerSeries:
        return self.f / self.g

    def h(self) -> PowerSeries:
        """x/g, known to order + 1."""
        return x_over(self.g)

    # Entries

    def entry(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            raise ValueError(f"negative index ({i}, {j})")
        if i >= self.order:
            raise BudgetError(f"row {i} requested from a prefix of {self.order} rows")
        if j > i:
            return Fraction(0)
        return self._rows[i][j]

    def prefix(self, n: int | None = None) -> list[list[Fraction]]:
        n = self.order if n is None else n
        if n > self.order:
            raise BudgetError(f"prefix of {n} rows requested, budget is {self.order}")
        return [list(r) for r in self._rows[:n]]

    def as_array(self, n: int | None = None) -> np.ndarray:
        return oracles.lower_triangular(self.prefix(n))

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n >= self.order:
            raise BudgetError(f"row {n} requested from a prefix of {self.order} rows")
        return self._rows[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RiordanMatrix):
            return NotImplemented
        n = min(self.order, other.order)
        return self._rows[:n] == other._rows[:n]

    __hash__ = None

    def __repr__(self) -> str:
        return f"RiordanMatrix(f={self.f!r}, g={self.g!r}, order={self.order})"

    def __matmul__(self, other: "RiordanMatrix") -> "RiordanMatrix":
        return product(self, other)

    def to_payload(self) -> dict:
        return {
            "kind": "riordan",
            "f": [format_rational(c) for c in self.f.coeffs],
            "g": [format_rational(c) for c in self.g.coeffs],
            "order": self.order,
            "prefix": [[format_rational(c) for c in r] for r in self._rows],
        }


def from_T(f: PowerSeries, g: PowerSeries, order: int | None = None) -> RiordanMatrix:
    return RiordanMatrix.from_T(f, g, order)


def from_dh(d: PowerSeries, h: PowerSeries, order: int | None = None) -> RiordanMatrix:
    return RiordanMatrix.from_dh(d, h, order)


def identity(order: int | None = None) -> RiordanMatrix:
    return RiordanMatrix.identity(order)


def entry(D: RiordanMatrix, i: int, j: int) -> Fraction:
    return D.entry(i, j)


def prefix(D: RiordanMatrix, n: int | None = None) -> list[list[Fraction]]:
    return D.prefix(n)


def direct_prefix(D: RiordanMatrix, n: int | None = None) -> list[list[Fraction]]:
    """Rows of [x^i] d h^j computed by plain series multiplication."""
    n = D.order if n is None else n
    if n > D.order:
        raise BudgetError(f"prefix of {n} rows requested, budget is {D.order}")
    d, h = D.d(), D.h()
    columns = []
    current = d
    for _ in range(n):
        columns.append(current)
        current = current * h
    return [[columns[j][i] for j in range(i + 1)] for i in range(n)]


def product(D1: RiordanMatrix, D2: RiordanMatrix) -> RiordanMatrix:
    """T(f|g) T(l|m) = T(f l(x/g) | g m(x/g))."""
    n = min(D1.order, D2.order)
    h = D1.h()
    f = D1.f.truncate(n) * compose(D2.f.truncate(n), h)
    g = D1.g.truncate(n) * compose(D2.g.truncate(n), h)
    return RiordanMatrix(f, g, n)


def _reverted_h(D: RiordanMatrix) -> PowerSeries:
    return comp_inverse(D.h())


def a_sequence(D: RiordanMatrix, n: int | None = None) -> PowerSeries:
    """A = (h/x) o hbar, so that (x/A) o (x/g) = x."""
    n = D.order if n is None else n
    if n > D.order:
        raise BudgetError(f"A-sequence to {n} terms requested, budget is {D.order}")
    return compose(invert(D.g), _reverted_h(D)).truncate(n)


def inverse(D: RiordanMatrix) -> RiordanMatrix:
    """T(1/f(hbar) | A) where hbar is the compositional inverse of x/g."""
    hbar = _reverted_h(D)
    a = compose(invert(D.g), hbar)
    f = invert(compose(D.f, hbar))
    return RiordanMatrix(f, a, D.order)


def apply(D: RiordanMatrix, gamma: PowerSeries) -> PowerSeries:
    """(f/g) * gamma(x/g)."""
    n = min(D.order, gamma.order)
    return (D.d().truncate(n) * compose(gamma.truncate(n), D.h())).truncate(n)


def row_polynomial(D: RiordanMatrix, n: int) -> RowPolynomial:
    return row_polynomials(D, n + 1)[n]


def row_polynomials(D: RiordanMatrix, count: int) -> list[RowPolynomial]:
    """p_0 .. p_{count-1} by the row recurrence

        p_n = ((t - g_1)/g_0) p_{n-1} - sum_{l=2..n} (g_l/g_0) p_{n-l} + f_n/g_0
    """
    if count > D.order:
        raise BudgetError(f"row polynomial {count - 1} requested, budget is {D.order} rows")
    f, g = D.f.coeffs, D.g.coeffs
    g0 = g[0]
    polys: list[list[Fraction]] = [[f[0] / g0]]
    for n in range(1, count):
        prev = polys[n - 1]
        p = [Fraction(0)] * (n + 1)
        for k, c in enumerate(prev):
            p[k + 1] += c / g0
            p[k] -= g[1] * c / g0
        for l in range(2, n + 1):
            for k, c in enumerate(polys[n - l]):
                p[k] -= g[l] * c / g0
        p[0] += f[n] / g0
        polys.append(p)
    return [RowPolynomial(tuple(p)) for p in polys]


def column_gf(D: RiordanMatrix, n: int) -> PowerSeries:
    """x^n f / g^(n+1)."""
    if n >= D.order:
        raise BudgetError(f"column {n} requested, budget is {D.order}")
    s = D.d()
    inv_g = invert(D.g)
    for _ in range(n):
        s = s * inv_g
    return s.mul_x(n)


def is_identity_prefix(D: RiordanMatrix) -> bool:
    return oracles.equal(D.as_array(), oracles.identity(D.order))
