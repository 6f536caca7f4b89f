"""Diagonal generating functions of Riordan matrices.

Delta_n(x) = sum_k d_{n+k,k} x^k is produced by the recurrence

    Delta_0 = f_0/(g_0 - x)
    Delta_n = (f_n - sum_{l=1..n} g_l Delta_{n-l}) / (g_0 - x)

and checked against the matrix itself and against the bivariate expansion
f(z)/(g(z) - x) = sum_k x^k f(z)/g(z)^(k+1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from riordan.matrix import RiordanMatrix, from_T
from series.errors import BudgetError, MembershipError
from series.power_series import PowerSeries, format_rational, invert, to_rational

logger = logging.getLogger("riordan.diagonals")


@dataclass(frozen=True)
class DiagonalFamily:
    matrix: RiordanMatrix
    diagonals: tuple[PowerSeries, ...]

    @property
    def rows(self) -> int:
        return len(self.diagonals)

    @property
    def cols(self) -> int:
        return self.diagonals[0].order

    def __getitem__(self, n: int) -> PowerSeries:
        return self.diagonals[n]

    def grid(self) -> "BivariateGrid":
        return BivariateGrid(tuple(tuple(s.coeffs) for s in self.diagonals))


@dataclass(frozen=True)
class BivariateGrid:
    """c_{n,k} = [z^n x^k] of a bivariate series, n < rows, k < cols."""

    cells: tuple[tuple[Fraction, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        n, k = nk
        return self.cells[n][k]

    def row(self, n: int) -> PowerSeries:
        return PowerSeries(self.cells[n])

    def mismatches(self, other: "BivariateGrid") -> list[tuple[int, int]]:
        rows, cols = min(self.rows, other.rows), min(self.cols, other.cols)
        return [(n, k) for n in range(rows) for k in range(cols) if self.cells[n][k] != other.cells[n][k]]


def _check_rows(D: RiordanMatrix, rows: int) -> None:
    if rows > D.order:
        raise BudgetError(f"{rows} diagonals requested, f and g are known to order {D.order}")


def _one_over_g0_minus_x(g0: Fraction, cols: int) -> PowerSeries:
    return PowerSeries(tuple((1 / g0) ** (k + 1) for k in range(cols)))


def diagonal_family(D: RiordanMatrix, rows: int, cols: int) -> DiagonalFamily:
    _check_rows(D, rows)
    f, g = D.f.coeffs, D.g.coeffs
    kernel = _one_over_g0_minus_x(g[0], cols)
    diagonals: list[PowerSeries] = []
    for n in range(rows):
        acc = PowerSeries.constant(f[n], cols)
        for l in range(1, n + 1):
            acc = acc - g[l] * diagonals[n - l]
        diagonals.append(acc * kernel)
    logger.debug(f"event=diagonal_family rows={rows} cols={cols}")
    return DiagonalFamily(D, tuple(diagonals))


def diagonal_mismatches(family: DiagonalFamily) -> list[tuple[int, int]]:
    """Cells (n, k) inside the matrix prefix where coeff(Delta_n, k) != d_{n+k,k}."""
    D = family.matrix
    bad = []
    for n, delta in enumerate(family.diagonals):
        for k in range(min(delta.order, D.order - n)):
            if delta[k] != D.entry(n + k, k):
                bad.append((n, k))
    return bad


def bivariate_gf(D: RiordanMatrix, rows: int, cols: int) -> BivariateGrid:
    """Expand f(z)/(g(z) - x) as a geometric series in x over Q[[z]]."""
    _check_rows(D, rows)
    inv_g = invert(D.g)
    column = D.f * inv_g
    columns = []
    for _ in range(cols):
        columns.append(column)
        column = column * inv_g
    return BivariateGrid(tuple(tuple(columns[k][n] for k in range(cols)) for n in range(rows)))


def sprugnoli_bgf(D: RiordanMatrix, rows: int, cols: int) -> BivariateGrid:
    """Expand f(z)/(g(z) - xz): [z^n x^k] = [z^(n-k)] f/g^(k+1)."""
    _check_rows(D, rows)
    inv_g = invert(D.g)
    column = D.f * inv_g
    cells = [[Fraction(0)] * cols for _ in range(rows)]
    for k in range(cols):
        for n in range(k, rows):
            cells[n][k] = column[n - k]
        column = column * inv_g
    return BivariateGrid(tuple(tuple(r) for r in cells))


def sprugnoli_identity_mismatches(D: RiordanMatrix, rows: int, cols: int) -> list[tuple[int, int]]:
    """Cells where f(z)/(g(z) - xz) differs from sum_n z^n Delta_n(xz)."""
    family = diagonal_family(D, rows, cols)
    lhs = sprugnoli_bgf(D, rows, cols)
    bad = []
    for n in range(rows):
        for k in range(cols):
            rhs = family[n - k][k] if k <= n else Fraction(0)
            if lhs[n, k] != rhs:
                bad.append((n, k))
    return bad


def grid_from_columns(column: Callable[[int], PowerSeries], rows: int, cols: int) -> BivariateGrid:
    """Grid whose k-th column is the z-series column(k)."""
    series = [column(k) for k in range(cols)]
    return BivariateGrid(tuple(tuple(series[k][n] for k in range(cols)) for n in range(rows)))


def catalan_diagonal_coefficient(n: int, k: int) -> Fraction:
    return Fraction(k + 1, 2 * n + k + 1) * comb(2 * n + k + 1, n)


def toeplitz_diagonals(f: PowerSeries, rows: int, cols: int) -> list[PowerSeries]:
    """Delta_n = f_n/(1 - x) for T(f|1)."""
    return [PowerSeries.from_coeffs([f[n]] * cols) for n in range(rows)]


@dataclass
class GkReport:
    k: int
    rows_checked: int
    mismatches: list[tuple[int, int, Fraction, Fraction]] = field(default_factory=list)
    corollary_mismatches: list[tuple[int, int, Fraction, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.corollary_mismatches


def gk_membership(g: PowerSeries, k: int) -> None:
    if k < 2:
        raise ValueError("k must be >= 2")
    if g[0] != 1:
        raise MembershipError(f"g_0 is {format_rational(g[0])}, elements of G_{k} need g_0 = 1")
    for m in range(1, k - 1):
        if g[m] != 0:
            raise MembershipError(f"g_{m} is {format_rational(g[m])}, elements of G_{k} need g in 1 + x^{k - 1}Q[[x]]")


def gk_diagonal_check(g: PowerSeries, k: int, last_column: int) -> GkReport:
    """Check the first 2k-2 diagonals of T(g|g) for j = 0..last_column.

    d_{j+m,j} is 1 for m = 0, 0 for 1 <= m <= k-2 and -j g_m for
    k-1 <= m <= 2k-3; the last band also equals j h_{m+1} with h = x/g.
    """
    gk_membership(g, k)
    order = last_column + 2 * k - 2
    if g.order < order:
        raise BudgetError(f"g must be known to order {order} to check columns up to {last_column}")
    D = from_T(g, g, order)
    h = D.h()
    report = GkReport(k=k, rows_checked=order)
    for j in range(last_column + 1):
        for m in range(0, 2 * k - 2):
            actual = D.entry(j + m, j)
            if m == 0:
                expected = Fraction(1)
            elif m <= k - 2:
                expected = Fraction(0)
            else:
                expected = -j * g[m]
                corollary = j * h[m + 1]
                if actual != corollary:
                    report.corollary_mismatches.append((j, m, corollary, actual))
            if actual != expected:
                report.mismatches.append((j, m, expected, actual))
    if not report.ok:
        logger.warning(f"event=gk_check_failed k={k} mismatches={len(report.mismatches)}")
    return report


@dataclass
class RelationReport:
    rows: int
    cols: int
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def tfgg_relation_check(f: PowerSeries, g: PowerSeries, rows: int, cols: int) -> RelationReport:
    """Diagonals of T(fg|g) against f_n + x Delta_n for those of T(f|g)."""
    D = from_T(f, g)
    D_tilde = from_T(f * g, g)
    family = diagonal_family(D, rows, cols)
    family_tilde = diagonal_family(D_tilde, rows, cols)
    report = RelationReport(rows=rows, cols=cols)
    for n in range(rows):
        expected = (family[n].mul_x(1) + D.f[n]).truncate(cols)
        for k in range(cols):
            if family_tilde[n][k] != expected[k]:
                report.mismatches.append((n, k))
    return report


def qcone_series(m: int, q: int, order: int) -> tuple[PowerSeries, PowerSeries]:
    """(f, g) of F_{m,q}: f = (m + (q-m)x)/(q(1-x)), g = (1-x)/q."""
    if m < 1 or q < 1:
        raise ValueError("q-cones need m >= 1 and q >= 1")
    f = PowerSeries.from_coeffs([Fraction(m, q)] + [1] * (order - 1), order)
    g = PowerSeries.from_coeffs([Fraction(1, q), Fraction(-1, q)], order)
    return f, g


def qcone_matrices(m: int, q: int, order: int) -> tuple[RiordanMatrix, RiordanMatrix]:
    """F_{m,q} = T(f|g) and its extension F-bar_{m,q} = T(fg|g)."""
    f, g = qcone_series(m, q, order)
    return from_T(f, g), from_T(f * g, g)


def qcone_diagonal(m: int, q: int, n: int, cols: int) -> PowerSeries:
    """Delta_0/(1-qx)^n + q sum_{k=1..n} (1-qx)^(-k) with Delta_0 = m/(1-qx)."""
    kernel = PowerSeries.geometric(q, cols)
    delta0 = m * kernel
    acc = delta0 * kernel**n
    for k in range(1, n + 1):
        acc = acc + q * kernel**k
    return acc


def qcone_bar_diagonal(m: int, q: int, n: int, cols: int) -> PowerSeries:
    """m/(q(1-qx)) for n = 0, else 1 + x Delta_0/(1-qx)^n + sum_{k=1..n} qx/(1-qx)^k."""
    kernel = PowerSeries.geometric(q, cols)
    if n == 0:
        return Fraction(m, q) * kernel
    acc = (m * kernel * kernel**n).mul_x(1).truncate(cols)
    for k in range(1, n + 1):
        acc = acc + (q * kernel**k).mul_x(1).truncate(cols)
    return acc + 1


@dataclass
class QConeReport:
    m: int
    q: int
    diagonal_mismatches: list[tuple[int, int]] = field(default_factory=list)
    bar_diagonal_mismatches: list[tuple[int, int]] = field(default_factory=list)
    bivariate_mismatches: list[tuple[int, int]] = field(default_factory=list)
    relation: RelationReport | None = None

    @property
    def ok(self) -> bool:
        return (
            not self.diagonal_mismatches
            and not self.bar_diagonal_mismatches
            and not self.bivariate_mismatches
            and (self.relation is None or self.relation.ok)
        )


def qcone_check(m: int, q: int, rows: int, cols: int) -> QConeReport:
    """Closed forms of both q-cone diagonal families and their bivariate forms."""
    F, F_bar = qcone_matrices(m, q, rows)
    family = diagonal_family(F, rows, cols)
    family_bar = diagonal_family(F_bar, rows, cols)
    report = QConeReport(m=m, q=q)
    for n in range(rows):
        expected, expected_bar = qcone_diagonal(m, q, n, cols), qcone_bar_diagonal(m, q, n, cols)
        report.diagonal_mismatches += [(n, k) for k in range(cols) if family[n][k] != expected[k]]
        report.bar_diagonal_mismatches += [(n, k) for k in range(cols) if family_bar[n][k] != expected_bar[k]]

    # (m + (q-m)z)/((1-z)(1-z-qx)) and (m + (q-m)z)/(q(1-z-qx)), column by column
    numerator = PowerSeries.from_coeffs([m, q - m], rows)
    inv_one_minus_z = PowerSeries.geometric(1, rows)

    def column(k: int) -> PowerSeries:
        return q**k * numerator * inv_one_minus_z ** (k + 2)

    def column_bar(k: int) -> PowerSeries:
        return Fraction(q) ** (k - 1) * numerator * inv_one_minus_z ** (k + 1)

    report.bivariate_mismatches += bivariate_gf(F, rows, cols).mismatches(grid_from_columns(column, rows, cols))
    report.bivariate_mismatches += bivariate_gf(F_bar, rows, cols).mismatches(grid_from_columns(column_bar, rows, cols))
    f, g = qcone_series(m, q, rows)
    report.relation = tfgg_relation_check(f, g, rows, cols)
    return report


def format_grid(grid: BivariateGrid | Sequence[Sequence[Fraction]]) -> list[list[str]]:
    cells = grid.cells if isinstance(grid, BivariateGrid) else grid
    return [[format_rational(to_rational(c)) for c in row] for row in cells]
