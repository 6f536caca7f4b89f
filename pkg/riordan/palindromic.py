"""Palindromic Riordan matrices.

A palindromic matrix T(f|g) is fixed by three numbers (f0, g0, f1):

    f = f0^2/(f0 - f1 x)        g = f0 (g0 - x)/(f0 - f1 x)

so f_n = f1^n/f0^(n-1) and g_n = g1 (f1/f0)^(n-1) with g1 = (f1 g0 - f0)/f0.
Every verdict here is about a finite prefix only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from riordan import oracles
from riordan.diagonals import bivariate_gf, diagonal_family
from riordan.matrix import RiordanMatrix, RowPolynomial, column_gf, from_dh, from_T
from riordan.validators import KimParams, PalindromicParams, PalindromicReport
from series.errors import BudgetError
from series.power_series import PowerSeries

logger = logging.getLogger("riordan.palindromic")


def construct(p: PalindromicParams, order: int) -> RiordanMatrix:
    geometric = PowerSeries.geometric(p.ratio, order)
    f = p.f0 * geometric
    g = PowerSeries.from_coeffs([p.g0, -1], order) * geometric
    return from_T(f, g, order)


@dataclass(frozen=True)
class PalindromeVerdict:
    palindromic: bool
    rows_checked: int
    counterexample: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.palindromic


def _rows(D: RiordanMatrix, n: int | None) -> int:
    n = D.order if n is None else n
    if n > D.order:
        raise BudgetError(f"{n} rows requested, prefix budget is {D.order}")
    return n


def is_palindromic(D: RiordanMatrix, n: int | None = None) -> PalindromeVerdict:
    """d_{r,k} = d_{r,r-k} for every row r < n; reports the smallest failing (r, k)."""
    n = _rows(D, n)
    for r in range(n):
        row = D.row(r)
        for k in range(r // 2 + 1):
            if row[k] != row[r - k]:
                return PalindromeVerdict(False, n, (r, k))
    return PalindromeVerdict(True, n)


def criterion_columns_equal_diagonals(D: RiordanMatrix, n: int | None = None) -> bool:
    """C_j(x) = x^j Delta_j(x) on the first n coefficients, for every j < n."""
    n = _rows(D, n)
    family = diagonal_family(D, n, n)
    for j in range(n):
        column = column_gf(D, j)
        shifted = family[j].mul_x(j)
        if any(column[i] != shifted[i] for i in range(n)):
            return False
    return True


def criterion_bivariate_swap(D: RiordanMatrix, n: int | None = None) -> bool:
    """Delta(z, xz) = Delta(xz, z) up to total degree n."""
    n = _rows(D, n)
    c = bivariate_gf(D, n, n)
    for total in range(n):
        for b in range(total + 1):
            # [z^total x^b] of Delta(z, xz) is c_{total-b, b}; of Delta(xz, z) it is c_{b, total-b}
            if c[total - b, b] != c[b, total - b]:
                return False
    return True


def closed_form_entry(p: PalindromicParams, n: int, k: int) -> Fraction:
    if k > n:
        logger.warning(f"event=closed_form_above_diagonal n={n} k={k} value=0")
        return Fraction(0)
    r = -p.f1 * p.g0 / p.f0
    total = sum((comb(k, j) * comb(n - j, k) * r**j for j in range(min(k, n - k) + 1)), Fraction(0))
    return p.f0 / p.g0 ** (n + 1) * total


def scaled_pascal_entry(f0, g0, n: int, k: int) -> Fraction:
    """The f1 = 0 case: (f0/g0^(n+1)) binom(n, k)."""
    return Fraction(f0) / Fraction(g0) ** (n + 1) * comb(n, k)


def _poly_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_scale(c: Fraction, a: list[Fraction]) -> list[Fraction]:
    return [c * v for v in a]


def _times_t(a: list[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + a


def _first_two(p: PalindromicParams) -> list[list[Fraction]]:
    p0 = [p.f0 / p.g0]
    c = p.f0 / p.g0**2
    return [p0, [c, c]]


def row_poly_recurrence(p: PalindromicParams, count: int) -> list[RowPolynomial]:
    """p_0 .. p_{count-1} from g0 p_n = (1 + t) p_{n-1} - (f1/f0) t p_{n-2}."""
    if count < 1:
        raise ValueError("count must be >= 1")
    polys = _first_two(p)
    for n in range(2, count):
        one_plus_t = _poly_add(polys[n - 1], _times_t(polys[n - 1]))
        nxt = _poly_add(one_plus_t, _poly_scale(-p.ratio, _times_t(polys[n - 2])))
        polys.append(_poly_scale(1 / p.g0, nxt))
    return [RowPolynomial(tuple(q)) for q in polys[:count]]


def row_poly_long_recurrence(p: PalindromicParams, count: int) -> list[RowPolynomial]:
    """p_n = [(t - g1) p_{n-1} + r^(n-1) p_0 - g1 r sum_{k=0..n-3} r^k p_{n-2-k}] / g0, r = f1/f0.

    Holds for n >= 2; p_1 comes from the general row recurrence.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    r, g1 = p.ratio, p.g1
    polys = _first_two(p)
    for n in range(2, count):
        acc = _poly_add(_times_t(polys[n - 1]), _poly_scale(-g1, polys[n - 1]))
        acc = _poly_add(acc, _poly_scale(r ** (n - 1), polys[0]))
        for k in range(n - 2):
            acc = _poly_add(acc, _poly_scale(-g1 * r ** (k + 1), polys[n - 2 - k]))
        polys.append(_poly_scale(1 / p.g0, acc))
    return [RowPolynomial(tuple(q)) for q in polys[:count]]


def kim_roundtrip(p: PalindromicParams) -> KimParams:
    """(f0, g0, f1) -> (d0, h1, h2) with d = d0/(1 - h1 z), h = h1 z + h2 z^2/(1 - h1 z).

    Read off the series d and h of construct(p); they equal f0/g0, 1/g0 and -g1/g0^2.
    """
    D = construct(p, 2)
    d, h = D.d(), D.h()
    return KimParams(d0=d[0], h1=h[1], h2=h[2])


def kim_to_params(k: KimParams) -> PalindromicParams:
    f0 = k.d0 / k.h1
    g1 = -k.h2 / k.h1**2
    return PalindromicParams(f0=f0, g0=1 / k.h1, f1=f0 * (g1 + 1) * k.h1)


def kim_series(k: KimParams, order: int) -> tuple[PowerSeries, PowerSeries]:
    """d and h to `order` coefficients."""
    d = k.d0 * PowerSeries.geometric(k.h1, order)
    h = [Fraction(0), k.h1] + [k.h2 * k.h1 ** (j - 2) for j in range(2, order)]
    return d, PowerSeries(tuple(h[:order]))


def kim_matrix(k: KimParams, order: int) -> RiordanMatrix:
    d, h = kim_series(k, order + 1)
    return from_dh(d, h, order)


def recover_params(D: RiordanMatrix, n: int | None = None) -> PalindromicParams | None:
    """(f0, g0, f1) of D when its first n rows are palindromic, else None."""
    if not is_palindromic(D, n):
        return None
    if D.order < 2:
        raise BudgetError("recovering f1 needs f to order 2")
    return PalindromicParams(f0=D.f[0], g0=D.g[0], f1=D.f[1])


def regenerates(D: RiordanMatrix, n: int | None = None) -> bool:
    """True when the recovered parameters rebuild f and g exactly to D's order."""
    p = recover_params(D, n)
    if p is None:
        return False
    rebuilt = construct(p, D.order)
    return rebuilt.f == D.f and rebuilt.g == D.g


class InvolutionClass(str, Enum):
    INVOLUTION = "involution"
    PSEUDO_INVOLUTION = "pseudo-involution"
    NEITHER = "neither"


def classify_matrix(D: RiordanMatrix, n: int | None = None) -> InvolutionClass:
    """D^2 = I, else (DM)^2 = I with M = diag(1, -1, 1, ...), on the n-prefix."""
    n = _rows(D, n)
    a = D.as_array(n)
    eye = oracles.identity(n)
    if oracles.equal(oracles.matmul(a, a), eye):
        return InvolutionClass.INVOLUTION
    am = oracles.flip_odd_columns(a)
    if oracles.equal(oracles.matmul(am, am), eye):
        return InvolutionClass.PSEUDO_INVOLUTION
    return InvolutionClass.NEITHER


def classify_involution(p: PalindromicParams, order: int) -> InvolutionClass:
    verdict = classify_matrix(construct(p, order), order)
    logger.debug(f"event=classify params={p} verdict={verdict.value}")
    return verdict


def palindromic_report(D: RiordanMatrix, n: int | None = None) -> PalindromicReport:
    verdict = is_palindromic(D, n)
    return PalindromicReport(
        palindromic=verdict.palindromic,
        counterexample=verdict.counterexample,
        params=recover_params(D, n) if verdict else None,
        rows_checked=verdict.rows_checked,
    )
