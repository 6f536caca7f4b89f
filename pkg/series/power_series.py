"""Truncated univariate power series with exact rational coefficients.

A `PowerSeries` knows exactly `order` coefficients, [x^0] .. [x^(order-1)].
Binary operations keep the smaller order and never extrapolate, so two values
only compare equal on the coefficients both of them know.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

from series.errors import (
    CompositionDomainError,
    NonInvertibleError,
    SqrtDomainError,
    TruncationError,
)
from series.settings import get_settings


RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a reduced Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _default_order(order: int | None) -> int:
    return get_settings().default_order if order is None else order


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a power series needs at least one known coefficient")

    # Constructors

    @classmethod
    def from_coeffs(cls, values: Iterable[RationalLike], order: int | None = None) -> "PowerSeries":
        """Series with the given leading coefficients.

        When `order` is given the list is zero-padded or cut to that length, i.e. the
        values describe a polynomial known to be exact up to `order`.
        """
        coeffs = [to_rational(v) for v in values]
        if order is not None:
            if order < 1:
                raise ValueError("order must be >= 1")
            coeffs = (coeffs + [Fraction(0)] * order)[:order]
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: RationalLike, order: int | None = None) -> "PowerSeries":
        return cls.from_coeffs([c], _default_order(order))

    @classmethod
    def zero(cls, order: int | None = None) -> "PowerSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int | None = None) -> "PowerSeries":
        return cls.constant(1, order)

    @classmethod
    def variable(cls, order: int | None = None) -> "PowerSeries":
        return cls.from_coeffs([0, 1], _default_order(order))

    @classmethod
    def geometric(cls, ratio: RationalLike, order: int | None = None) -> "PowerSeries":
        """1/(1 - ratio*x)."""
        r = to_rational(ratio)
        return cls(tuple(r**i for i in range(_default_order(order))))

    # Accessors

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        if i < 0 or i >= self.order:
            raise TruncationError(f"coefficient {i} requested from a series known to order {self.order}")
        return self.coeffs[i]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeff(i)

    def valuation(self) -> int | None:
        """Index of the first non-zero known coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, n: int) -> "PowerSeries":
        if n > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {n}")
        return PowerSeries(self.coeffs[:n])

    def agrees_with(self, other: "PowerSeries") -> bool:
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"PowerSeries([{body}], order={self.order})"

    # Operators

    def __neg__(self) -> "PowerSeries":
        return scale(-1, self)

    def __add__(self, other):
        return add(self, _lift(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _lift(other, self.order))

    def __rsub__(self, other):
        return sub(_lift(other, self.order), self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, invert(other))
        return scale(Fraction(1) / to_rational(other), self)

    def __pow__(self, k: int) -> "PowerSeries":
        return power(self, k)

    def mul_x(self, k: int = 1) -> "PowerSeries":
        """Multiply by x^k. The result knows k more coefficients."""
        return PowerSeries((Fraction(0),) * k + self.coeffs)

    def shift_divide(self, k: int = 1) -> "PowerSeries":
        return shift_divide(self, k)

    def to_payload(self) -> dict:
        return {"kind": "series", "coeffs": [format_rational(c) for c in self.coeffs], "order": self.order}

    @classmethod
    def from_payload(cls, payload: dict) -> "PowerSeries":
        coeffs = payload["coeffs"]
        if payload.get("order", len(coeffs)) != len(coeffs):
            raise ValueError(f"payload order {payload['order']} does not match {len(coeffs)} coefficients")
        return cls.from_coeffs(coeffs)


def _lift(value, order: int) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    return PowerSeries.constant(value, order)


def coeff(s: PowerSeries, i: int) -> Fraction:
    return s.coeff(i)


def add(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    return PowerSeries(tuple(a + b for a, b in zip(s.coeffs, t.coeffs)))


def sub(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    return PowerSeries(tuple(a - b for a, b in zip(s.coeffs, t.coeffs)))


def scale(c: RationalLike, s: PowerSeries) -> PowerSeries:
    q = to_rational(c)
    return PowerSeries(tuple(q * a for a in s.coeffs))


def mul(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    """Cauchy product."""
    n = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    return PowerSeries(tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)))


def power(s: PowerSeries, k: int) -> PowerSeries:
    if k < 0:
        return power(invert(s), -k)
    result = PowerSeries.one(s.order)
    base = s
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def invert(s: PowerSeries) -> PowerSeries:
    a = s.coeffs
    if a[0] == 0:
        raise NonInvertibleError("series with zero constant term has no multiplicative inverse")
    inv0 = Fraction(1) / a[0]
    b = [inv0]
    for n in range(1, s.order):
        b.append(-inv0 * sum((a[j] * b[n - j] for j in range(1, n + 1)), Fraction(0)))
    return PowerSeries(tuple(b))


def shift_divide(s: PowerSeries, k: int = 1) -> PowerSeries:
    """Divide by x^k; the first k coefficients must vanish."""
    if k == 0:
        return s
    if k >= s.order:
        raise TruncationError(f"dividing by x^{k} leaves nothing of a series of order {s.order}")
    if any(c != 0 for c in s.coeffs[:k]):
        raise NonInvertibleError(f"series is not divisible by x^{k}")
    return PowerSeries(s.coeffs[k:])


def compose(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    """s(t(x)) by Horner's rule over truncated powers of t."""
    if t.coeffs[0] != 0:
        raise CompositionDomainError("inner series of a composition must have zero constant term")
    n = min(s.order, t.order)
    inner = t.truncate(n)
    result = PowerSeries.constant(s.coeffs[n - 1], n)
    for i in range(n - 2, -1, -1):
        result = mul(result, inner) + s.coeffs[i]
    return result


def comp_inverse(h: PowerSeries) -> PowerSeries:
    """Compositional inverse hbar with h(hbar(x)) = x.

    Coefficient recursion: with hbar known below degree n, the degree-n
    coefficient of h(hbar) is h_1*hbar_n plus terms already fixed.
    """
    if h.coeffs[0] != 0:
        raise CompositionDomainError("series to revert must have zero constant term")
    if h.order < 2 or h.coeffs[1] == 0:
        raise NonInvertibleError("series to revert must have a non-zero linear coefficient")
    n = h.order
    h1 = h.coeffs[1]
    hbar = [Fraction(0), Fraction(1) / h1] + [Fraction(0)] * (n - 2)
    for k in range(2, n):
        partial = compose(h, PowerSeries(tuple(hbar)))
        hbar[k] = -partial.coeffs[k] / h1
    return PowerSeries(tuple(hbar))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def sqrt(s: PowerSeries) -> PowerSeries:
    """Square root with a non-negative leading coefficient.

    s = x^(2m) u with u_0 a rational square gives x^m sqrt(u), known to
    order - m coefficients.
    """
    v = s.valuation()
    if v is None:
        raise SqrtDomainError("square root of a series that vanishes to its truncation order")
    if v % 2:
        raise SqrtDomainError(f"square root of a series with odd valuation {v}")
    u = shift_divide(s, v)
    u0 = u.coeffs[0]
    r0 = _rational_sqrt(u0)
    if r0 is None:
        raise SqrtDomainError(f"leading coefficient {format_rational(u0)} is not the square of a rational")
    r = [r0]
    for n in range(1, u.order):
        cross = sum((r[i] * r[n - i] for i in range(1, n)), Fraction(0))
        r.append((u.coeffs[n] - cross) / (2 * r0))
    return PowerSeries(tuple(r)).mul_x(v // 2)


def x_over(s: PowerSeries) -> PowerSeries:
    """x/s, which is known to one more coefficient than s."""
    return invert(s).mul_x(1)
