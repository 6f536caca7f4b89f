"""Exact matrix oracles on numpy object arrays of Fractions.

No float dtype is ever created here; every array holds Python Fractions or ints
so products and comparisons stay exact.
"""

from fractions import Fraction
from typing import Sequence

import numpy as np


def lower_triangular(rows: Sequence[Sequence[Fraction]], n: int | None = None) -> np.ndarray:
    """Square n x n array from ragged rows, zero above the diagonal."""
    n = len(rows) if n is None else n
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        for j, value in enumerate(rows[i][: n]):
            out[i, j] = value
    return out


def square(rows: Sequence[Sequence[Fraction]]) -> np.ndarray:
    n = len(rows)
    out = np.full((n, n), Fraction(0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = value
    return out


def identity(n: int) -> np.ndarray:
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(a, b)


def flip_odd_columns(a: np.ndarray) -> np.ndarray:
    """a @ diag(1, -1, 1, -1, ...)."""
    out = a.copy()
    out[:, 1::2] = -out[:, 1::2]
    return out


def apply_to_vector(a: np.ndarray, values: Sequence[Fraction]) -> list[Fraction]:
    n = a.shape[0]
    column = np.array(list(values[:n]) + [Fraction(0)] * (n - len(values)), dtype=object)
    return [Fraction(v) for v in np.dot(a, column)]


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.all(a == b))


def first_difference(a: np.ndarray, b: np.ndarray) -> tuple[int, int] | None:
    for i, j in zip(*np.nonzero(a != b)):
        return int(i), int(j)
    return None
