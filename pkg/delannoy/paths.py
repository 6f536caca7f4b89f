"""Delannoy lattice paths and their classes under the swap HV <-> VH.

Steps are H = (1, 0), V = (0, 1), D = (1, 1). Words are stored as bytes over
b"DHV". The k diagonal steps of a word cut it into k + 1 blocks of H and V
steps; swapping HV to VH only reorders inside a block, so each class has one
word with all V's before all H's in every block.
"""

from __future__ import annotations

import concurrent.futures
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Iterator

from series.errors import BudgetError
from series.settings import get_settings

logger = logging.getLogger("delannoy.paths")

H, V, D = ord("H"), ord("V"), ord("D")
STEPS = b"DHV"


@dataclass(frozen=True, order=True)
class PathWord:
    steps: bytes

    def __post_init__(self):
        bad = set(self.steps) - set(STEPS)
        if bad:
            raise ValueError(f"path words use only H, V and D, got {bytes(sorted(bad))!r}")

    @classmethod
    def parse(cls, text: str) -> "PathWord":
        return cls(text.strip().upper().encode("ascii"))

    @property
    def n(self) -> int:
        return self.steps.count(H) + self.steps.count(D)

    @property
    def m(self) -> int:
        return self.steps.count(V) + self.steps.count(D)

    @property
    def diagonals(self) -> int:
        return self.steps.count(D)

    def __str__(self) -> str:
        return self.steps.decode("ascii")


@dataclass(frozen=True, order=True)
class ClassRepresentative:
    """V^{v0} H^{h0} D V^{v1} H^{h1} D ... D V^{vk} H^{hk}."""

    k: int
    v: tuple[int, ...]
    h: tuple[int, ...]

    def __post_init__(self):
        if len(self.v) != self.k + 1 or len(self.h) != self.k + 1:
            raise ValueError(f"a class with {self.k} diagonals has {self.k + 1} blocks")

    @property
    def n(self) -> int:
        return sum(self.h) + self.k

    @property
    def m(self) -> int:
        return sum(self.v) + self.k

    def word(self) -> PathWord:
        blocks = [b"V" * v + b"H" * h for v, h in zip(self.v, self.h)]
        return PathWord(b"D".join(blocks))

    def size(self) -> int:
        """Number of words in the class."""
        return prod(comb(v + h, v) for v, h in zip(self.v, self.h))

    def __str__(self) -> str:
        return str(self.word())


def _check_oracle(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"endpoint ({n}, {m}) is outside N x N")
    cap = get_settings().oracle_max
    if n > cap or m > cap:
        raise BudgetError(f"exhaustive enumeration is capped at n, m <= {cap}, asked for ({n}, {m})")


def _words(prefix: bytes, n: int, m: int) -> Iterator[bytes]:
    """All words ending at (n, m) from the current point, in byte order."""
    if n == 0 and m == 0:
        yield prefix
        return
    if n > 0 and m > 0:
        yield from _words(prefix + b"D", n - 1, m - 1)
    if n > 0:
        yield from _words(prefix + b"H", n - 1, m)
    if m > 0:
        yield from _words(prefix + b"V", n, m - 1)


_FIRST_STEP = {D: (1, 1), H: (1, 0), V: (0, 1)}


def _partition(step: int, n: int, m: int) -> list[bytes]:
    return list(_words(bytes([step]), n, m))


@lru_cache(maxsize=128)
def _enumerate(n: int, m: int) -> tuple[PathWord, ...]:
    if n == 0 and m == 0:
        return (PathWord(b""),)
    partitions = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=3) as executor:
        future_to_step = {}
        for step, (dn, dm) in _FIRST_STEP.items():
            if dn <= n and dm <= m:
                future_to_step[executor.submit(_partition, step, n - dn, m - dm)] = step
        for future in concurrent.futures.as_completed(future_to_step):
            partitions[future_to_step[future]] = future.result()
    # partitions differ in their first byte, so concatenating in byte order keeps the sort
    words = [PathWord(w) for step in sorted(partitions) for w in partitions[step]]
    logger.debug(f"event=enumerate n={n} m={m} partitions={len(partitions)} paths={len(words)}")
    return tuple(words)


def enumerate_paths(n: int, m: int) -> list[PathWord]:
    _check_oracle(n, m)
    return list(_enumerate(n, m))


@lru_cache(maxsize=None)
def delannoy_count(n: int, m: int) -> int:
    if n == 0 or m == 0:
        return 1
    return delannoy_count(n - 1, m) + delannoy_count(n, m - 1) + delannoy_count(n - 1, m - 1)


def canonicalize(w: PathWord) -> ClassRepresentative:
    blocks = w.steps.split(b"D")
    return ClassRepresentative(
        k=len(blocks) - 1,
        v=tuple(b.count(V) for b in blocks),
        h=tuple(b.count(H) for b in blocks),
    )


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of `total` into `parts` non-negative parts, lexicographic."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    return [(first,) + rest for first in range(total + 1) for rest in compositions(total - first, parts - 1)]


def class_count(n: int, m: int, k: int) -> int:
    return comb(n, k) * comb(m, k)


@lru_cache(maxsize=128)
def _census(n: int, m: int) -> tuple[tuple[ClassRepresentative, int], ...]:
    sizes = Counter(canonicalize(w) for w in _enumerate(n, m))
    return tuple(sorted(sizes.items()))


def class_sizes(n: int, m: int) -> dict[ClassRepresentative, int]:
    """Exhaustive census: each class representative with the number of words in it."""
    _check_oracle(n, m)
    return dict(_census(n, m))


def equivalence_classes(n: int, m: int, mode: str = "closed") -> list[ClassRepresentative]:
    """Class representatives of D(n, m), sorted.

    "closed" builds them from compositions; "oracle" canonicalises every path.
    """
    if mode == "oracle":
        _check_oracle(n, m)
        return [rep for rep, _ in _census(n, m)]
    if mode != "closed":
        raise ValueError(f"unknown mode {mode!r}")
    reps = []
    for k in range(min(n, m) + 1):
        for v in compositions(m - k, k + 1):
            for h in compositions(n - k, k + 1):
                reps.append(ClassRepresentative(k, v, h))
    return sorted(reps)
