"""Golden tables of the matrices printed in the literature, with their generators.

Each regenerated fixture is rebuilt from closed-form text through the parser
(or from parameters) and compared cell by cell on rendered rational strings.
Display-only fixtures carry printed data with no known generator for part of it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from delannoy.weights import A, B, q_matrix, render_scalar
from riordan.matrix import RiordanMatrix, from_dh, from_T
from riordan.palindromic import construct
from riordan.validators import PalindromicParams
from series.parser import parse_series
from series.power_series import format_rational

logger = logging.getLogger("fixtures.registry")

Table = tuple[tuple[str, ...], ...]


def _table(text: str) -> Table:
    """Rows separated by ';', cells by ','."""
    return tuple(tuple(c.strip() for c in row.split(",")) for row in text.split(";"))


def _rendered(D: RiordanMatrix, rows: int) -> list[list[str]]:
    return [[format_rational(c) for c in r] for r in D.prefix(rows)]


def _riordan_T(f_text: str, g_text: str, rows: int) -> Callable[[], list[list[str]]]:
    def generate() -> list[list[str]]:
        return _rendered(from_T(parse_series(f_text, rows), parse_series(g_text, rows)), rows)

    return generate


def _riordan_dh(d_text: str, h_text: str, rows: int) -> Callable[[], list[list[str]]]:
    def generate() -> list[list[str]]:
        D = from_dh(parse_series(d_text, rows + 1), parse_series(h_text, rows + 1), rows)
        return _rendered(D, rows)

    return generate


def _palindromic(f0, g0, f1, rows: int) -> Callable[[], list[list[str]]]:
    def generate() -> list[list[str]]:
        return _rendered(construct(PalindromicParams(f0=f0, g0=g0, f1=f1), rows), rows)

    return generate


def _symbolic_q(rows: int) -> Callable[[], list[list[str]]]:
    def generate() -> list[list[str]]:
        return [[render_scalar(c) for c in r] for r in q_matrix(A, B, rows)]

    return generate


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    expected: Table
    generator: Optional[Callable[[], list[list[str]]]] = None
    display: Optional[Table] = None

    @property
    def display_only(self) -> bool:
        return self.generator is None

    def rows(self) -> Table:
        return self.display if self.display is not None else self.expected


CATALAN_G = "(1+sqrt(1-4*x))/2"

FIXTURES: dict[str, Fixture] = {}


def register(fixture: Fixture) -> Fixture:
    FIXTURES[fixture.name] = fixture
    return fixture


register(Fixture(
    name="pascal",
    description="Pascal's triangle T(1|1-x)",
    expected=_table("1; 1,1; 1,2,1; 1,3,3,1; 1,4,6,4,1; 1,5,10,10,5,1"),
    generator=_riordan_T("1", "1-x", 6),
))
register(Fixture(
    name="catalan",
    description="Catalan array (C, xC) = T(1|(1+sqrt(1-4x))/2)",
    expected=_table("1; 1,1; 2,2,1; 5,5,3,1; 14,14,9,4,1"),
    generator=_riordan_T("1", CATALAN_G, 5),
))
register(Fixture(
    name="motivating-D",
    description="T(1/(1-x)^2 | 2x-1)",
    expected=_table("-1; -4,1; -11,6,-1; -26,23,-8,1; -57,72,-39,10,-1; -120,201,-150,59,-12,1"),
    generator=_riordan_T("1/(1-x)^2", "2*x-1", 6),
))
register(Fixture(
    name="motivating-D-tilde",
    description="T((2x-1)/(1-x)^2 | 2x-1), the previous triangle with its f column prepended",
    expected=_table(
        "1; 2,-1; 3,-4,1; 4,-11,6,-1; 5,-26,23,-8,1; 6,-57,72,-39,10,-1; 7,-120,201,-150,59,-12,1"
    ),
    generator=_riordan_T("(2*x-1)/(1-x)^2", "2*x-1", 7),
))
register(Fixture(
    name="delannoy",
    description="Delannoy triangle, palindromic parameters (f0, g0, f1) = (1, 1, -1)",
    expected=_table("1; 1,1; 1,3,1; 1,5,5,1; 1,7,13,7,1; 1,9,25,25,9,1; 1,11,41,63,41,11,1"),
    generator=_palindromic(1, 1, -1, 7),
))
register(Fixture(
    name="q-matrix-symbolic",
    description="Palindromic (a,b)-Delannoy matrix with symbolic weights",
    expected=(
        ("1",),
        ("a", "a"),
        ("a^2", "a^2 + b", "a^2"),
        ("a^3", "a^3 + 2*a*b", "a^3 + 2*a*b", "a^3"),
        ("a^4", "a^4 + 3*a^2*b", "a^4 + 4*a^2*b + b^2", "a^4 + 3*a^2*b", "a^4"),
        ("a^5", "a^5 + 4*a^3*b", "a^5 + 6*a^3*b + 3*a*b^2", "a^5 + 6*a^3*b + 3*a*b^2", "a^5 + 4*a^3*b", "a^5"),
    ),
    generator=_symbolic_q(6),
))

# Bi-infinite displays. Only the lower-right block is a Riordan matrix we can rebuild.
register(Fixture(
    name="bi-infinite-pascal",
    description="Bi-infinite Pascal display; lower-right block regenerated, upper-left block printed",
    expected=_table("1; 1,1; 1,2,1; 1,3,3,1; 1,4,6,4,1; 1,5,10,10,5,1"),
    generator=_riordan_T("1", "1-x", 6),
    display=_table(
        "1,0,0,0,0,0,0,0,0,0,0,0;"
        "-5,1,0,0,0,0,0,0,0,0,0,0;"
        "10,-4,1,0,0,0,0,0,0,0,0,0;"
        "-10,6,-3,1,0,0,0,0,0,0,0,0;"
        "5,-4,3,-2,1,0,0,0,0,0,0,0;"
        "-1,1,-1,1,-1,1,0,0,0,0,0,0;"
        "0,0,0,0,0,0,1,0,0,0,0,0;"
        "0,0,0,0,0,0,1,1,0,0,0,0;"
        "0,0,0,0,0,0,1,2,1,0,0,0;"
        "0,0,0,0,0,0,1,3,3,1,0,0;"
        "0,0,0,0,0,0,1,4,6,4,1,0;"
        "0,0,0,0,0,0,1,5,10,10,5,1"
    ),
))
register(Fixture(
    name="bi-infinite-banpas",
    description="Bi-infinite display around T((2x-1)/(1-x)^2 | 2x-1); lower-right block regenerated",
    expected=_table("1; 2,-1; 3,-4,1; 4,-11,6,-1; 5,-26,23,-8,1"),
    generator=_riordan_T("(2*x-1)/(1-x)^2", "2*x-1", 5),
    display=_table(
        "-1,0,0,0,0,0,0,0,0,0;"
        "8,1,0,0,0,0,0,0,0,0;"
        "-23,-6,-1,0,0,0,0,0,0,0;"
        "26,11,4,1,0,0,0,0,0,0;"
        "-5,-4,-3,-2,-1,0,0,0,0,0;"
        "-4,-3,-2,-1,0,1,0,0,0,0;"
        "-3,-2,-1,0,1,2,-1,0,0,0;"
        "-2,-1,0,1,2,3,-4,1,0,0;"
        "-1,0,1,2,3,4,-11,6,-1,0;"
        "0,1,2,3,4,5,-26,23,-8,1"
    ),
))
register(Fixture(
    name="bi-infinite-catalan",
    description="Bi-infinite display related to the Catalan triangle; lower-right block (1, xC) regenerated",
    expected=_table("1; 0,1; 0,1,1; 0,2,2,1; 0,5,5,3,1"),
    generator=_riordan_dh("1", "(1-sqrt(1-4*x))/2", 5),
    display=_table(
        "1;"
        "-5,1;"
        "5,-4,1;"
        "0,2,-3,1;"
        "0,0,0,-2,1;"
        "-1,-1,-1,-1,-1,1;"
        "-5,-4,-3,-2,-1,0,1;"
        "-20,-14,-9,-5,-2,0,1,1;"
        "-75,-48,-28,-14,-5,0,2,2,1;"
        "-275,-165,-90,-42,-14,0,5,5,3,1"
    ),
))
register(Fixture(
    name="bi-infinite-self-dual",
    description="Bi-infinite self-dual involution, printed data only",
    expected=_table(
        "-1;"
        "7,1;"
        "-35/2,-5,-1;"
        "35/2,15/2,3,1;"
        "-35/8,-5/2,-3/2,-1,-1;"
        "-7/8,-5/8,-1/2,-1/2,-1,1;"
        "-7/16,-3/8,-3/8,-1/2,-3/2,3,-1;"
        "-5/16,-5/16,-3/8,-5/8,-5/2,15/2,-5,1;"
        "-35/128,-5/16,-7/16,-7/8,-35/8,35/2,-35/2,7,-1"
    ),
))


@dataclass
class FixtureResult:
    name: str
    status: str  # "ok", "mismatch" or "display-only"
    differences: list[tuple[int, int, str, str]] = field(default_factory=list)


def regenerate(name: str) -> list[list[str]]:
    fixture = FIXTURES[name]
    if fixture.generator is None:
        return [list(r) for r in fixture.expected]
    return fixture.generator()


def _differences(expected: Table, actual: list[list[str]]) -> list[tuple[int, int, str, str]]:
    diffs = []
    for i in range(max(len(expected), len(actual))):
        want = expected[i] if i < len(expected) else ()
        got = actual[i] if i < len(actual) else []
        for j in range(max(len(want), len(got))):
            a = want[j] if j < len(want) else ""
            b = got[j] if j < len(got) else ""
            if a != b:
                diffs.append((i, j, a, b))
    return diffs


def verify(name: str) -> FixtureResult:
    fixture = FIXTURES[name]
    if fixture.display_only:
        return FixtureResult(name, "display-only")
    diffs = _differences(fixture.expected, fixture.generator())
    if diffs:
        logger.warning(f"event=fixture_mismatch name={name} cells={len(diffs)}")
        return FixtureResult(name, "mismatch", diffs)
    logger.debug(f"event=fixture_ok name={name}")
    return FixtureResult(name, "ok")


def fixtures_verify() -> list[FixtureResult]:
    return [verify(name) for name in FIXTURES]
