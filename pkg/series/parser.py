"""Recursive-descent parser for closed-form series such as "(1-sqrt(1-4*x))/(2*x)".

Grammar:

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | base ('^' integer)?
    base   := rational | 'x' | 'z' | '(' expr ')' | 'sqrt' '(' expr ')'

`x` and `z` name the same variable. `p/q` with two integer literals is read as
one rational literal; every other `/` is series division.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from series.errors import (
    ExprSyntaxError,
    LexicalError,
    NonInvertibleError,
    RiordanError,
    TruncationError,
    VanishingDenominatorError,
)
from series.power_series import PowerSeries, format_rational, invert, power, shift_divide, sqrt

logger = logging.getLogger("series.parser")

VARIABLES = ("x", "z")
OPERATORS = "+-*/^"


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, VAR, SQRT, OP, LPAREN, RPAREN, END
    text: str
    position: int


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Rat:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str = "x"


@dataclass(frozen=True)
class Neg:
    operand: "SeriesExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Pow:
    base: "SeriesExpr"
    exponent: int


@dataclass(frozen=True)
class Sqrt:
    argument: "SeriesExpr"


SeriesExpr = Union[Num, Rat, Var, Neg, BinOp, Pow, Sqrt]


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("NUM", text[start:i], start))
            continue
        if c.isalpha():
            start = i
            while i < len(text) and text[i].isalnum():
                i += 1
            word = text[start:i]
            if word in VARIABLES:
                tokens.append(Token("VAR", word, start))
            elif word == "sqrt":
                tokens.append(Token("SQRT", word, start))
            else:
                raise LexicalError(f"unknown identifier {word!r}", start)
            continue
        if c in OPERATORS:
            tokens.append(Token("OP", c, i))
        elif c == "(":
            tokens.append(Token("LPAREN", c, i))
        elif c == ")":
            tokens.append(Token("RPAREN", c, i))
        else:
            raise LexicalError(f"unexpected character {c!r}", i)
        i += 1
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "END":
            self.pos += 1
        return token

    def _fail(self, expected: str):
        token = self.current
        found = "end of input" if token.kind == "END" else repr(token.text)
        raise ExprSyntaxError(f"expected {expected}, found {found}", token.position)

    def _at_op(self, *ops: str) -> bool:
        return self.current.kind == "OP" and self.current.text in ops

    def parse(self) -> SeriesExpr:
        node = self.expr()
        if self.current.kind != "END":
            self._fail("an operator or end of input")
        return node

    def expr(self) -> SeriesExpr:
        node = self.term()
        while self._at_op("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> SeriesExpr:
        node = self.factor()
        while self._at_op("*", "/"):
            op = self._advance().text
            right = self.factor()
            if op == "/" and isinstance(node, Num) and isinstance(right, Num) and right.value != 0:
                node = Rat(Fraction(node.value, right.value))
            else:
                node = BinOp(op, node, right)
        return node

    def factor(self) -> SeriesExpr:
        if self._at_op("-"):
            self._advance()
            return Neg(self.factor())
        node = self.base()
        if self._at_op("^"):
            self._advance()
            if self.current.kind != "NUM":
                self._fail("a non-negative integer exponent")
            node = Pow(node, int(self._advance().text))
        return node

    def base(self) -> SeriesExpr:
        token = self.current
        if token.kind == "NUM":
            self._advance()
            return Num(int(token.text))
        if token.kind == "VAR":
            self._advance()
            return Var(token.text)
        if token.kind == "LPAREN":
            self._advance()
            node = self.expr()
            if self.current.kind != "RPAREN":
                self._fail("')'")
            self._advance()
            return node
        if token.kind == "SQRT":
            self._advance()
            if self.current.kind != "LPAREN":
                self._fail("'(' after sqrt")
            self._advance()
            node = self.expr()
            if self.current.kind != "RPAREN":
                self._fail("')'")
            self._advance()
            return Sqrt(node)
        self._fail("a number, x, z, '(' or sqrt")


def parse(text: str) -> SeriesExpr:
    return _Parser(tokenize(text)).parse()


def render(node: SeriesExpr) -> str:
    """Fully parenthesised text that parses back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Rat):
        return f"({node.value.numerator}/{node.value.denominator})"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"-({render(node.operand)})"
    if isinstance(node, BinOp):
        return f"({render(node.left)} {node.op} {render(node.right)})"
    if isinstance(node, Pow):
        return f"({render(node.base)})^{node.exponent}"
    if isinstance(node, Sqrt):
        return f"sqrt({render(node.argument)})"
    raise TypeError(f"not a series expression: {node!r}")


def _divide(numerator: PowerSeries, denominator: PowerSeries) -> PowerSeries:
    if denominator.coeffs[0] != 0:
        return numerator * invert(denominator)
    k = denominator.valuation()
    if k is None:
        raise VanishingDenominatorError("division by a series that vanishes to its truncation order")
    if numerator.valuation() is not None and numerator.valuation() < k:
        raise NonInvertibleError(f"numerator is not divisible by x^{k} (zero constant term after the division rule)")
    return shift_divide(numerator, k) * invert(shift_divide(denominator, k))


def _eval(node: SeriesExpr, order: int) -> PowerSeries:
    try:
        if isinstance(node, Num):
            return PowerSeries.constant(node.value, order)
        if isinstance(node, Rat):
            return PowerSeries.constant(node.value, order)
        if isinstance(node, Var):
            return PowerSeries.variable(order)
        if isinstance(node, Neg):
            return -_eval(node.operand, order)
        if isinstance(node, Pow):
            return power(_eval(node.base, order), node.exponent)
        if isinstance(node, Sqrt):
            return sqrt(_eval(node.argument, order))
        left, right = _eval(node.left, order), _eval(node.right, order)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return _divide(left, right)
    except RiordanError as err:
        if err.subexpression is None:
            err.subexpression = render(node)
        raise


def evaluate(expr: SeriesExpr, truncation: int) -> PowerSeries:
    """Expand `expr` to exactly `truncation` coefficients.

    Division by x^k consumes k coefficients, so evaluation is repeated at a
    larger working order until enough of them survive. A divisor that is zero
    to the working order is retried as well; x^3 only shows up past order 3.
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    working = truncation
    for _ in range(4):
        try:
            result = _eval(expr, working)
        except VanishingDenominatorError as err:
            vanished = err
            working += truncation
            continue
        vanished = None
        if result.order >= truncation:
            logger.debug(f"event=evaluate expr={render(expr)} order={truncation} working_order={working}")
            return result.truncate(truncation)
        working += truncation - result.order
    if vanished is not None:
        raise vanished
    raise TruncationError(f"could not reach order {truncation} for {render(expr)}")


def parse_series(text: str, truncation: int) -> PowerSeries:
    return evaluate(parse(text), truncation)


def format_series(s: PowerSeries) -> str:
    return ", ".join(format_rational(c) for c in s.coeffs)
