"""Command-line entry point: `python -m cli <command> ...`.

Exit codes: 0 success, 1 domain error (non-invertible series, failed
fixtures, ...), 2 usage error. Errors always name the offending flag.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from typing import Callable, Optional

from pydantic import ValidationError

from delannoy import paths, weights
from fixtures import registry
from riordan import diagonals, export, matrix, palindromic
from riordan.validators import PalindromicParams
from series.errors import BudgetError, ConstructionError, DegenerateError, ParseError, RiordanError
from series.parser import parse_series
from series.power_series import PowerSeries, to_rational
from series.settings import get_settings

logger = logging.getLogger("cli")

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class FlagError(Exception):
    """A domain error raised while handling the value of one flag."""

    def __init__(self, flag: str, cause: Exception):
        super().__init__(f"{flag}: {cause}")
        self.flag = flag
        self.cause = cause


# Input handling


class Inputs:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.flags: dict[str, str] = {}

    def has(self, name: str) -> bool:
        return getattr(self.args, f"expr_{name}", None) is not None or getattr(self.args, f"coeffs_{name}", None) is not None

    def series(self, name: str, order: int) -> PowerSeries:
        expr = getattr(self.args, f"expr_{name}", None)
        coeffs = getattr(self.args, f"coeffs_{name}", None)
        if expr is None and coeffs is None:
            raise UsageError(f"one of --expr-{name} or --coeffs-{name} is required")
        flag = f"--expr-{name}" if expr is not None else f"--coeffs-{name}"
        self.flags[name] = flag
        try:
            if expr is not None:
                return parse_series(expr, order)
            return PowerSeries.from_coeffs([c for c in coeffs.split(",") if c.strip()], order)
        except ParseError as err:
            raise UsageError(f"{flag}: {err}") from err
        except (ValueError, ZeroDivisionError) as err:
            if isinstance(err, RiordanError):
                raise FlagError(flag, err) from err
            raise UsageError(f"{flag}: {err}") from err
        except RiordanError as err:
            raise FlagError(flag, err) from err

    def flag_for(self, offender: Optional[str]) -> str:
        if offender and offender in self.flags:
            return self.flags[offender]
        return ", ".join(sorted(self.flags.values())) or "input"

    def matrix(self, order: int, first: str = "f", second: str = "g") -> matrix.RiordanMatrix:
        """T(first|second), or (d, h) when --expr-d/--expr-h are given."""
        try:
            if first == "f" and (self.has("d") or self.has("h")):
                d, h = self.series("d", order + 1), self.series("h", order + 1)
                return matrix.from_dh(d, h, order)
            return matrix.from_T(self.series(first, order), self.series(second, order), order)
        except ConstructionError as err:
            offender = {"f": first, "g": second}.get(err.offender, err.offender)
            raise FlagError(self.flag_for(offender), err) from err


def _rational(text: str):
    try:
        return to_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from err


def _add_series(parser: argparse.ArgumentParser, name: str, help_text: str) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(f"--expr-{name}", dest=f"expr_{name}", metavar="TEXT", help=f"{help_text} as a closed form")
    group.add_argument(f"--coeffs-{name}", dest=f"coeffs_{name}", metavar="C0,C1,...", help=f"{help_text} as coefficients")


def _add_matrix(parser: argparse.ArgumentParser) -> None:
    _add_series(parser, "f", "numerator series f of T(f|g)")
    _add_series(parser, "g", "denominator series g of T(f|g)")
    _add_series(parser, "d", "series d of (d, h)")
    _add_series(parser, "h", "series h of (d, h)")


def _add_rows(parser: argparse.ArgumentParser, dest: str = "rows") -> None:
    parser.add_argument("--rows", "--order", dest=dest, type=int, default=None, help="truncation / prefix size")


# Output


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _emit_report(report, fmt: str) -> None:
    data = report.model_dump(mode="json") if hasattr(report, "model_dump") else asdict(report)
    if fmt == "json":
        _emit(json.dumps(data, default=str))
        return
    for key, value in data.items():
        _emit(f"{key}: {value}")


def _at_least(value: int, flag: str, minimum: int) -> int:
    if value < minimum:
        raise UsageError(f"{flag} must be >= {minimum}")
    return value


def _rows_arg(args) -> int:
    rows = args.rows if args.rows is not None else get_settings().default_order
    return _at_least(rows, "--rows", 1)


# Commands


def cmd_show(args) -> int:
    D = Inputs(args).matrix(_rows_arg(args))
    _emit(export.render_matrix(D, args.format))
    return 0


def cmd_diag(args) -> int:
    inputs = Inputs(args)
    rows = _rows_arg(args)
    _at_least(args.cols, "--cols", 1)
    D = inputs.matrix(rows)
    if args.sprugnoli:
        grid = diagonals.sprugnoli_bgf(D, rows, args.cols)
    elif args.bivariate:
        grid = diagonals.bivariate_gf(D, rows, args.cols)
    else:
        grid = diagonals.diagonal_family(D, rows, args.cols).grid()
    _emit(export.render_table(list(grid.cells), args.format, name="diagonals"))
    return 0


def cmd_product(args) -> int:
    inputs = Inputs(args)
    rows = _rows_arg(args)
    D1 = inputs.matrix(rows)
    D2 = inputs.matrix(rows, "l", "m")
    _emit(export.render_matrix(matrix.product(D1, D2), args.format))
    return 0


def cmd_inverse(args) -> int:
    D = Inputs(args).matrix(_rows_arg(args))
    _emit(export.render_matrix(matrix.inverse(D), args.format))
    return 0


def cmd_aseq(args) -> int:
    D = Inputs(args).matrix(_rows_arg(args))
    _emit(export.render_series(matrix.a_sequence(D), args.format))
    return 0


def cmd_apply(args) -> int:
    inputs = Inputs(args)
    rows = _rows_arg(args)
    D = inputs.matrix(rows)
    gamma = inputs.series("gamma", rows)
    _emit(export.render_series(matrix.apply(D, gamma), args.format))
    return 0


def _params(args) -> PalindromicParams:
    try:
        return PalindromicParams(f0=args.f0, g0=args.g0, f1=args.f1)
    except ValidationError as err:
        fields = ", ".join(f"--{e['loc'][0]}" for e in err.errors())
        raise UsageError(f"{fields}: invalid palindromic parameters") from err


def cmd_palindromic(args) -> int:
    rows = _rows_arg(args)
    if args.action == "construct":
        _emit(export.render_matrix(palindromic.construct(_params(args), rows), args.format))
    elif args.action == "check":
        D = Inputs(args).matrix(rows)
        _emit_report(palindromic.palindromic_report(D, rows), args.format)
    else:
        verdict = palindromic.classify_involution(_params(args), rows)
        _emit(json.dumps({"classification": verdict.value}) if args.format == "json" else verdict.value)
    return 0


def cmd_gk_check(args) -> int:
    if args.k < 2:
        raise UsageError("--k must be >= 2")
    _at_least(args.cols, "--cols", 0)
    inputs = Inputs(args)
    order = args.cols + 2 * args.k - 2
    g = inputs.series("g", order)
    try:
        report = diagonals.gk_diagonal_check(g, args.k, args.cols)
    except RiordanError as err:
        raise FlagError(inputs.flag_for("g"), err) from err
    _emit_report(report, args.format)
    return 0 if report.ok else 1


def cmd_qcones(args) -> int:
    if args.m < 1 or args.q < 1:
        raise UsageError("--m and --q must be >= 1")
    _at_least(args.cols, "--cols", 1)
    rows = _rows_arg(args)
    F, F_bar = diagonals.qcone_matrices(args.m, args.q, rows)
    if args.check:
        report = diagonals.qcone_check(args.m, args.q, rows, args.cols)
        _emit_report(report, args.format)
        return 0 if report.ok else 1
    _emit(export.render_matrix(F_bar if args.bar else F, args.format))
    return 0


def _weights_ab(args, symbolic_ok: bool):
    if args.symbolic and symbolic_ok:
        return weights.A, weights.B
    if args.a is None or args.b is None:
        hint = " unless --symbolic is given" if symbolic_ok else ""
        raise UsageError(f"--a and --b are required{hint}")
    return args.a, args.b


def _enumerated(args, census: Callable):
    try:
        return census(args.n, args.m)
    except BudgetError as err:
        flag = "--n" if args.n > get_settings().oracle_max else "--m"
        raise FlagError(flag, err) from err


def cmd_delannoy(args) -> int:
    _at_least(args.n, "--n", 0)
    _at_least(args.m, "--m", 0)
    if args.action == "paths":
        words = _enumerated(args, paths.enumerate_paths)
        if args.list_words:
            _emit(export.render_table([[str(w)] for w in words], args.format, name="paths"))
        else:
            _emit(str(len(words)))
    elif args.action == "classes":
        sizes = _enumerated(args, paths.class_sizes)
        table = [[str(rep), str(rep.k), str(size)] for rep, size in sizes.items()]
        if args.list_words:
            words = paths.enumerate_paths(args.n, args.m)
            for line, rep in zip(table, sizes):
                line.append(" ".join(str(w) for w in words if paths.canonicalize(w) == rep))
        columns = ["representative", "k", "size"] + (["words"] if args.list_words else [])
        _emit(export.render_table(table, args.format, name="classes", columns=columns))
    elif args.action == "weight":
        a, b = _weights_ab(args, symbolic_ok=True)
        _emit(weights.render_scalar(weights.weight(args.n, args.m, a, b)))
    elif args.action == "gf":
        a, b = _weights_ab(args, symbolic_ok=False)
        _emit(export.render_series(weights.wn_generating_function(args.n, a, b, _rows_arg(args)), args.format))
    elif args.action == "factorize":
        a, b = _weights_ab(args, symbolic_ok=False)
        report = weights.pascal_factorization_check(a, b, _rows_arg(args))
        if args.format == "text" and report.ok:
            _emit(export.render_table(weights.weighted_delannoy_matrix(a, b, report.size).rendered()))
        else:
            _emit_report(report, args.format)
        return 0 if report.ok else 1
    else:
        rows = _rows_arg(args)
        a, b = _weights_ab(args, symbolic_ok=True)
        try:
            if args.symbolic:
                table = [[weights.render_scalar(c) for c in r] for r in weights.q_matrix(a, b, rows)]
                _emit(export.render_table(table, args.format, name="q-matrix"))
            else:
                _emit(export.render_matrix(weights.q_matrix_riordan(a, b, rows), args.format))
        except DegenerateError as err:
            raise FlagError("--a", err) from err
    return 0


def cmd_fixtures(args) -> int:
    if args.name:
        if args.name not in registry.FIXTURES:
            raise UsageError(f"--name: unknown fixture {args.name!r}")
        _emit(export.render_table(registry.regenerate(args.name), args.format, name=args.name))
        return 0
    if args.verify:
        results = registry.fixtures_verify()
        failed = [r for r in results if r.status == "mismatch"]
        if args.format == "json":
            _emit(json.dumps([asdict(r) for r in results]))
        else:
            for r in results:
                _emit(f"{r.name}: {r.status}")
        return 1 if failed else 0
    rows = [[f.name, f.description] for f in registry.FIXTURES.values()]
    _emit(export.render_table(rows, args.format, name="fixtures", columns=["name", "description"]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")

    parser = argparse.ArgumentParser(prog="riordan", description="Riordan matrices, their diagonals and Delannoy paths")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("show", cmd_show, "print the prefix of T(f|g) or (d, h)")
    _add_matrix(p)
    _add_rows(p)

    p = command("diag", cmd_diag, "diagonal generating functions")
    _add_matrix(p)
    _add_rows(p)
    p.add_argument("--cols", type=int, default=8)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--bivariate", action="store_true", help="grid of f(z)/(g(z)-x)")
    mode.add_argument("--sprugnoli", action="store_true", help="grid of f(z)/(g(z)-xz)")

    p = command("product", cmd_product, "T(f|g) T(l|m)")
    _add_matrix(p)
    _add_series(p, "l", "numerator series of the right factor")
    _add_series(p, "m", "denominator series of the right factor")
    _add_rows(p)

    for name, handler, help_text in (
        ("inverse", cmd_inverse, "inverse matrix"),
        ("aseq", cmd_aseq, "A-sequence"),
    ):
        p = command(name, handler, help_text)
        _add_matrix(p)
        _add_rows(p)

    p = command("apply", cmd_apply, "(f/g) gamma(x/g)")
    _add_matrix(p)
    _add_series(p, "gamma", "series the matrix acts on")
    _add_rows(p)

    p = command("palindromic", cmd_palindromic, "palindromic matrices")
    p.add_argument("action", choices=["construct", "check", "classify"])
    p.add_argument("--f0", type=_rational)
    p.add_argument("--g0", type=_rational)
    p.add_argument("--f1", type=_rational, default=0)
    _add_matrix(p)
    _add_rows(p)

    p = command("gk-check", cmd_gk_check, "first diagonals of T(g|g) in G_k")
    _add_series(p, "g", "series g in 1 + x^(k-1) Q[[x]]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cols", type=int, default=10, help="last column j checked")

    p = command("qcones", cmd_qcones, "q-cone matrices F and F-bar")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--bar", action="store_true", help="print F-bar instead of F")
    p.add_argument("--check", action="store_true", help="verify the closed forms")
    p.add_argument("--cols", type=int, default=8)
    _add_rows(p)

    p = command("delannoy", cmd_delannoy, "Delannoy paths and weights")
    p.add_argument("action", choices=["paths", "classes", "weight", "gf", "factorize", "qmatrix"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--list-words", action="store_true")
    _add_rows(p)

    p = command("fixtures", cmd_fixtures, "golden tables")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true")
    group.add_argument("--name")
    group.add_argument("--verify", action="store_true")
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(level=settings.log_level, format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except UsageError as err:
        sys.stderr.write(f"riordan {args.command}: error: {err}\n")
        return 2
    except FlagError as err:
        logger.info(f"event=domain_error command={args.command} flag={err.flag}")
        sys.stderr.write(f"riordan {args.command}: {err}\n")
        return 1
    except RiordanError as err:
        sys.stderr.write(f"riordan {args.command}: {err}\n")
        return 1
    except (ValueError, TypeError) as err:
        logger.debug(f"event=invalid_input command={args.command} error={type(err).__name__}")
        sys.stderr.write(f"riordan {args.command}: error: {err}\n")
        return 2


def main() -> None:
    sys.exit(run())
