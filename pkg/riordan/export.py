"""Text, CSV and JSON renderings of matrices, grids and series."""

from fractions import Fraction
from typing import Sequence, Union

import pandas as pd

from riordan.matrix import RiordanMatrix
from riordan.validators import MatrixPayload, SeriesPayload, TablePayload
from series.power_series import PowerSeries, format_rational

Cell = Union[Fraction, int, str]


def _cell(value: Cell) -> str:
    if isinstance(value, str):
        return value
    return format_rational(Fraction(value))


def table_frame(rows: Sequence[Sequence[Cell]], columns: Sequence[str] | None = None) -> pd.DataFrame:
    """Ragged rows padded with blank cells on the right."""
    width = max((len(r) for r in rows), default=0)
    data = [[_cell(c) for c in r] + [""] * (width - len(r)) for r in rows]
    return pd.DataFrame(data, columns=list(columns) if columns else None, dtype=object)


def render_text(rows: Sequence[Sequence[Cell]], columns: Sequence[str] | None = None) -> str:
    if not rows:
        return ""
    frame = table_frame(rows, columns)
    return frame.to_string(index=False, header=columns is not None)


def render_csv(rows: Sequence[Sequence[Cell]], columns: Sequence[str] | None = None) -> str:
    return table_frame(rows, columns).to_csv(index=False, header=columns is not None, lineterminator="\n")


def render_table(rows: Sequence[Sequence[Cell]], fmt: str = "text", *, name: str | None = None, columns: Sequence[str] | None = None) -> str:
    if fmt == "text":
        return render_text(rows, columns)
    if fmt == "csv":
        return render_csv(rows, columns).rstrip("\n")
    if fmt == "json":
        payload = TablePayload(name=name, columns=list(columns) if columns else None, rows=[[_cell(c) for c in r] for r in rows])
        return payload.model_dump_json()
    raise ValueError(f"unknown format {fmt!r}")


def matrix_payload(D: RiordanMatrix, rows: int | None = None) -> MatrixPayload:
    n = D.order if rows is None else rows
    return MatrixPayload(f=list(D.f.coeffs[:n]), g=list(D.g.coeffs[:n]), order=n, prefix=D.prefix(n))


def render_matrix(D: RiordanMatrix, fmt: str = "text", rows: int | None = None) -> str:
    if fmt == "json":
        return matrix_payload(D, rows).model_dump_json()
    return render_table(D.prefix(rows), fmt)


def render_series(s: PowerSeries, fmt: str = "text") -> str:
    if fmt == "json":
        return SeriesPayload(coeffs=list(s.coeffs), order=s.order).model_dump_json()
    if fmt == "csv":
        return ",".join(format_rational(c) for c in s.coeffs)
    return ", ".join(format_rational(c) for c in s.coeffs)
