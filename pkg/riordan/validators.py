from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, field_validator

from series.power_series import format_rational, to_rational

# Exact rational field: accepts int, Fraction or "p/q", serialises as "p/q"
Rational = Annotated[
    Fraction,
    BeforeValidator(to_rational),
    PlainSerializer(format_rational, return_type=str),
]


class PalindromicParams(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    f0: Rational = Field(..., description="Constant term of f, non-zero")
    g0: Rational = Field(..., description="Constant term of g, non-zero")
    f1: Rational = Field(Fraction(0), description="Linear coefficient of f, free")

    @field_validator("f0", "g0")
    def non_zero(cls, v: Fraction, info):
        if v == 0:
            raise ValueError(f"{info.field_name} must be non-zero")
        return v

    @property
    def g1(self) -> Fraction:
        # forced by d_{1,0} = d_{1,1}
        return (self.f1 * self.g0 - self.f0) / self.f0

    @property
    def ratio(self) -> Fraction:
        return self.f1 / self.f0

    def __str__(self) -> str:
        return f"(f0={format_rational(self.f0)}, g0={format_rational(self.g0)}, f1={format_rational(self.f1)})"


class KimParams(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    d0: Rational = Field(..., description="d(z) = d0/(1 - h1 z)")
    h1: Rational = Field(..., description="Linear coefficient of h, non-zero")
    h2: Rational = Field(Fraction(0), description="h(z) = h1 z + h2 z^2/(1 - h1 z)")

    @field_validator("d0", "h1")
    def non_zero(cls, v: Fraction, info):
        if v == 0:
            raise ValueError(f"{info.field_name} must be non-zero")
        return v


class SeriesPayload(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: Literal["series"] = "series"
    coeffs: list[Rational] = Field(..., min_length=1)
    order: int = Field(..., ge=1)

    @field_validator("order")
    def order_matches(cls, v: int, info):
        coeffs = info.data.get("coeffs")
        if coeffs is not None and len(coeffs) != v:
            raise ValueError(f"order {v} does not match {len(coeffs)} coefficients")
        return v


class MatrixPayload(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: Literal["riordan"] = "riordan"
    f: list[Rational]
    g: list[Rational]
    order: int = Field(..., ge=1)
    prefix: list[list[Rational]]

    @field_validator("prefix")
    def lower_triangular(cls, v: list[list[Fraction]]):
        for i, row in enumerate(v):
            if len(row) != i + 1:
                raise ValueError(f"row {i} has {len(row)} entries, expected {i + 1}")
        return v


class TablePayload(BaseModel):
    """Any rendered table: grids, symbolic matrices, class listings."""

    kind: str = "table"
    name: Optional[str] = None
    columns: Optional[list[str]] = None
    rows: list[list[str]]


class PalindromicReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    palindromic: bool
    counterexample: Optional[tuple[int, int]] = None
    params: Optional[PalindromicParams] = None
    rows_checked: int = Field(..., ge=0)
