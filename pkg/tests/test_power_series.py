from fractions import Fraction

import pytest

from series.errors import CompositionDomainError, NonInvertibleError, SqrtDomainError, TruncationError
from series.parser import parse_series
from series.power_series import (
    PowerSeries,
    add,
    coeff,
    comp_inverse,
    compose,
    invert,
    mul,
    scale,
    shift_divide,
    sqrt,
    sub,
    to_rational,
    x_over,
)


def ints(s: PowerSeries) -> list:
    return [int(c) if c.denominator == 1 else c for c in s.coeffs]


def test_geometric_and_inverse():
    assert ints(PowerSeries.geometric(2, 5)) == [1, 2, 4, 8, 16]
    assert invert(PowerSeries.from_coeffs([1, -1], 6)) == PowerSeries.geometric(1, 6)


def test_binary_ops_keep_smaller_order():
    s = PowerSeries.geometric(1, 4) * PowerSeries.geometric(1, 7)
    assert s.order == 4
    assert ints(s) == [1, 2, 3, 4]


def test_equality_on_common_prefix():
    assert PowerSeries.geometric(1, 3) == PowerSeries.geometric(1, 6)
    assert PowerSeries.geometric(1, 3) != PowerSeries.geometric(2, 3)


def test_coefficient_past_order_is_truncation_error():
    s = PowerSeries.one(3)
    with pytest.raises(TruncationError):
        s[3]
    with pytest.raises(IndexError):
        s.coeff(5)
    with pytest.raises(TruncationError):
        s.truncate(4)


def test_sqrt_catalan_numerator():
    s = sqrt(PowerSeries.from_coeffs([1, -4], 5))
    assert ints(s) == [1, -2, -2, -4, -10]
    assert s * s == PowerSeries.from_coeffs([1, -4], 5)


@pytest.mark.parametrize("coeffs", [[0, 1], [2, 1], [-1, 3], [0, 0, 2], [0, 0, 0, 0]])
def test_sqrt_domain(coeffs):
    with pytest.raises(SqrtDomainError):
        sqrt(PowerSeries.from_coeffs(coeffs, 4))


def test_sqrt_of_rational_square():
    s = sqrt(PowerSeries.from_coeffs(["9/4", 3], 3))
    assert s[0] == Fraction(3, 2)
    assert s * s == PowerSeries.from_coeffs(["9/4", 3], 3)


def test_sqrt_with_even_valuation():
    s = PowerSeries.from_coeffs([0, 0, 1, 2, 1, 0], 6)
    r = sqrt(s)
    assert r == PowerSeries.from_coeffs([0, 1, 1, 0, 0])
    assert r * r == s.truncate(r.order)
    assert parse_series("sqrt(x^2)", 4) == PowerSeries.variable(4)


def test_invert_zero_constant():
    with pytest.raises(NonInvertibleError):
        invert(PowerSeries.variable(4))
    with pytest.raises(ZeroDivisionError):
        invert(PowerSeries.zero(4))


def test_compose_requires_zero_constant_inner():
    with pytest.raises(CompositionDomainError):
        compose(PowerSeries.geometric(1, 4), PowerSeries.one(4))


def test_compose_geometric_in_x_over_one_minus_x():
    # 1/(1 - x/(1-x)) = (1-x)/(1-2x)
    inner = x_over(PowerSeries.from_coeffs([1, -1], 6))
    assert ints(compose(PowerSeries.geometric(1, 6), inner)) == [1, 1, 2, 4, 8, 16]


def test_comp_inverse_gives_catalan():
    h = PowerSeries.from_coeffs([0, 1, -1], 7)
    hbar = comp_inverse(h)
    assert ints(hbar) == [0, 1, 1, 2, 5, 14, 42]
    assert ints(compose(h, hbar)) == [0, 1, 0, 0, 0, 0, 0]


def test_comp_inverse_needs_linear_term():
    with pytest.raises(NonInvertibleError):
        comp_inverse(PowerSeries.from_coeffs([0, 0, 1], 4))
    with pytest.raises(CompositionDomainError):
        comp_inverse(PowerSeries.from_coeffs([1, 1], 4))


def test_x_over_gains_one_coefficient():
    s = x_over(PowerSeries.from_coeffs([1, -1], 4))
    assert s.order == 5
    assert ints(s) == [0, 1, 1, 1, 1]


def test_shift_divide():
    s = PowerSeries.from_coeffs([0, 0, 3, 4], 4)
    assert ints(shift_divide(s, 2)) == [3, 4]
    with pytest.raises(NonInvertibleError):
        shift_divide(PowerSeries.from_coeffs([1, 1], 3), 1)


def test_power_negative_exponent(random_series):
    s = random_series(6)
    assert s**-2 * s**2 == PowerSeries.one(6)


def test_to_rational_refuses_floats():
    assert to_rational("-3/6") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        to_rational("1.5")
    with pytest.raises(TypeError):
        to_rational(1.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_payload_order_must_match():
    payload = PowerSeries.from_coeffs([1, "1/2"], 2).to_payload()
    assert payload == {"kind": "series", "coeffs": ["1", "1/2"], "order": 2}
    assert PowerSeries.from_payload(payload) == PowerSeries.from_coeffs([1, "1/2"])
    with pytest.raises(ValueError):
        PowerSeries.from_payload({"coeffs": ["1"], "order": 3})


def test_ring_operations(random_series):
    s, t, u = random_series(7), random_series(7), random_series(7)
    assert coeff(PowerSeries.from_coeffs([1, 2]) ** 2, 1) == 4
    assert add(s, scale(-1, s)) == PowerSeries.zero(7)
    assert sub(s, s) == PowerSeries.zero(7)
    assert mul(s, t) == s * t == t * s
    assert (s * t) * u == s * (t * u)
    assert s * (t + u) == s * t + s * u
    assert invert(invert(s)) == s
    catalan = comp_inverse(PowerSeries.from_coeffs([0, 1, -1], 7)).shift_divide(1)
    assert coeff(scale(2, catalan), 3) == 10


def test_reversion_is_an_involution(random_series):
    for _ in range(25):
        h = random_series(9).mul_x(1)
        hbar = comp_inverse(h)
        assert comp_inverse(hbar).coeffs == h.coeffs
        assert compose(h, hbar).coeffs == PowerSeries.variable(10).coeffs
        assert compose(hbar, h).coeffs == PowerSeries.variable(10).coeffs


def test_truncated_inputs_give_truncated_results(random_series):
    for _ in range(10):
        s, t = random_series(10), random_series(10)
        h = random_series(9).mul_x(1)
        for k in (3, 6):
            assert (s * t).truncate(k).coeffs == (s.truncate(k) * t.truncate(k)).coeffs
            assert invert(s).truncate(k).coeffs == invert(s.truncate(k)).coeffs
            assert compose(s, h).truncate(k).coeffs == compose(s.truncate(k), h.truncate(k)).coeffs
            assert comp_inverse(h).truncate(k).coeffs == comp_inverse(h.truncate(k)).coeffs
