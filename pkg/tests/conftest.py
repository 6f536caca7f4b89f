from __future__ import annotations

import os

import numpy as np
import pytest

# every matrix built in the suite is checked against direct extraction
os.environ["RIORDAN_CROSSCHECK"] = "true"

from riordan.matrix import from_T  # noqa: E402
from series.power_series import PowerSeries  # noqa: E402
from series.settings import get_settings  # noqa: E402

get_settings.cache_clear()


@pytest.fixture
def override_settings(monkeypatch):
    """Set RIORDAN_* variables for one test."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"RIORDAN_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()

    yield apply
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def random_series(rng):
    def make(order: int, *, unit: bool = True) -> PowerSeries:
        coeffs = [int(c) for c in rng.integers(-3, 4, size=order)]
        if unit and coeffs[0] == 0:
            coeffs[0] = int(rng.choice([-2, -1, 1, 2]))
        return PowerSeries.from_coeffs(coeffs)

    return make


@pytest.fixture
def random_matrix(random_series):
    def make(order: int):
        return from_T(random_series(order), random_series(order))

    return make


@pytest.fixture
def pascal():
    return from_T(PowerSeries.one(8), PowerSeries.from_coeffs([1, -1], 8))
