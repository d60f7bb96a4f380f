from __future__ import annotations

import math
from collections.abc import Callable

import pytest

from osserman import Chart, Jet2, catalog
from osserman._utilities import halton_points
from osserman.types.common import Point


type Sampler = Callable[..., list[Point]]


def _scaled(residual: float, *jets: Jet2, power: int = 3) -> float:
    return abs(residual) / (1.0 + max(jet.sup_norm() for jet in jets) ** power)


@pytest.fixture
def sample() -> Sampler:
    """Halton points inside a chart, kept at least its sample margin away from the boundary."""

    def factory(chart: Chart, n: int = 60, *, seed: int = 0) -> list[Point]:
        margin = chart.domain.sample_margin
        return halton_points(lambda x, y: chart.margin(x, y) >= margin, chart.domain.bounds, n, seed=seed)

    return factory


@pytest.fixture
def scherk() -> catalog.MinimalGraph:
    return catalog.scherk()


@pytest.fixture
def coth() -> Callable[[float], float]:
    return lambda lam: 1.0 / math.tanh(lam)


@pytest.fixture
def scaled() -> Callable[..., float]:
    """Residual relative to ``1 + |jet|³``, the size of the cubic terms of the minimal surface system."""
    return _scaled
