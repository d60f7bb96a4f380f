import functools
import json
import math
from collections.abc import Callable, Iterable
from typing import Any

import numpy as np
import numpy.typing as npt
from numpy.polynomial import legendre
from scipy.stats import qmc

from .exceptions import SamplingError
from .types.common import JSON, Point


SCHEMA_VERSION: int = 1


class DeferredMessage:

    def __init__[**P](self, callable: Callable[P, str], *args: P.args, **kwargs: P.kwargs) -> None:
        self.callable: functools.partial[str] = functools.partial(callable, *args, **kwargs)

    def __str__(self) -> str:
        return f"{self.callable()}"


# quadrature

@functools.cache
def _legendre_rule(order: int) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    return legendre.leggauss(order)


def gauss_legendre(a: float, b: float, n: int) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    nodes, weights = _legendre_rule(n)
    half = 0.5 * (b - a)
    return 0.5 * (a + b) + half * nodes, half * weights


def composite_gauss_legendre(
    a: float,
    b: float,
    panels: int,
    *,
    order: int = 8,
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    edges = np.linspace(a, b, panels + 1)
    parts = [gauss_legendre(float(lo), float(hi), order) for lo, hi in zip(edges[:-1], edges[1:])]
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


# sampling

def halton_points(
    accept: Callable[[float, float], bool],
    bounds: tuple[float, float, float, float],
    n: int,
    *,
    seed: int = 0,
    max_draws: int = 200_000,
) -> list[Point]:
    """
    Draws ``n`` points from a scrambled (2, 3) Halton sequence mapped into ``bounds`` and keeps the
    ones ``accept`` approves, in sequence order.

    Raises :exc:`~osserman.exceptions.SamplingError` when fewer than ``n`` points are accepted
    within ``max_draws`` draws.
    """
    x0, x1, y0, y1 = bounds
    sampler = qmc.Halton(d=2, scramble=True, seed=seed)
    points: list[Point] = []
    drawn = 0
    while len(points) < n and drawn < max_draws:
        batch = qmc.scale(sampler.random(max(64, 2 * n)), [x0, y0], [x1, y1])
        drawn += len(batch)
        for x, y in batch:
            if accept(float(x), float(y)):
                points.append((float(x), float(y)))
                if len(points) == n:
                    break
    if len(points) < n:
        raise SamplingError(f"Only {len(points)} of {n} requested points were accepted after {drawn} draws.")
    return points


# serialisation

def finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


def _sanitise(value: Any) -> JSON:
    match value:
        case bool() | str() | None:
            return value
        case int():
            return value
        case float() | np.floating():
            return finite_or_none(float(value))
        case np.integer():
            return int(value)
        case dict():
            return {str(k): _sanitise(v) for k, v in value.items()}  # pyright: ignore
        case np.ndarray():
            return _sanitise(value.tolist())
        case _ if isinstance(value, Iterable):
            return [_sanitise(v) for v in value]  # pyright: ignore
        case _:
            raise TypeError(f"Object of type '{type(value).__name__}' is not JSON serialisable.")


def dumps(payload: Any, /) -> str:
    return json.dumps(_sanitise(payload), indent=4, sort_keys=True, allow_nan=False)
