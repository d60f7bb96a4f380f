from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from scipy.interpolate import RectBivariateSpline

from .._utilities import SCHEMA_VERSION
from ..exceptions import DomainError
from ..jets import Jet2
from ..types.common import JetEvaluator, Point, ScalarFormula
from ..types.reports import PotentialReportData


__all__ = [
    "PotentialField",
    "PotentialTrace",
]


_EVALUATION_ERRORS: tuple[type[Exception], ...] = (ValueError, ZeroDivisionError, OverflowError)


class PotentialField:
    """
    A Lagrange potential ``q`` of a minimal graph ``p``, evaluated as second-order jets.

    ``q`` is only defined up to an additive constant. A field with a ``basepoint`` is pinned so that
    ``q(basepoint) = 0``; a field without one is the raw closed form.
    """

    __slots__ = ("source", "basepoint", "_evaluator", "_offset", "kind",)

    def __init__(
        self,
        source: str,
        evaluator: JetEvaluator,
        *,
        basepoint: Point | None = None,
        kind: str = "closed_form",
    ) -> None:
        self.source: str = source
        self._evaluator: JetEvaluator = evaluator
        self.kind: str = kind
        self.basepoint: Point | None = None
        self._offset: float = 0.0
        if basepoint is not None:
            self._offset = self._raw(*basepoint).value
            self.basepoint = basepoint

    def __repr__(self) -> str:
        return f"<osserman.PotentialField: source='{self.source}', kind='{self.kind}', basepoint={self.basepoint}>"

    # constructors

    @classmethod
    def closed_form(cls, source: str, formula: ScalarFormula, *, basepoint: Point | None = None) -> PotentialField:
        def evaluate(x: float, y: float) -> Jet2:
            return formula(*Jet2.seeds(x, y))

        return cls(source, evaluate, basepoint=basepoint)

    @classmethod
    def from_grid(
        cls,
        source: str,
        xs: Sequence[float] | npt.NDArray[np.float64],
        ys: Sequence[float] | npt.NDArray[np.float64],
        values: npt.NDArray[np.float64],
        *,
        basepoint: Point | None = None,
    ) -> PotentialField:
        """
        Interpolates node values ``values[i, j] = q(xs[i], ys[j])`` with a bicubic spline. Derivatives
        of the interpolant carry an ``O(step²)`` error.
        """
        xs = np.asarray(xs, dtype=np.float64)
        ys = np.asarray(ys, dtype=np.float64)
        if values.shape != (len(xs), len(ys)):
            raise ValueError("'values' must have shape (len(xs), len(ys)).")
        if len(xs) < 4 or len(ys) < 4:
            raise ValueError("'xs' and 'ys' must both have at least 4 nodes for bicubic interpolation.")
        spline = RectBivariateSpline(xs, ys, values, kx=3, ky=3)
        x0, x1, y0, y1 = float(xs[0]), float(xs[-1]), float(ys[0]), float(ys[-1])

        def evaluate(x: float, y: float) -> Jet2:
            if not (x0 <= x <= x1 and y0 <= y <= y1):
                raise DomainError(
                    f"Point ({x}, {y}) lies outside the interpolation grid of the potential of '{source}'.",
                    chart=source,
                    point=(x, y),
                )
            return Jet2(
                float(spline.ev(x, y)),
                float(spline.ev(x, y, dx=1)),
                float(spline.ev(x, y, dy=1)),
                float(spline.ev(x, y, dx=2)),
                float(spline.ev(x, y, dx=1, dy=1)),
                float(spline.ev(x, y, dy=2)),
            )

        return cls(source, evaluate, basepoint=basepoint, kind="interpolated")

    # evaluation

    def _raw(self, x: float, y: float) -> Jet2:
        try:
            jet = self._evaluator(x, y)
        except _EVALUATION_ERRORS as error:
            raise DomainError(
                f"Potential of '{self.source}' could not be evaluated at ({x}, {y}): {error}.",
                chart=self.source,
                point=(x, y),
            ) from error
        if not jet.is_finite():
            raise DomainError(
                f"Potential of '{self.source}' produced a non-finite jet at ({x}, {y}).",
                chart=self.source,
                point=(x, y),
            )
        return jet

    def jet(self, x: float, y: float) -> Jet2:
        return self._raw(x, y) - self._offset

    def value(self, x: float, y: float) -> float:
        return self.jet(x, y).value

    def gradient(self, x: float, y: float) -> tuple[float, float]:
        return self.jet(x, y).gradient

    def pinned(self, basepoint: Point) -> PotentialField:
        return PotentialField(self.source, self._evaluator, basepoint=basepoint, kind=self.kind)

    def scaled(self, factor: float) -> PotentialField:
        evaluator = self._evaluator

        def evaluate(x: float, y: float) -> Jet2:
            return evaluator(x, y) * factor

        return PotentialField(self.source, evaluate, basepoint=self.basepoint, kind=self.kind)


class PotentialTrace:
    """
    The value of a potential at ``target`` obtained by integrating the Lagrange one-form along the two
    axis-aligned staircases from ``basepoint``.
    """

    __slots__ = ("chart", "basepoint", "target", "x_first", "y_first", "quadrature_error", "gradient_norm",)

    def __init__(
        self,
        *,
        chart: str,
        basepoint: Point,
        target: Point,
        x_first: float,
        y_first: float | None,
        quadrature_error: float,
        gradient_norm: float = math.nan,
    ) -> None:
        self.chart: str = chart
        self.basepoint: Point = basepoint
        self.target: Point = target
        self.x_first: float = x_first
        self.y_first: float | None = y_first
        self.quadrature_error: float = quadrature_error
        self.gradient_norm: float = gradient_norm

    def __repr__(self) -> str:
        return f"<osserman.PotentialTrace: chart='{self.chart}', target={self.target}, value={self.value}, " \
               f"disagreement={self.disagreement}>"

    @property
    def value(self) -> float:
        return self.x_first

    @property
    def disagreement(self) -> float | None:
        return None if self.y_first is None else abs(self.x_first - self.y_first)

    @property
    def path_independence_checked(self) -> bool:
        return self.y_first is not None

    @property
    def data(self) -> PotentialReportData:
        return {
            "schema_version":            SCHEMA_VERSION,
            "command":                   "potential",
            "chart":                     self.chart,
            "basepoint":                 list(self.basepoint),
            "target":                    list(self.target),
            "value":                     self.value,
            "x_first":                   self.x_first,
            "y_first":                   self.y_first,
            "disagreement":              self.disagreement,
            "path_independence_checked": self.path_independence_checked,
            "quadrature_error":          self.quadrature_error,
            "gradient_norm":             self.gradient_norm,
        }
