from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Any

from ..exceptions import DomainError
from ..jets import Jet2
from ..types.common import Box, ChartEvaluator, Constraint, HeightFormula


__all__ = [
    "Domain",
    "Chart",
]


_EVALUATION_ERRORS: tuple[type[Exception], ...] = (ValueError, ZeroDivisionError, OverflowError)


class Domain:
    """
    An open region of the (x, y) plane described by constraints ``c(x, y) > 0``.

    Each constraint is written with :class:`~osserman.jets.Jet2` arithmetic so that
    :meth:`margin` can turn its value into a first-order distance estimate ``c / |∇c|``, which is
    exact for the linear constraints bounding strips, squares and rhomboids.

    Parameters
    ----------
    label
        Human readable description, e.g. ``"|y| < π/2"``.
    constraints
        Functions of the coordinate jets that are positive inside the domain.
    bounds
        ``(x0, x1, y0, y1)`` box used for quasi-random sampling.
    sample_margin
        Default minimum margin for sampled interior points.
    """

    __slots__ = ("label", "_constraints", "bounds", "sample_margin",)

    def __init__(
        self,
        label: str,
        constraints: Sequence[Constraint] = (),
        *,
        bounds: Box = (-1.0, 1.0, -1.0, 1.0),
        sample_margin: float = 0.1,
    ) -> None:
        if bounds[0] >= bounds[1] or bounds[2] >= bounds[3]:
            raise ValueError("'bounds' must be an increasing (x0, x1, y0, y1) box.")
        if sample_margin < 0.0:
            raise ValueError("'sample_margin' must be more than or equal to 0.0.")

        self.label: str = label
        self._constraints: tuple[Constraint, ...] = tuple(constraints)
        self.bounds: Box = bounds
        self.sample_margin: float = sample_margin

    def __repr__(self) -> str:
        return f"<osserman.Domain: label='{self.label}', bounds={self.bounds}>"

    def margin(self, x: float, y: float) -> float:
        margin = math.inf
        seeds = Jet2.seeds(x, y)
        for constraint in self._constraints:
            try:
                jet = constraint(*seeds)
            except _EVALUATION_ERRORS:
                return -math.inf
            norm = math.hypot(jet.dx, jet.dy)
            if not math.isfinite(jet.value) or not math.isfinite(norm):
                return -math.inf
            margin = min(margin, jet.value / norm if norm > 0.0 else (math.inf if jet.value > 0.0 else jet.value))
        return margin

    def contains(self, x: float, y: float) -> bool:
        return self.margin(x, y) > 0.0

    def restrict(self, label: str, *constraints: Constraint) -> Domain:
        return Domain(
            f"{self.label}, {label}",
            self._constraints + constraints,
            bounds=self.bounds,
            sample_margin=self.sample_margin,
        )


class Chart:
    """
    A graph surface ``(x, y, f(x, y), g(x, y))`` in R⁴ with exact second-order jets.

    Charts are immutable; evaluating a point outside :attr:`domain` raises
    :class:`~osserman.DomainError` rather than returning NaN.
    """

    __slots__ = ("name", "domain", "_evaluator", "mu", "base", "hypersurface", "description", "reflected",)

    def __init__(
        self,
        name: str,
        domain: Domain,
        evaluator: ChartEvaluator,
        *,
        mu: float | None = None,
        base: Chart | None = None,
        hypersurface: bool = False,
        description: str = "",
        reflected: bool = False,
    ) -> None:
        self.name: str = name
        self.domain: Domain = domain
        self._evaluator: ChartEvaluator = evaluator
        self.mu: float | None = mu
        self.base: Chart | None = base
        self.hypersurface: bool = hypersurface
        self.description: str = description
        self.reflected: bool = reflected

    def __repr__(self) -> str:
        return f"<osserman.Chart: name='{self.name}', domain='{self.domain.label}', mu={self.mu}>"

    @classmethod
    def from_formula(cls, name: str, domain: Domain, formula: HeightFormula, **kwargs: Any) -> Chart:
        def evaluate(x: float, y: float) -> tuple[Jet2, Jet2]:
            return formula(*Jet2.seeds(x, y))

        return cls(name, domain, evaluate, **kwargs)

    # domain

    def contains(self, x: float, y: float) -> bool:
        return self.domain.contains(x, y)

    def margin(self, x: float, y: float) -> float:
        return self.domain.margin(x, y)

    def require_margin(self, x: float, y: float, margin: float) -> None:
        if (available := self.domain.margin(x, y)) < margin:
            raise DomainError(
                f"Point ({x}, {y}) has margin {available} inside chart '{self.name}' but {margin} is required.",
                chart=self.name,
                point=(x, y),
            )

    # evaluation

    def evaluate(self, x: float, y: float) -> tuple[Jet2, Jet2]:
        if not self.domain.contains(x, y):
            raise DomainError(
                f"Point ({x}, {y}) lies outside the domain of chart '{self.name}' ({self.domain.label}).",
                chart=self.name,
                point=(x, y),
            )
        try:
            jf, jg = self._evaluator(x, y)
        except _EVALUATION_ERRORS as error:
            raise DomainError(
                f"Chart '{self.name}' could not be evaluated at ({x}, {y}): {error}.",
                chart=self.name,
                point=(x, y),
            ) from error
        if not (jf.is_finite() and jg.is_finite()):
            raise DomainError(
                f"Chart '{self.name}' produced non-finite jets at ({x}, {y}).",
                chart=self.name,
                point=(x, y),
            )
        return jf, jg

    def f_jet(self, x: float, y: float) -> Jet2:
        return self.evaluate(x, y)[0]

    def g_jet(self, x: float, y: float) -> Jet2:
        return self.evaluate(x, y)[1]

    def heights(self, x: float, y: float) -> tuple[float, float]:
        jf, jg = self.evaluate(x, y)
        return jf.value, jg.value

    # derived charts

    def reflect(self, *, name: str | None = None) -> Chart:
        """
        Returns the mirror image under ``g -> -g``; an Osserman coefficient ``μ`` becomes ``-μ``.
        """
        evaluator = self._evaluator

        def evaluate(x: float, y: float) -> tuple[Jet2, Jet2]:
            jf, jg = evaluator(x, y)
            return jf, -jg

        return Chart(
            name or f"{self.name}~reflected",
            self.domain,
            evaluate,
            mu=None if self.mu is None else -self.mu,
            base=self.base,
            hypersurface=self.hypersurface,
            description=self.description,
            reflected=not self.reflected,
        )
