from __future__ import annotations

import math
from collections.abc import Sequence

from .._utilities import SCHEMA_VERSION
from ..enums import StepRule
from ..types.common import Point
from ..types.reports import (
    CheckData, CurvatureReportData, CurvatureRowData, RayData, SingularityReportData, SolveReportData,
)


__all__ = [
    "Check",
    "SolveReport",
    "CurvatureRow",
    "CurvatureReport",
    "Ray",
    "SingularityReport",
]


class Check:
    __slots__ = ("name", "max_residual", "tolerance",)

    def __init__(self, name: str, max_residual: float, tolerance: float) -> None:
        self.name: str = name
        self.max_residual: float = max_residual
        self.tolerance: float = tolerance

    def __repr__(self) -> str:
        return f"<osserman.Check: name='{self.name}', max_residual={self.max_residual}, passed={self.passed}>"

    @property
    def passed(self) -> bool:
        return math.isfinite(self.max_residual) and self.max_residual <= self.tolerance

    @property
    def data(self) -> CheckData:
        return {
            "name":         self.name,
            "max_residual": self.max_residual,
            "tolerance":    self.tolerance,
            "passed":       self.passed,
        }


class SolveReport:
    __slots__ = (
        "iterations", "final_area", "final_gradient_norm", "converged", "wall_time", "step_rule", "message",
        "area_history",
    )

    def __init__(
        self,
        *,
        iterations: int,
        final_area: float,
        final_gradient_norm: float,
        converged: bool,
        wall_time: float,
        step_rule: StepRule,
        message: str,
        area_history: Sequence[float],
    ) -> None:
        self.iterations: int = iterations
        self.final_area: float = final_area
        self.final_gradient_norm: float = final_gradient_norm
        self.converged: bool = converged
        self.wall_time: float = wall_time
        self.step_rule: StepRule = step_rule
        self.message: str = message
        self.area_history: list[float] = list(area_history)

    def __repr__(self) -> str:
        return f"<osserman.SolveReport: iterations={self.iterations}, final_area={self.final_area}, " \
               f"converged={self.converged}>"

    @property
    def is_monotone(self) -> bool:
        return all(b <= a for a, b in zip(self.area_history, self.area_history[1:]))

    @property
    def data(self) -> SolveReportData:
        # wall_time is left out so identical runs serialise identically
        return {
            "schema_version":      SCHEMA_VERSION,
            "iterations":          self.iterations,
            "final_area":          self.final_area,
            "final_gradient_norm": self.final_gradient_norm,
            "converged":           self.converged,
            "step_rule":           self.step_rule.value,
            "message":             self.message,
            "area_history":        self.area_history,
        }


class CurvatureRow:
    __slots__ = ("T", "n", "value", "tail",)

    def __init__(self, T: float, n: int, value: float, tail: float) -> None:
        self.T: float = T
        self.n: int = n
        self.value: float = value
        self.tail: float = tail

    def __repr__(self) -> str:
        return f"<osserman.CurvatureRow: T={self.T}, n={self.n}, value={self.value}, tail={self.tail}>"

    @property
    def data(self) -> CurvatureRowData:
        return {"T": self.T, "n": self.n, "value": self.value, "tail": self.tail}


class CurvatureReport:
    __slots__ = ("family", "expected", "tolerance", "rows",)

    def __init__(
        self,
        family: str,
        rows: Sequence[CurvatureRow],
        *,
        expected: float | None = None,
        tolerance: float = 0.05,
    ) -> None:
        self.family: str = family
        self.rows: list[CurvatureRow] = list(rows)
        self.expected: float | None = expected
        self.tolerance: float = tolerance

    def __repr__(self) -> str:
        return f"<osserman.CurvatureReport: family='{self.family}', rows={len(self.rows)}>"

    @property
    def passed(self) -> bool:
        if self.expected is None or not self.rows:
            return True
        return abs(self.rows[-1].value - self.expected) <= self.tolerance

    @property
    def data(self) -> CurvatureReportData:
        return {
            "schema_version": SCHEMA_VERSION,
            "command":        "curvature",
            "family":         self.family,
            "expected":       self.expected,
            "rows":           [row.data for row in self.rows],
            "passed":         self.passed,
        }


class Ray:
    __slots__ = ("direction", "f", "g", "spread",)

    def __init__(self, direction: Point, f: float, g: float, spread: float) -> None:
        self.direction: Point = direction
        self.f: float = f
        self.g: float = g
        self.spread: float = spread

    def __repr__(self) -> str:
        return f"<osserman.Ray: direction={self.direction}, f={self.f}, g={self.g}>"

    @property
    def data(self) -> RayData:
        return {"direction": list(self.direction), "f": self.f, "g": self.g, "spread": self.spread}


class SingularityReport:
    """
    Limits of ``(f, g)`` along rays into ``center``. Each ray's limit is its value at the smallest
    radius and ``spread`` is how far the samples along that ray still move; a ``discrepancy`` much
    larger than every ``spread`` certifies that no single limit exists.
    """

    __slots__ = ("chart", "center", "radii", "rays",)

    def __init__(self, chart: str, center: Point, radii: Sequence[float], rays: Sequence[Ray]) -> None:
        self.chart: str = chart
        self.center: Point = center
        self.radii: list[float] = list(radii)
        self.rays: list[Ray] = list(rays)

    def __repr__(self) -> str:
        return f"<osserman.SingularityReport: chart='{self.chart}', discrepancy={self.discrepancy}>"

    @property
    def discrepancy(self) -> float:
        return max(
            (max(abs(a.f - b.f), abs(a.g - b.g)) for a in self.rays for b in self.rays),
            default=0.0,
        )

    @property
    def data(self) -> SingularityReportData:
        return {
            "chart":       self.chart,
            "center":      list(self.center),
            "radii":       self.radii,
            "rays":        [ray.data for ray in self.rays],
            "discrepancy": self.discrepancy,
        }
