from __future__ import annotations

from .enums import ExceptionSeverity
from .types.common import ErrorData, Point


__all__ = [
    "OssermanError",
    "ParameterError",
    "DomainError",
    "PathExitsDomain",
    "NonSimplyConnectedDomain",
    "GradientEstimateViolated",
    "InsufficientSamples",
    "SamplingError",
    "RegistryError",
    "GridFileError",
    "UsageError",
]


class OssermanError(Exception):
    severity: ExceptionSeverity = ExceptionSeverity.COMMON

    @property
    def data(self) -> ErrorData:
        return {
            "message":  str(self),
            "severity": self.severity.value,
            "cause":    self.__class__.__name__,
        }


class ParameterError(OssermanError, ValueError):
    pass


class DomainError(OssermanError):

    def __init__(self, message: str, *, chart: str, point: Point) -> None:
        super().__init__(message)
        self.chart: str = chart
        self.point: Point = point


class PathExitsDomain(DomainError):
    pass


class NonSimplyConnectedDomain(OssermanError):

    def __init__(self, *, chart: str, x_first: float, y_first: float) -> None:
        self.chart: str = chart
        self.x_first: float = x_first
        self.y_first: float = y_first
        self.disagreement: float = abs(x_first - y_first)
        super().__init__(
            f"Chart '{chart}' has a Lagrange one-form that is not exact on the traced region; the x-first "
            f"and y-first paths disagree by {self.disagreement}."
        )


class GradientEstimateViolated(OssermanError, ValueError):
    pass


class InsufficientSamples(OssermanError, ValueError):
    pass


class SamplingError(OssermanError):
    pass


class RegistryError(OssermanError, KeyError):

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class GridFileError(OssermanError):
    pass


class UsageError(OssermanError):
    pass
