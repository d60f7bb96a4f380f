from typing import NotRequired, TypedDict

from .common import ErrorData


class CheckData(TypedDict):
    name: str
    max_residual: float
    tolerance: float
    passed: bool


class VerifyReportData(TypedDict):
    schema_version: int
    command: str
    chart: str
    samples: int
    seed: int
    mu: float | None
    checks: list[CheckData]
    passed: bool


class HyperplaneData(TypedDict):
    coefficients: list[list[float]]
    residual: float
    degenerate: bool


class GaussReportData(TypedDict):
    schema_version: int
    command: str
    chart: str
    samples: int
    seed: int
    hyperquadric_max: float
    fit: NotRequired[HyperplaneData]
    expected: NotRequired[list[list[float]]]
    expected_distance: NotRequired[float]
    passed: bool


class PotentialReportData(TypedDict):
    schema_version: int
    command: str
    chart: str
    basepoint: list[float]
    target: list[float]
    value: float
    x_first: float
    y_first: float | None
    disagreement: float | None
    path_independence_checked: bool
    quadrature_error: float
    gradient_norm: float
    expected: NotRequired[float]
    error: NotRequired[float]
    passed: NotRequired[bool]


class CurvatureRowData(TypedDict):
    T: float
    n: int
    value: float
    tail: float


class CurvatureReportData(TypedDict):
    schema_version: int
    command: str
    family: str
    expected: float | None
    rows: list[CurvatureRowData]
    passed: bool


class SolveReportData(TypedDict):
    schema_version: int
    command: NotRequired[str]
    chart: NotRequired[str | None]
    iterations: int
    final_area: float
    final_gradient_norm: float
    converged: bool
    step_rule: str
    message: str
    area_history: list[float]
    max_nodal_error: NotRequired[float]


class RayData(TypedDict):
    direction: list[float]
    f: float
    g: float
    spread: float


class SingularityReportData(TypedDict):
    chart: str
    center: list[float]
    radii: list[float]
    rays: list[RayData]
    discrepancy: float


class RegistryEntryData(TypedDict):
    key: str
    kind: str
    parameters: dict[str, float]
    description: str
    reference: str


class ErrorReportData(TypedDict):
    schema_version: int
    error: ErrorData
