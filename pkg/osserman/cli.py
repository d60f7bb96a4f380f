"""
Command line front end, ``python -m osserman <command> [options]``.

Every command prints a JSON report (sorted keys, ``schema_version`` field) or writes a data file,
and exits with ``0`` when all checks pass, ``1`` when a check fails and ``2`` on usage or
configuration errors. Failures are reported as an ``{"error": {...}}`` object, never as a traceback.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

import numpy as np
import numpy.typing as npt

from . import registry
from ._utilities import SCHEMA_VERSION, DeferredMessage, dumps, halton_points
from .catalog import MinimalGraph, curvature_table
from .enums import ExceptionSeverity, ExitCode, OutputFormat, StepRule
from .exceptions import DomainError, NonSimplyConnectedDomain, OssermanError, UsageError
from .gauss import (
    fit_hyperplane, gauss_map, hyperplane_residual, hyperquadric_residual, is_degenerate, osserman_residual,
)
from .geometry import conformal_ratio, divergence_identities_residual, mss_residual
from .lagrange import trace_potential
from .objects.chart import Chart
from .objects.grid import GridField
from .objects.patch import ConformalPatch
from .objects.projective import Hyperplane
from .objects.reports import Check
from .solver import max_nodal_error, read_grid, solve, write_grid
from .types.common import Box, Point
from .types.reports import ErrorReportData, GaussReportData, VerifyReportData


__all__ = [
    "RunConfig",
    "build_parser",
    "cmd_verify",
    "cmd_sample",
    "cmd_potential",
    "cmd_gauss",
    "cmd_curvature",
    "cmd_solve",
    "cmd_list",
    "main",
]

__log__: logging.Logger = logging.getLogger("osserman.cli")


type FloatArray = npt.NDArray[np.float64]
type BoolArray = npt.NDArray[np.bool_]

_FD_STEP: float = 1e-3
_HYPERQUADRIC_TOLERANCE: float = 1e-12
_HYPERPLANE_TOLERANCE: float = 1e-9
_DIVERGENCE_TOLERANCE: float = 1e-4
_CONFORMAL_TOLERANCE: float = 1e-10
_FIT_DISTANCE_TOLERANCE: float = 1e-6
_DEFAULT_BOX: Box = (-0.4, 0.4, -0.4, 0.4)


# parser

class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs.")
    parser.add_argument("--seed", type=int, default=0, help="Sampling seed (default: 0).")
    parser.add_argument("--out", type=Path, default=None, help="Output file (default: stdout).")
    parser.add_argument("--tol", type=float, default=None, help="Pass/fail tolerance of the command.")
    return parser


def _parameter_options() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False)
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="Deformation parameter λ.")
    parser.add_argument("--N", dest="N", type=int, default=None, help="Degree N.")
    parser.add_argument("--alpha", type=float, default=None, help="Family parameter α.")
    parser.add_argument("--beta", type=float, default=None, help="Family parameter β.")
    parser.add_argument("--rho", type=float, default=None, help="Net scale ρ.")
    parser.add_argument("--mu", type=float, default=None, help="Osserman coefficient μ, overriding the chart's.")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common, parameters = _common_options(), _parameter_options()
    parser = _ArgumentParser(prog="osserman", description="Numerical lab for minimal surfaces in R⁴.")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common, parameters], help="Residual verification sweep.")
    verify.add_argument("--chart", required=True, help="Registry key, e.g. 'scherk_doubly:lambda=0.7'.")
    verify.add_argument("--n", type=int, default=200, help="Number of Halton samples (default: 200).")

    sample = commands.add_parser("sample", parents=[common, parameters], help="Point clouds and meshes.")
    source = sample.add_mutually_exclusive_group(required=True)
    source.add_argument("--chart", default=None, help="Chart registry key.")
    source.add_argument("--family", default=None, help="Patch registry key, e.g. 'Fplus:lambda=0.5'.")
    sample.add_argument("--n", type=int, default=200, help="Points in a chart point cloud (default: 200).")
    sample.add_argument("--grid", type=int, default=41, help="Mesh nodes per direction (default: 41).")
    sample.add_argument("--extent", type=float, default=2.0, help="Half width used for unbounded parameters.")
    sample.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value,
        help="Point rows as csv or json, or a mesh as obj (default: csv).",
    )
    sample.add_argument("--project", default="123", help="Coordinates kept in OBJ output, e.g. '124'.")

    potential = commands.add_parser("potential", parents=[common, parameters], help="Lagrange potential.")
    potential.add_argument("--chart", required=True, help="Registry key of a minimal graph in R³.")
    potential.add_argument("--basepoint", type=float, nargs=2, default=(0.0, 0.0), metavar=("X", "Y"))
    potential.add_argument("--target", type=float, nargs=2, default=(0.5, 0.5), metavar=("X", "Y"))
    potential.add_argument("--grid-step", type=float, default=0.05, help="Quadrature panel length.")

    gauss = commands.add_parser("gauss", parents=[common, parameters], help="Gauss map and degeneracy.")
    gauss.add_argument("--chart", required=True, help="Chart registry key.")
    gauss.add_argument("--n", type=int, default=200, help="Number of Halton samples (default: 200).")
    gauss.add_argument("--fit", action="store_true", help="Fit a hyperplane of CP³ to the Gauss image.")

    curvature = commands.add_parser("curvature", parents=[common, parameters], help="Total curvature table.")
    curvature.add_argument("--family", required=True, help="Patch registry key, e.g. 'Fplus:lambda=0.5'.")
    curvature.add_argument("--T", dest="T", type=float, nargs="+", default=[2.0, 4.0, 6.0])
    curvature.add_argument("--n", type=int, default=200, help="Gauss–Legendre nodes per direction.")
    curvature.add_argument("--expected", type=float, default=None, help="Expected total curvature.")

    solver = commands.add_parser("solve", parents=[common, parameters], help="Discrete area minimisation.")
    solver.add_argument("--chart", default=None, help="Chart providing boundary values and the exact solution.")
    solver.add_argument("--input", type=Path, default=None, help="Grid file (.csv or .json) to start from.")
    solver.add_argument("--box", type=float, nargs=4, default=None, metavar=("X0", "X1", "Y0", "Y1"))
    solver.add_argument("--nx", type=int, default=33)
    solver.add_argument("--ny", type=int, default=33)
    solver.add_argument("--max-iter", type=int, default=500)
    solver.add_argument("--step-rule", choices=[rule.value for rule in StepRule], default=StepRule.SOBOLEV.value)
    solver.add_argument("--warm-start", action="store_true", help="Keep the interior values of --input.")

    commands.add_parser("list", parents=[common], help="List registry keys.")
    return parser


# configuration

class RunConfig:
    """
    Validated command line configuration.

    Construction resolves the registry key, so unknown keys and out-of-range parameters are rejected
    before any computation starts.
    """

    __slots__ = (
        "command", "key", "is_patch", "overrides", "mu", "n", "tol", "out", "format", "seed", "verbosity",
        "fit", "project", "grid", "extent", "Ts", "expected", "basepoint", "target", "grid_step", "input",
        "box", "nx", "ny", "max_iter", "step_rule", "warm_start", "resolved",
    )

    def __init__(self, namespace: argparse.Namespace) -> None:
        get = vars(namespace).get
        self.command: str = namespace.command
        self.key: str | None = get("chart") or get("family")
        self.is_patch: bool = get("family") is not None
        self.overrides: dict[str, registry.Parameter] = {
            name: value for name, value in (
                ("lambda", get("lam")), ("N", get("N")), ("alpha", get("alpha")), ("beta", get("beta")),
                ("rho", get("rho")),
            ) if value is not None
        }
        self.mu: float | None = get("mu")
        self.n: int = get("n") or 0
        self.tol: float | None = get("tol")
        self.out: Path | None = get("out")
        self.format: OutputFormat = OutputFormat(get("format") or OutputFormat.JSON.value)
        self.seed: int = get("seed") or 0
        self.verbosity: int = get("verbose") or 0
        self.fit: bool = bool(get("fit"))
        self.project: tuple[int, int, int] = _parse_projection(get("project") or "123")
        self.grid: int = get("grid") or 0
        self.extent: float = get("extent") or 0.0
        self.Ts: list[float] = list(get("T") or [])
        self.expected: float | None = get("expected")
        self.basepoint: Point = tuple(get("basepoint") or (0.0, 0.0))  # pyright: ignore
        self.target: Point = tuple(get("target") or (0.0, 0.0))  # pyright: ignore
        self.grid_step: float = get("grid_step") or 0.05
        self.input: Path | None = get("input")
        self.box: Box | None = tuple(box) if (box := get("box")) else None  # pyright: ignore
        self.nx: int = get("nx") or 0
        self.ny: int = get("ny") or 0
        self.max_iter: int = get("max_iter") if get("max_iter") is not None else 0
        self.step_rule: StepRule = StepRule(get("step_rule") or StepRule.SOBOLEV.value)
        self.warm_start: bool = bool(get("warm_start"))
        self.resolved: Chart | MinimalGraph | ConformalPatch | None = None
        self._validate()

    def __repr__(self) -> str:
        return f"<osserman.RunConfig: command='{self.command}', key='{self.key}', overrides={self.overrides}>"

    @classmethod
    def from_arguments(cls, argv: Sequence[str] | None = None) -> RunConfig:
        return cls(build_parser().parse_args(argv))

    def _validate(self) -> None:
        if self.command in ("verify", "sample", "gauss") and self.n < 1:
            raise UsageError("'n' must be more than or equal to 1.")
        if self.command == "gauss" and self.fit and self.n < 4:
            raise UsageError("'n' must be more than or equal to 4 when fitting a hyperplane.")
        if self.command == "curvature" and self.n < 16:
            raise UsageError("'n' must be more than or equal to 16.")
        if self.tol is not None and not self.tol > 0.0:
            raise UsageError("'tol' must be more than 0.0.")
        if self.mu is not None and (self.mu == 0.0 or not math.isfinite(self.mu)):
            raise UsageError("'mu' must be finite and non-zero.")
        if self.command == "sample" and (self.grid < 2 or not self.extent > 0.0):
            raise UsageError("'grid' must be more than or equal to 2 and 'extent' more than 0.0.")
        if self.command == "curvature" and not all(T > 0.0 for T in self.Ts):
            raise UsageError("'T' values must be more than 0.0.")
        if self.command == "potential" and not self.grid_step > 0.0:
            raise UsageError("'grid_step' must be more than 0.0.")
        if self.command == "solve":
            if self.nx < 3 or self.ny < 3:
                raise UsageError("'nx' and 'ny' must be more than or equal to 3.")
            if self.max_iter < 0:
                raise UsageError("'max_iter' must be more than or equal to 0.")
            if self.key is None and self.input is None:
                raise UsageError("'solve' needs a boundary source, pass '--chart' or '--input'.")
            if self.warm_start and self.input is None:
                raise UsageError("'--warm-start' needs '--input'.")

        if self.key is None:
            if self.overrides:
                raise UsageError(f"Parameters {sorted(self.overrides)} were given without a registry key.")
            return
        self.resolved = self._resolve(self.key)

    def _resolve(self, key: str) -> Chart | MinimalGraph | ConformalPatch:
        name, _ = registry.parse_key(key)
        kind = registry.get_entry(name).kind
        if self.is_patch:
            return registry.resolve_patch(key, self.overrides)
        if kind == "patch":
            if self.command == "sample":
                return registry.resolve_patch(key, self.overrides)
            raise UsageError(f"Registry key '{key}' names a conformal patch, pass it with '--family'.")
        if kind == "graph" and self.command == "potential":
            return registry.resolve_graph(key, self.overrides)
        return registry.resolve_chart(key, self.overrides)

    # resolved objects

    @property
    def chart(self) -> Chart:
        match self.resolved:
            case Chart():
                return self.resolved
            case MinimalGraph():
                return self.resolved.chart
            case _:
                raise UsageError(f"Command '{self.command}' needs a chart key.")

    @property
    def patch(self) -> ConformalPatch:
        if not isinstance(self.resolved, ConformalPatch):
            raise UsageError(f"Command '{self.command}' needs a patch key.")
        return self.resolved


def _parse_projection(selector: str) -> tuple[int, int, int]:
    if len(selector) != 3 or len(set(selector)) != 3 or not set(selector) <= set("1234"):
        raise UsageError(f"'project' must name three distinct coordinates out of '1234', got '{selector}'.")
    a, b, c = (int(character) - 1 for character in selector)
    return a, b, c


# output

def _emit(config: RunConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text if text.endswith("\n") else f"{text}\n")
        return
    config.out.write_text(text if text.endswith("\n") else f"{text}\n")
    __log__.info(f"Command '{config.command}' output written to '{config.out}'.")


def _error_report(error: BaseException, severity: ExceptionSeverity) -> ErrorReportData:
    if isinstance(error, OssermanError) and severity is error.severity:
        data = error.data
    else:
        data = {"message": str(error), "severity": severity.value, "cause": error.__class__.__name__}
    return {"schema_version": SCHEMA_VERSION, "error": data}  # pyright: ignore


def _fail(error: BaseException, code: ExitCode, severity: ExceptionSeverity = ExceptionSeverity.COMMON) -> int:
    sys.stdout.write(f"{dumps(_error_report(error, severity))}\n")
    return int(code)


def _scale(*jets: Any, power: int) -> float:
    return 1.0 + max(jet.sup_norm() for jet in jets) ** power


def _sample_points(chart: Chart, config: RunConfig) -> list[Point]:
    margin = chart.domain.sample_margin
    return halton_points(
        lambda x, y: chart.margin(x, y) >= margin,
        chart.domain.bounds,
        config.n,
        seed=config.seed,
    )


# commands

def cmd_verify(config: RunConfig) -> ExitCode:
    chart = config.chart
    mu = config.mu if config.mu is not None else chart.mu
    points = _sample_points(chart, config)

    mss = osserman = quadric = plane = divergence = invariance = 0.0
    hyperplane = Hyperplane.osserman(mu) if mu is not None else None
    for point in points:
        jf, jg = chart.evaluate(*point)
        mss = max(mss, max(map(abs, mss_residual(jf, jg))) / _scale(jf, jg, power=3))
        image = gauss_map(jf, jg)
        quadric = max(quadric, hyperquadric_residual(image))
        divergence = max(
            divergence,
            max(map(abs, divergence_identities_residual(chart, point, _FD_STEP))) / _scale(jf, jg, power=3),
        )
        if mu is not None and hyperplane is not None:
            osserman = max(osserman, max(map(abs, osserman_residual(jf, jg, mu))) / _scale(jf, jg, power=2))
            plane = max(plane, hyperplane_residual(image, hyperplane))
        if chart.base is not None:
            ratio, base_ratio = conformal_ratio(jf, jg), conformal_ratio(*chart.base.evaluate(*point))
            invariance = max(
                invariance,
                max(abs(a - b) for a, b in zip(ratio, base_ratio)) / (1.0 + max(map(abs, base_ratio))),
            )

    tol = config.tol if config.tol is not None else 1e-8
    checks = [
        Check("mss", mss, tol),
        Check("hyperquadric", quadric, _HYPERQUADRIC_TOLERANCE),
        Check("divergence_identities", divergence, _DIVERGENCE_TOLERANCE),
    ]
    if mu is not None:
        checks += [Check("osserman", osserman, tol), Check("hyperplane", plane, _HYPERPLANE_TOLERANCE)]
    if chart.base is not None:
        checks.append(Check("conformal_invariance", invariance, _CONFORMAL_TOLERANCE))

    passed = all(check.passed for check in checks)
    report: VerifyReportData = {
        "schema_version": SCHEMA_VERSION,
        "command":        "verify",
        "chart":          chart.name,
        "samples":        len(points),
        "seed":           config.seed,
        "mu":             mu,
        "checks":         [check.data for check in checks],
        "passed":         passed,
    }
    __log__.info(f"Chart '{chart.name}' verified on {len(points)} points, passed={passed}.")
    _emit(config, dumps(report))
    return ExitCode.OK if passed else ExitCode.CHECK_FAILED


def cmd_gauss(config: RunConfig) -> ExitCode:
    chart = config.chart
    mu = config.mu if config.mu is not None else chart.mu
    points = _sample_points(chart, config)
    images = [gauss_map(*chart.evaluate(*point)) for point in points]
    quadric = max(hyperquadric_residual(image) for image in images)

    report: GaussReportData = {
        "schema_version":   SCHEMA_VERSION,
        "command":          "gauss",
        "chart":            chart.name,
        "samples":          len(points),
        "seed":             config.seed,
        "hyperquadric_max": quadric,
        "passed":           quadric <= _HYPERQUADRIC_TOLERANCE,
    }
    if config.fit:
        hyperplane, residual = fit_hyperplane(images)
        report["fit"] = {
            "coefficients": hyperplane.data,
            "residual":     residual,
            "degenerate":   is_degenerate(residual, len(images)),
        }
        if mu is not None:
            expected = Hyperplane.osserman(mu)
            distance = hyperplane.distance(expected)
            report["expected"] = expected.data
            report["expected_distance"] = distance
            tol = config.tol if config.tol is not None else 1e-8
            report["passed"] = report["passed"] and residual <= tol and distance <= _FIT_DISTANCE_TOLERANCE
        __log__.info(f"Chart '{chart.name}' Gauss image fitted by {hyperplane!r} with residual {residual}.")

    _emit(config, dumps(report))
    return ExitCode.OK if report["passed"] else ExitCode.CHECK_FAILED


def cmd_potential(config: RunConfig) -> ExitCode:
    graph = config.resolved if isinstance(config.resolved, MinimalGraph) else None
    chart = config.chart
    tol = config.tol if config.tol is not None else 1e-8
    trace = trace_potential(chart, config.basepoint, config.target, config.grid_step, tol=tol)

    report = trace.data
    passed = trace.gradient_norm < 1.0
    if graph is not None:
        expected = graph.potential.value(*config.target) - graph.potential.value(*config.basepoint)
        report["expected"] = expected
        report["error"] = abs(trace.value - expected)
        passed = passed and report["error"] <= tol
    report["passed"] = passed

    _emit(config, dumps(report))
    return ExitCode.OK if passed else ExitCode.CHECK_FAILED


def _expected_total_curvature(config: RunConfig) -> float | None:
    if config.expected is not None:
        return config.expected
    assert config.key is not None
    name, raw = registry.parse_key(config.key)
    parameters = registry.get_entry(name).bind(raw, config.overrides)
    match name:
        case "Fplus":
            return -4.0 * math.pi
        case "XN":
            return -4.0 * math.pi * int(parameters["N"])
        case _:
            return None


def cmd_curvature(config: RunConfig) -> ExitCode:
    report = curvature_table(
        config.patch,
        config.Ts,
        config.n,
        expected=_expected_total_curvature(config),
        tolerance=config.tol if config.tol is not None else 0.05,
        fd_step=_FD_STEP,
    )
    _emit(config, dumps(report.data))
    return ExitCode.OK if report.passed else ExitCode.CHECK_FAILED


def cmd_solve(config: RunConfig) -> ExitCode:
    chart = config.chart if config.resolved is not None else None
    if config.input is not None:
        grid = read_grid(config.input, chart=chart.name if chart is not None else None)
    else:
        assert chart is not None
        grid = GridField.from_chart(chart, config.box or _DEFAULT_BOX, config.nx, config.ny, boundary_only=True)

    report = solve(
        grid,
        max_iter=config.max_iter,
        tol=config.tol if config.tol is not None else 1e-8,
        step_rule=config.step_rule,
        warm_start=config.warm_start,
    )
    data = report.data
    data["command"] = "solve"
    data["chart"] = grid.chart
    if chart is not None:
        data["max_nodal_error"] = max_nodal_error(grid, chart)
    if config.out is not None:
        write_grid(grid, config.out)
        __log__.info(f"Grid {grid.nx}x{grid.ny} written to '{config.out}'.")

    # the grid goes to --out, the report always goes to stdout
    sys.stdout.write(f"{dumps(data)}\n")
    return ExitCode.OK if report.converged else ExitCode.CHECK_FAILED


def _csv(header: str, rows: FloatArray) -> str:
    buffer = io.StringIO()
    np.savetxt(buffer, rows, delimiter=",", header=header, comments="", fmt="%.17g")
    return buffer.getvalue()


def _rows(config: RunConfig, name: str, header: str, rows: FloatArray) -> str:
    if config.format is OutputFormat.JSON:
        return dumps({
            "schema_version": SCHEMA_VERSION,
            "command":        "sample",
            "key":            name,
            "columns":        header.split(","),
            "samples":        rows,
        })
    return _csv(header, rows)


def _obj(name: str, points: FloatArray, valid: BoolArray, project: tuple[int, int, int]) -> str:
    """
    Triangulates the node lattice, keeping only cells whose four corners are valid. The coordinate
    left out by ``project`` follows each vertex as a ``# x<k> <value>`` comment.
    """
    dropped = next(k for k in range(4) if k not in project)
    lines = [
        f"# osserman mesh '{name}'",
        f"# projection x{project[0] + 1} x{project[1] + 1} x{project[2] + 1}, dropped x{dropped + 1}",
    ]
    index = np.zeros(valid.shape, dtype=np.int64)
    count = 0
    for i, j in np.ndindex(*valid.shape):
        if not valid[i, j]:
            continue
        count += 1
        index[i, j] = count
        a, b, c = (float(points[i, j, k]) for k in project)
        lines.append(f"v {a!r} {b!r} {c!r}")
        lines.append(f"# x{dropped + 1} {float(points[i, j, dropped])!r}")
    nx, ny = valid.shape
    for i in range(nx - 1):
        for j in range(ny - 1):
            if not valid[i:i + 2, j:j + 2].all():
                continue
            a, b, c, d = index[i, j], index[i + 1, j], index[i + 1, j + 1], index[i, j + 1]
            lines.append(f"f {a} {b} {c}")
            lines.append(f"f {a} {c} {d}")
    return "\n".join(lines) + "\n"


def _parameter_axis(bounds: tuple[float, float], periodic: bool, extent: float, n: int) -> FloatArray:
    lo, hi = bounds
    if not periodic:
        lo, hi = max(lo, -extent), min(hi, extent)
    return np.linspace(lo, hi, n)


def _sample_patch(config: RunConfig, patch: ConformalPatch) -> str:
    us = _parameter_axis(patch.u_range, patch.periodic_u, config.extent, config.grid)
    vs = _parameter_axis(patch.v_range, patch.periodic_v, config.extent, config.grid)
    points = np.zeros((len(us), len(vs), 4))
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            points[i, j] = patch.point(float(u), float(v))

    if config.format is OutputFormat.OBJ:
        return _obj(patch.name, points, np.ones((len(us), len(vs)), dtype=np.bool_), config.project)
    U, V = np.meshgrid(us, vs, indexing="ij")
    rows = np.column_stack([U.ravel(), V.ravel(), points.reshape(-1, 4)])
    return _rows(config, patch.name, "u,v,x1,x2,x3,x4", rows)


def _sample_chart(config: RunConfig, chart: Chart) -> str:
    if config.format is not OutputFormat.OBJ:
        points = _sample_points(chart, config)
        rows = np.array([(x, y, *chart.heights(x, y)) for x, y in points], dtype=np.float64)
        return _rows(config, chart.name, "x,y,f,g", rows)

    x0, x1, y0, y1 = chart.domain.bounds
    xs, ys = np.linspace(x0, x1, config.grid), np.linspace(y0, y1, config.grid)
    points = np.zeros((len(xs), len(ys), 4))
    valid = np.zeros((len(xs), len(ys)), dtype=np.bool_)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            try:
                f, g = chart.heights(float(x), float(y))
            except DomainError:
                continue
            points[i, j] = (x, y, f, g)
            valid[i, j] = True
    return _obj(chart.name, points, valid, config.project)


def cmd_sample(config: RunConfig) -> ExitCode:
    match config.resolved:
        case ConformalPatch():
            text = _sample_patch(config, config.resolved)
        case _:
            text = _sample_chart(config, config.chart)
    _emit(config, text)
    return ExitCode.OK


def cmd_list(config: RunConfig) -> ExitCode:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command":        "list",
        "entries":        [entry.data for entry in registry.entries()],
    }
    _emit(config, dumps(payload))
    return ExitCode.OK


# entry point

def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = RunConfig.from_arguments(argv)
    except OssermanError as error:
        return _fail(error, ExitCode.USAGE)

    _configure_logging(config.verbosity)
    __log__.debug(DeferredMessage(json.dumps, {"command": config.command, "key": config.key}, indent=4))

    try:
        match config.command:
            case "verify":
                code = cmd_verify(config)
            case "sample":
                code = cmd_sample(config)
            case "potential":
                code = cmd_potential(config)
            case "gauss":
                code = cmd_gauss(config)
            case "curvature":
                code = cmd_curvature(config)
            case "solve":
                code = cmd_solve(config)
            case "list":
                code = cmd_list(config)
            case command:
                raise UsageError(f"Unknown command '{command}'.")
    except NonSimplyConnectedDomain as error:
        __log__.error(f"Command '{config.command}' failed a path independence check. {error}")
        return _fail(error, ExitCode.CHECK_FAILED)
    except OssermanError as error:
        __log__.error(f"Command '{config.command}' failed. {error}")
        return _fail(error, ExitCode.USAGE)
    except Exception as error:
        __log__.exception(f"Command '{config.command}' raised an unexpected error.")
        return _fail(error, ExitCode.USAGE, ExceptionSeverity.FATAL)

    return int(code)
