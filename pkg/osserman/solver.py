"""
Discrete area minimisation for graphs ``(x, y, f, g)`` with Dirichlet boundary data.

The area is integrated exactly for the bilinear (Q1) interpolant of the nodal values with a 2×2
Gauss rule per cell, and :func:`area_gradient` is the exact derivative of that discrete functional.
:func:`solve` runs steepest descent with Armijo backtracking, either in the Euclidean metric of the
nodal values or preconditioned by the discrete Dirichlet form (the H¹ Riesz map), which makes the
iteration count independent of the mesh size.
"""

from __future__ import annotations

import json
import logging
import math
import time
from collections.abc import Callable
from pathlib import Path

import numpy as np
import numpy.typing as npt
import scipy.sparse as sp
from scipy.interpolate import RectBivariateSpline
from scipy.sparse.linalg import factorized

from ._utilities import DeferredMessage, dumps
from .enums import StepRule
from .exceptions import GridFileError
from .jets import Jet2
from .objects.chart import Chart, Domain
from .objects.grid import GridField
from .objects.reports import SolveReport


__all__ = [
    "discrete_area",
    "area_gradient",
    "cell_omega",
    "solve",
    "max_nodal_error",
    "interpolate",
    "read_grid",
    "write_grid",
]

__log__: logging.Logger = logging.getLogger("osserman.solver")


type FloatArray = npt.NDArray[np.float64]
type CellGradients = tuple[FloatArray, FloatArray, FloatArray, FloatArray]

_GAUSS: tuple[float, float] = (0.5 - 0.5 / math.sqrt(3.0), 0.5 + 0.5 / math.sqrt(3.0))
_ARMIJO: float = 1e-4
_MAX_HALVINGS: int = 60


# discrete functional

def _cell_gradients(f: FloatArray, g: FloatArray, hx: float, hy: float) -> CellGradients:
    # (fx, fy, gx, gy) at the four Gauss points of every cell, stacked on axis 0
    def gradients(u: FloatArray) -> tuple[FloatArray, FloatArray]:
        u00, u10, u01, u11 = u[:-1, :-1], u[1:, :-1], u[:-1, 1:], u[1:, 1:]
        ux = [((u10 - u00) * (1.0 - eta) + (u11 - u01) * eta) / hx for _ in _GAUSS for eta in _GAUSS]
        uy = [((u01 - u00) * (1.0 - xi) + (u11 - u10) * xi) / hy for xi in _GAUSS for _ in _GAUSS]
        return np.stack(ux), np.stack(uy)

    fx, fy = gradients(f)
    gx, gy = gradients(g)
    return fx, fy, gx, gy


def _omega(fx: FloatArray, fy: FloatArray, gx: FloatArray, gy: FloatArray) -> FloatArray:
    jacobian = fx * gy - fy * gx
    return np.sqrt(1.0 + fx * fx + fy * fy + gx * gx + gy * gy + jacobian * jacobian)


def _weight(grid: GridField) -> float:
    return 0.25 * grid.hx * grid.hy


def discrete_area(grid: GridField) -> float:
    omega = _omega(*_cell_gradients(grid.f, grid.g, grid.hx, grid.hy))
    return _weight(grid) * math.fsum(omega.ravel())


def cell_omega(grid: GridField) -> FloatArray:
    """Area element averaged over the Gauss points of each cell, shape ``(nx - 1, ny - 1)``."""
    return _omega(*_cell_gradients(grid.f, grid.g, grid.hx, grid.hy)).mean(axis=0)


def _full_gradient(grid: GridField) -> tuple[FloatArray, FloatArray]:
    fx, fy, gx, gy = _cell_gradients(grid.f, grid.g, grid.hx, grid.hy)
    omega = _omega(fx, fy, gx, gy)
    jacobian = fx * gy - fy * gx
    w = _weight(grid)
    # derivatives of ω with respect to the four first partials
    d_fx = w * (fx + jacobian * gy) / omega / grid.hx
    d_fy = w * (fy - jacobian * gx) / omega / grid.hy
    d_gx = w * (gx - jacobian * fy) / omega / grid.hx
    d_gy = w * (gy + jacobian * fx) / omega / grid.hy

    def scatter(ax: FloatArray, ay: FloatArray) -> FloatArray:
        out = np.zeros((grid.nx, grid.ny))
        k = 0
        for xi in _GAUSS:
            for eta in _GAUSS:
                cx, cy = ax[k], ay[k]
                out[:-1, :-1] += -(1.0 - eta) * cx - (1.0 - xi) * cy
                out[1:, :-1] += (1.0 - eta) * cx - xi * cy
                out[:-1, 1:] += -eta * cx + (1.0 - xi) * cy
                out[1:, 1:] += eta * cx + xi * cy
                k += 1
        return out

    return scatter(d_fx, d_fy), scatter(d_gx, d_gy)


def area_gradient(grid: GridField) -> FloatArray:
    """
    Exact gradient of :func:`discrete_area` with respect to the free nodal values, as an
    ``(n_free, 2)`` array of ``(∂A/∂f, ∂A/∂g)`` in row-major node order.
    """
    df, dg = _full_gradient(grid)
    free = grid.free_mask
    return np.column_stack([df[free], dg[free]])


def _area_change(base: CellGradients, step: CellGradients, weight: float) -> float:
    # A(u + δ) − A(u) without subtracting two nearly equal areas
    fx, fy, gx, gy = base
    dfx, dfy, dgx, dgy = step
    jacobian = fx * gy - fy * gx
    d_jacobian = dfx * gy + fx * dgy + dfx * dgy - dfy * gx - fy * dgx - dfy * dgx
    d_square = (
        dfx * (2.0 * fx + dfx) + dfy * (2.0 * fy + dfy) + dgx * (2.0 * gx + dgx) + dgy * (2.0 * gy + dgy)
        + d_jacobian * (2.0 * jacobian + d_jacobian)
    )
    omega = _omega(fx, fy, gx, gy)
    updated = np.sqrt(omega * omega + d_square)
    return weight * math.fsum((d_square / (updated + omega)).ravel())


# preconditioner

def _stiffness(grid: GridField) -> sp.csc_matrix:
    def one_dimensional(n: int, h: float) -> tuple[sp.csr_matrix, sp.csr_matrix]:
        k_main, m_main = np.full(n, 2.0), np.full(n, 4.0)
        k_main[[0, -1]], m_main[[0, -1]] = 1.0, 2.0
        ones = np.ones(n - 1)
        stiffness = sp.diags([-ones, k_main, -ones], [-1, 0, 1], format="csr") / h
        mass = sp.diags([ones, m_main, ones], [-1, 0, 1], format="csr") * (h / 6.0)
        return stiffness, mass

    kx, mx = one_dimensional(grid.nx, grid.hx)
    ky, my = one_dimensional(grid.ny, grid.hy)
    stiffness = (sp.kron(kx, my) + sp.kron(mx, ky)).tocsr()
    free = np.flatnonzero(grid.free_mask.ravel())
    return stiffness[free][:, free].tocsc()


def _stiffness_solver(grid: GridField) -> Callable[[FloatArray], FloatArray]:
    return factorized(_stiffness(grid))


# solver

def solve(
    grid: GridField,
    *,
    max_iter: int = 500,
    tol: float = 1e-8,
    step_rule: StepRule = StepRule.SOBOLEV,
    warm_start: bool = False,
) -> SolveReport:
    """
    Minimises :func:`discrete_area` over the free nodes of ``grid``, in place.

    Unless ``warm_start`` is set the free nodes are first replaced by the transfinite interpolant of
    the boundary. Iteration stops once the sup norm of the area gradient divided by the cell area
    ``hx·hy`` is at most ``tol``, after ``max_iter`` steps, or when the line search cannot find a
    decrease. A non-finite area stops the run and is reported rather than raised.
    """
    if max_iter < 0:
        raise ValueError("'max_iter' must be more than or equal to 0.")
    if tol <= 0.0:
        raise ValueError("'tol' must be more than 0.0.")

    started = time.perf_counter()
    if not warm_start:
        grid.set_free(grid.transfinite().free_values())

    free = grid.free_mask
    count = int(free.sum())
    scale = grid.hx * grid.hy
    weight = _weight(grid)
    solve_preconditioner = _stiffness_solver(grid) if step_rule is StepRule.SOBOLEV else None

    area = discrete_area(grid)
    history = [area]
    iterations, step, converged = 0, 1.0, False
    message = "maximum number of iterations reached"
    gradient_norm = math.inf

    __log__.info(
        f"Grid {grid.nx}x{grid.ny} for chart '{grid.chart}' solving with step rule '{step_rule.value}', "
        f"{count} free nodes, initial area {area}."
    )

    while True:
        if not math.isfinite(area):
            message = "non-finite area encountered"
            break
        df, dg = _full_gradient(grid)
        gradient = np.concatenate([df[free], dg[free]])
        gradient_norm = float(np.max(np.abs(gradient))) / scale if count else 0.0
        if gradient_norm <= tol:
            converged, message = True, "gradient tolerance reached"
            break
        if iterations >= max_iter:
            break

        if solve_preconditioner is not None:
            direction = -np.concatenate(
                [solve_preconditioner(gradient[:count]), solve_preconditioner(gradient[count:])]
            )
        else:
            direction = -gradient
        slope = float(gradient @ direction)
        if not slope < 0.0:
            message = "search direction is not a descent direction"
            break

        d_full_f, d_full_g = np.zeros((grid.nx, grid.ny)), np.zeros((grid.nx, grid.ny))
        d_full_f[free], d_full_g[free] = direction[:count], direction[count:]
        base = _cell_gradients(grid.f, grid.g, grid.hx, grid.hy)
        unit = _cell_gradients(d_full_f, d_full_g, grid.hx, grid.hy)

        step = min(2.0 * step, 8.0) if iterations else 1.0
        change = math.nan
        for _ in range(_MAX_HALVINGS):
            change = _area_change(base, (unit[0] * step, unit[1] * step, unit[2] * step, unit[3] * step), weight)
            if math.isfinite(change) and change <= _ARMIJO * step * slope:
                break
            step *= 0.5
        else:
            message = "line search could not decrease the area"
            break

        grid.set_free(grid.free_values() + step * direction)
        area += change
        history.append(area)
        iterations += 1
        __log__.debug(f"Grid iteration {iterations}: area={area}, step={step}, gradient={gradient_norm}.")

    report = SolveReport(
        iterations=iterations,
        final_area=area,
        final_gradient_norm=gradient_norm,
        converged=converged,
        wall_time=time.perf_counter() - started,
        step_rule=step_rule,
        message=message,
        area_history=history,
    )
    __log__.info(
        f"Grid {grid.nx}x{grid.ny} for chart '{grid.chart}' stopped after {iterations} iterations "
        f"in {report.wall_time:.3f}s: {message}."
    )
    __log__.debug(DeferredMessage(json.dumps, report.data, indent=4))
    return report


def max_nodal_error(grid: GridField, chart: Chart) -> float:
    exact = GridField.from_chart(chart, grid.box, grid.nx, grid.ny)
    return float(max(np.max(np.abs(grid.f - exact.f)), np.max(np.abs(grid.g - exact.g))))


def interpolate(grid: GridField, *, name: str | None = None) -> Chart:
    """Bicubic spline chart through the nodal values of ``grid``."""
    spline_f = RectBivariateSpline(grid.x, grid.y, grid.f, kx=3, ky=3)
    spline_g = RectBivariateSpline(grid.x, grid.y, grid.g, kx=3, ky=3)

    def jet(spline: RectBivariateSpline, x: float, y: float) -> Jet2:
        return Jet2(
            float(spline.ev(x, y)),
            float(spline.ev(x, y, dx=1)),
            float(spline.ev(x, y, dy=1)),
            float(spline.ev(x, y, dx=2)),
            float(spline.ev(x, y, dx=1, dy=1)),
            float(spline.ev(x, y, dy=2)),
        )

    x0, x1, y0, y1 = grid.box
    domain = Domain(
        "grid box",
        [lambda X, Y: X - x0, lambda X, Y: x1 - X, lambda X, Y: Y - y0, lambda X, Y: y1 - Y],
        bounds=grid.box,
        sample_margin=min(grid.hx, grid.hy),
    )
    return Chart(
        name or f"{grid.chart or 'grid'}~interpolated",
        domain,
        lambda x, y: (jet(spline_f, x, y), jet(spline_g, x, y)),
        description="bicubic interpolant of a solved grid",
    )


# files

def write_grid(grid: GridField, path: str | Path) -> None:
    """
    Writes ``grid`` as CSV (``x,y,f,g`` rows, boundary taken to be the outer ring on reading) or as
    JSON (metadata plus row-major arrays) depending on the file suffix.
    """
    path = Path(path)
    match path.suffix.lower():
        case ".csv":
            X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
            rows = np.column_stack([X.ravel(), Y.ravel(), grid.f.ravel(), grid.g.ravel()])
            np.savetxt(path, rows, delimiter=",", header="x,y,f,g", comments="", fmt="%.17g")
        case ".json":
            path.write_text(dumps(grid.data))
        case suffix:
            raise GridFileError(f"Grid files must end in '.csv' or '.json', got '{suffix}'.")


def read_grid(path: str | Path, *, chart: str | None = None) -> GridField:
    path = Path(path)
    try:
        match path.suffix.lower():
            case ".csv":
                rows = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
                if rows.shape[1] != 4:
                    raise GridFileError(f"Grid file '{path}' must have the four columns x,y,f,g.")
                xs, ys = np.unique(rows[:, 0]), np.unique(rows[:, 1])
                if len(rows) != len(xs) * len(ys):
                    raise GridFileError(f"Grid file '{path}' does not describe a complete lattice.")
                order = np.lexsort((rows[:, 1], rows[:, 0]))
                f = rows[order, 2].reshape(len(xs), len(ys))
                g = rows[order, 3].reshape(len(xs), len(ys))
                return GridField(xs, ys, f, g, chart=chart)
            case ".json":
                data = json.loads(path.read_text())
                if chart is not None:
                    data["chart"] = chart
                return GridField.from_data(data)
            case suffix:
                raise GridFileError(f"Grid files must end in '.csv' or '.json', got '{suffix}'.")
    except (OSError, KeyError, TypeError, ValueError) as error:
        raise GridFileError(f"Grid file '{path}' could not be read: {error}") from error
