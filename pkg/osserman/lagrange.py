from __future__ import annotations

import json
import logging
import math

import numpy as np
import numpy.typing as npt

from ._utilities import DeferredMessage, composite_gauss_legendre, gauss_legendre
from .exceptions import DomainError, GradientEstimateViolated, NonSimplyConnectedDomain, PathExitsDomain
from .jets import Jet2
from .objects.chart import Chart
from .objects.potential import PotentialField, PotentialTrace
from .types.common import Box, Point


__all__ = [
    "lagrange_one_form",
    "conjugate_residual",
    "gradient_estimate",
    "trace_potential",
    "integrate_potential",
    "integrate_potential_field",
    "maximal_equation_residual",
    "deform",
    "omega_closed_form",
]

__log__: logging.Logger = logging.getLogger("osserman.lagrange")


def _w(jp: Jet2) -> float:
    return math.sqrt(1.0 + jp.dx * jp.dx + jp.dy * jp.dy)


def lagrange_one_form(jp: Jet2) -> tuple[float, float]:
    w = _w(jp)
    return -jp.dy / w, jp.dx / w


def conjugate_residual(jp: Jet2, jq: Jet2) -> tuple[float, float]:
    qx, qy = lagrange_one_form(jp)
    return jq.dx - qx, jq.dy - qy


def gradient_estimate(jq: Jet2) -> float:
    return jq.dx * jq.dx + jq.dy * jq.dy


def maximal_equation_residual(jq: Jet2) -> float:
    """
    Returns ``(1 − q_y²) q_xx + 2 q_x q_y q_xy + (1 − q_x²) q_yy``.

    Raises
    ------
    GradientEstimateViolated
        ``q_x² + q_y² >= 1``, so the graph of ``q`` is not spacelike.
    """
    if (norm := gradient_estimate(jq)) >= 1.0:
        raise GradientEstimateViolated(f"'q' must satisfy q_x² + q_y² < 1, got {norm}.")
    qx, qy = jq.dx, jq.dy
    return (1.0 - qy * qy) * jq.dxx + 2.0 * qx * qy * jq.dxy + (1.0 - qx * qx) * jq.dyy


# integration

def _leg(
    chart: Chart,
    start: Point,
    end: Point,
    panels: int,
) -> float:
    # integrates the one-form along an axis-aligned segment
    (x0, y0), (x1, y1) = start, end
    along_x = y0 == y1
    a, b = (x0, x1) if along_x else (y0, y1)
    if a == b:
        return 0.0
    nodes, weights = composite_gauss_legendre(a, b, panels)
    values = np.empty_like(nodes)
    for k, t in enumerate(nodes):
        x, y = (float(t), y0) if along_x else (x0, float(t))
        qx, qy = lagrange_one_form(chart.f_jet(x, y))
        values[k] = qx if along_x else qy
    return math.fsum(weights * values)


def _check_leg(chart: Chart, start: Point, end: Point, grid_step: float) -> None:
    """
    Walks the segment from ``start`` to ``end`` and raises :exc:`PathExitsDomain` at the first point
    outside the chart's domain.

    Steps are at most ``grid_step / 4`` and at most half the local domain margin, so excluded regions
    narrower than the stride (punctures, thin slits) are still caught. The margin is a first-order
    distance estimate; points closer than ``1e-4 · grid_step`` to the boundary count as outside.
    """
    (x0, y0), (x1, y1) = start, end
    length = math.hypot(x1 - x0, y1 - y0)
    floor = 1e-4 * grid_step
    t = 0.0
    while True:
        x, y = x0 + t * (x1 - x0), y0 + t * (y1 - y0)
        if not (margin := chart.margin(x, y)) > floor:
            raise PathExitsDomain(
                f"The staircase from {start} to {end} leaves the domain of chart '{chart.name}' near ({x}, {y}).",
                chart=chart.name,
                point=(x, y),
            )
        if t >= 1.0 or length == 0.0:
            return
        t = min(1.0, t + min(0.25 * grid_step, 0.5 * margin) / length)


def _staircase(
    chart: Chart,
    basepoint: Point,
    target: Point,
    grid_step: float,
    *,
    x_first: bool,
) -> tuple[float, float]:
    corner = (target[0], basepoint[1]) if x_first else (basepoint[0], target[1])
    legs = [(basepoint, corner), (corner, target)]
    for start, end in legs:
        _check_leg(chart, start, end, grid_step)

    coarse, fine = 0.0, 0.0
    for start, end in legs:
        length = math.hypot(end[0] - start[0], end[1] - start[1])
        panels = max(1, math.ceil(length / grid_step))
        try:
            coarse += _leg(chart, start, end, panels)
            fine += _leg(chart, start, end, 2 * panels)
        except DomainError as error:
            raise PathExitsDomain(str(error), chart=chart.name, point=error.point) from error
    return fine, abs(fine - coarse)


def trace_potential(
    p_chart: Chart,
    basepoint: Point,
    target: Point,
    grid_step: float = 0.05,
    *,
    tol: float = 1e-8,
) -> PotentialTrace:
    """
    Integrates the Lagrange one-form of ``p_chart`` from ``basepoint`` to ``target`` along both
    axis-aligned staircases (x-leg first, and y-leg first).

    Each leg uses composite 8-point Gauss–Legendre quadrature with panels of length at most
    ``grid_step``; the quadrature error is estimated by halving the panels.

    When only the y-first staircase leaves the domain the trace keeps ``y_first=None`` and
    :attr:`PotentialTrace.path_independence_checked` is ``False``.

    Raises
    ------
    PathExitsDomain
        The x-first staircase leaves the chart's domain.
    NonSimplyConnectedDomain
        The two staircases disagree by more than ``tol``.
    """
    if grid_step <= 0.0:
        raise ValueError("'grid_step' must be more than 0.0.")

    x_first, x_error = _staircase(p_chart, basepoint, target, grid_step, x_first=True)
    try:
        y_first, y_error = _staircase(p_chart, basepoint, target, grid_step, x_first=False)
    except PathExitsDomain as error:
        __log__.warning(
            f"Chart '{p_chart.name}' y-first staircase from {basepoint} to {target} leaves the domain, "
            f"path independence was not checked. {error}"
        )
        y_first, y_error = None, 0.0

    if y_first is not None and abs(x_first - y_first) > max(tol, 10.0 * (x_error + y_error)):
        raise NonSimplyConnectedDomain(chart=p_chart.name, x_first=x_first, y_first=y_first)

    jq = lagrange_one_form(p_chart.f_jet(*target))
    trace = PotentialTrace(
        chart=p_chart.name,
        basepoint=basepoint,
        target=target,
        x_first=x_first,
        y_first=y_first,
        quadrature_error=max(x_error, y_error),
        gradient_norm=math.hypot(*jq),
    )
    __log__.debug(DeferredMessage(json.dumps, trace.data, indent=4))
    return trace


def integrate_potential(
    p_chart: Chart,
    basepoint: Point,
    target: Point,
    grid_step: float = 0.05,
    *,
    tol: float = 1e-8,
) -> float:
    return trace_potential(p_chart, basepoint, target, grid_step, tol=tol).value


def integrate_potential_field(
    p_chart: Chart,
    box: Box,
    grid_step: float = 0.05,
    *,
    basepoint: Point | None = None,
) -> PotentialField:
    """
    Integrates the potential of ``p_chart`` at every node of a lattice covering ``box`` and returns
    the bicubic interpolant, pinned to vanish at ``basepoint`` (default: the lower left corner).
    """
    x0, x1, y0, y1 = box
    nx = max(4, math.ceil((x1 - x0) / grid_step) + 1)
    ny = max(4, math.ceil((y1 - y0) / grid_step) + 1)
    xs, ys = np.linspace(x0, x1, nx), np.linspace(y0, y1, ny)
    for x in xs:
        for y in ys:
            if not p_chart.contains(float(x), float(y)):
                raise PathExitsDomain(
                    f"The box {box} is not contained in the domain of chart '{p_chart.name}'.",
                    chart=p_chart.name,
                    point=(float(x), float(y)),
                )

    def segment(a: float, b: float, fixed: float, *, along_x: bool) -> float:
        nodes, weights = gauss_legendre(a, b, 8)
        values = [
            lagrange_one_form(p_chart.f_jet(float(t), fixed))[0] if along_x
            else lagrange_one_form(p_chart.f_jet(fixed, float(t)))[1]
            for t in nodes
        ]
        return math.fsum(weights * np.array(values))

    values: npt.NDArray[np.float64] = np.zeros((nx, ny))
    bottom = [segment(float(xs[i]), float(xs[i + 1]), float(ys[0]), along_x=True) for i in range(nx - 1)]
    values[1:, 0] = np.cumsum(bottom)
    for i, x in enumerate(xs):
        column = [segment(float(ys[j]), float(ys[j + 1]), float(x), along_x=False) for j in range(ny - 1)]
        values[i, 1:] = values[i, 0] + np.cumsum(column)

    __log__.info(f"Chart '{p_chart.name}' potential integrated on a {nx}x{ny} lattice over {box}.")
    return PotentialField.from_grid(p_chart.name, xs, ys, values, basepoint=basepoint or (x0, y0))


# deformation

def deform(
    p_chart: Chart,
    q_field: PotentialField,
    lam: float,
    *,
    name: str | None = None,
    description: str = "",
) -> Chart:
    """
    Returns the graph ``(cosh λ · p, sinh λ · q)``, which satisfies the Osserman system with
    ``μ = coth λ``. At ``λ = 0`` this is the original graph of ``p`` with ``g = 0``.
    """
    if not math.isfinite(lam):
        raise ValueError("'lam' must be finite.")
    c, s = math.cosh(lam), math.sinh(lam)

    def evaluate(x: float, y: float) -> tuple[Jet2, Jet2]:
        jp = p_chart.f_jet(x, y)
        if lam == 0.0:
            return jp, Jet2(0.0)
        return jp * c, q_field.jet(x, y) * s

    return Chart(
        name or f"{p_chart.name}~deform(lambda={lam})",
        p_chart.domain,
        evaluate,
        mu=None if lam == 0.0 else c / s,
        base=p_chart,
        hypersurface=lam == 0.0,
        description=description or p_chart.description,
    )


def omega_closed_form(jp: Jet2, lam: float) -> float:
    w = _w(jp)
    return math.cosh(lam) ** 2 * w - math.sinh(lam) ** 2 / w
