"""
Induced metric and second-order operators of a graph ``(x, y, f, g)`` in R⁴.

Pointwise quantities are computed from exact :class:`~osserman.jets.Jet2` data. Quantities that need
derivatives of the metric itself (``P``, ``Q``, the mean curvature vector and the Laplace–Beltrami
operator) central-difference the exact first-order data of a :class:`~osserman.objects.Chart` with a
caller supplied step.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from .jets import Jet2, finite_difference_jet
from .objects.chart import Chart
from .objects.forms import FundamentalForm
from .types.common import Point


__all__ = [
    "fundamental_form",
    "minimal_surface_operator",
    "mss_residual",
    "conformal_ratio",
    "metric_divergence",
    "mean_curvature_vector",
    "divergence_identities_residual",
    "laplace_beltrami",
    "chart_finite_difference_jets",
    "finite_difference_jet",
]


def fundamental_form(jf: Jet2, jg: Jet2) -> FundamentalForm:
    E = 1.0 + jf.dx * jf.dx + jg.dx * jg.dx
    F = jf.dx * jf.dy + jg.dx * jg.dy
    G = 1.0 + jf.dy * jf.dy + jg.dy * jg.dy
    # EG - F² expanded; every term is a square so there is no cancellation
    jacobian = jf.dx * jg.dy - jf.dy * jg.dx
    omega = math.sqrt(
        1.0 + jf.dx * jf.dx + jf.dy * jf.dy + jg.dx * jg.dx + jg.dy * jg.dy + jacobian * jacobian
    )
    return FundamentalForm(E, F, G, omega)


def minimal_surface_operator(form: FundamentalForm, ju: Jet2) -> float:
    return form.G * ju.dxx - 2.0 * form.F * ju.dxy + form.E * ju.dyy


def mss_residual(jf: Jet2, jg: Jet2) -> tuple[float, float]:
    form = fundamental_form(jf, jg)
    return minimal_surface_operator(form, jf), minimal_surface_operator(form, jg)


def conformal_ratio(jf: Jet2, jg: Jet2) -> tuple[float, float, float]:
    return fundamental_form(jf, jg).conformal_ratio()


# finite-difference operators

def _require_margin(chart: Chart, point: Point, fd_step: float) -> None:
    if fd_step <= 0.0:
        raise ValueError("'fd_step' must be more than 0.0.")
    chart.require_margin(point[0], point[1], 2.0 * fd_step)


def _ratio_at(chart: Chart, x: float, y: float) -> tuple[float, float, float]:
    return conformal_ratio(*chart.evaluate(x, y))


def metric_divergence(chart: Chart, point: Point, fd_step: float) -> tuple[float, float]:
    """
    Returns ``P = ∂x(G/ω) − ∂y(F/ω)`` and ``Q = ∂y(E/ω) − ∂x(F/ω)`` by central differences.
    """
    _require_margin(chart, point, fd_step)
    x, y = point
    e_xp, f_xp, g_xp = _ratio_at(chart, x + fd_step, y)
    e_xm, f_xm, g_xm = _ratio_at(chart, x - fd_step, y)
    e_yp, f_yp, g_yp = _ratio_at(chart, x, y + fd_step)
    e_ym, f_ym, g_ym = _ratio_at(chart, x, y - fd_step)
    h2 = 2.0 * fd_step
    P = (g_xp - g_xm) / h2 - (f_yp - f_ym) / h2
    Q = (e_yp - e_ym) / h2 - (f_xp - f_xm) / h2
    return P, Q


def mean_curvature_vector(chart: Chart, point: Point, fd_step: float) -> npt.NDArray[np.float64]:
    P, Q = metric_divergence(chart, point, fd_step)
    jf, jg = chart.evaluate(*point)
    form = fundamental_form(jf, jg)
    omega = form.omega
    return np.array(
        [
            P,
            Q,
            P * jf.dx + Q * jf.dy + minimal_surface_operator(form, jf) / omega,
            P * jg.dx + Q * jg.dy + minimal_surface_operator(form, jg) / omega,
        ],
        dtype=np.float64,
    ) / omega


def divergence_identities_residual(chart: Chart, point: Point, fd_step: float) -> tuple[float, float]:
    P, Q = metric_divergence(chart, point, fd_step)
    return -P, Q


def laplace_beltrami(chart: Chart, point: Point, fd_step: float) -> tuple[float, float]:
    """
    Returns ``(Δ_Σ f, Δ_Σ g)`` where ``Δ_Σ u = L_Σ u / ω² + (P u_x + Q u_y) / ω``.

    On a minimal chart both the operator ``L_Σ`` and ``(P, Q)`` vanish, so both components vanish.
    """
    P, Q = metric_divergence(chart, point, fd_step)
    jf, jg = chart.evaluate(*point)
    form = fundamental_form(jf, jg)
    omega = form.omega
    return (
        minimal_surface_operator(form, jf) / (omega * omega) + (P * jf.dx + Q * jf.dy) / omega,
        minimal_surface_operator(form, jg) / (omega * omega) + (P * jg.dx + Q * jg.dy) / omega,
    )


def chart_finite_difference_jets(
    chart: Chart,
    x: float,
    y: float,
    *,
    step: float | None = None,
    second_step: float | None = None,
) -> tuple[Jet2, Jet2]:
    """
    Independent jets of ``chart`` at ``(x, y)`` built only from its height values.
    """
    jf = finite_difference_jet(lambda s, t: chart.heights(s, t)[0], x, y, step=step, second_step=second_step)
    jg = finite_difference_jet(lambda s, t: chart.heights(s, t)[1], x, y, step=step, second_step=second_step)
    return jf, jg
