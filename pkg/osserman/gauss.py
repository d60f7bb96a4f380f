from __future__ import annotations

import json
import logging
import math
from collections.abc import Sequence

import numpy as np

from ._utilities import DeferredMessage
from .exceptions import InsufficientSamples, ParameterError
from .geometry import fundamental_form
from .jets import Jet2
from .objects.chart import Chart
from .objects.projective import Hyperplane, ProjectivePoint
from .types.common import Point


__all__ = [
    "osserman_residual",
    "complexified_residual",
    "gauss_map",
    "hyperquadric_residual",
    "hyperplane_residual",
    "fit_hyperplane",
    "is_degenerate",
    "cauchy_riemann_residual",
    "sample_gauss_map",
]

__log__: logging.Logger = logging.getLogger("osserman.gauss")


def _require_mu(mu: float) -> None:
    if mu == 0.0 or not math.isfinite(mu):
        raise ParameterError("'mu' must be finite and not equal to 0.")


def _apply_metric(jf: Jet2, jg: Jet2, a: float, b: float) -> tuple[float, float]:
    e, f, g = fundamental_form(jf, jg).conformal_ratio()
    return e * a + f * b, f * a + g * b


def osserman_residual(jf: Jet2, jg: Jet2, mu: float) -> tuple[float, float]:
    """
    Returns ``(f_x, f_y) − μ·M·(g_y, −g_x)`` where ``M`` is the metric divided by the area element.
    """
    _require_mu(mu)
    mx, my = _apply_metric(jf, jg, jg.dy, -jg.dx)
    return jf.dx - mu * mx, jf.dy - mu * my


def _dual_osserman_residual(jf: Jet2, jg: Jet2, mu: float) -> tuple[float, float]:
    # the same system solved for the gradient of g; it equals (1/μ)·M·R applied to the
    # primary residual, with R the quarter turn (a, b) -> (b, -a)
    _require_mu(mu)
    mx, my = _apply_metric(jf, jg, jf.dy, -jf.dx)
    return jg.dx + mx / mu, jg.dy + my / mu


def complexified_residual(jf: Jet2, jg: Jet2, mu: float) -> complex:
    """
    Returns ``(G/ω) f_x + (i − F/ω) f_y + iμ [(G/ω) g_x + (i − F/ω) g_y]``, which vanishes exactly
    when the Gauss map lies on the hyperplane ``z3 + iμ z4 = 0``.
    """
    _require_mu(mu)
    _, f, g = fundamental_form(jf, jg).conformal_ratio()
    z3 = g * jf.dx + (1j - f) * jf.dy
    z4 = g * jg.dx + (1j - f) * jg.dy
    return z3 + 1j * mu * z4


def gauss_map(jf: Jet2, jg: Jet2) -> ProjectivePoint:
    _, f, g = fundamental_form(jf, jg).conformal_ratio()
    z1 = complex(g, 0.0)
    z2 = 1j - f
    return ProjectivePoint(z1, z2, z1 * jf.dx + z2 * jf.dy, z1 * jg.dx + z2 * jg.dy)


def _gauss_map_second_representative(jf: Jet2, jg: Jet2) -> ProjectivePoint:
    e, f, _ = fundamental_form(jf, jg).conformal_ratio()
    z1 = 1.0 - 1j * f
    z2 = 1j * e
    return ProjectivePoint(z1, z2, z1 * jf.dx + z2 * jf.dy, z1 * jg.dx + z2 * jg.dy)


def hyperquadric_residual(point: ProjectivePoint) -> float:
    return abs(point.quadric())


def hyperplane_residual(point: ProjectivePoint, hyperplane: Hyperplane) -> float:
    return abs(hyperplane.evaluate(point))


def fit_hyperplane(samples: Sequence[ProjectivePoint]) -> tuple[Hyperplane, float]:
    """
    Fits the hyperplane closest to containing every sample.

    The coefficients are the right singular vector of the ``N × 4`` sample matrix belonging to its
    smallest singular value, and that singular value is returned as the fit residual.

    Raises
    ------
    InsufficientSamples
        Fewer than 4 samples were given.
    """
    if len(samples) < 4:
        raise InsufficientSamples(f"'samples' must contain at least 4 points, got {len(samples)}.")

    matrix = np.array([point.coordinates for point in samples], dtype=np.complex128)
    _, singular_values, vh = np.linalg.svd(matrix, full_matrices=False)
    residual = float(singular_values[-1])
    # coefficients at noise level must not pick the phase
    hyperplane = Hyperplane(*np.conj(vh[-1]), atol=1e-9)

    __log__.debug(
        DeferredMessage(
            json.dumps,
            {"samples": len(samples), "singular_values": singular_values.tolist(), "hyperplane": hyperplane.data},
            indent=4,
        )
    )
    return hyperplane, residual


def is_degenerate(residual: float, samples: int) -> bool:
    return residual <= 1e-6 * math.sqrt(samples)


def cauchy_riemann_residual(chart: Chart, jA: Jet2, jB: Jet2, point: Point) -> tuple[float, float]:
    """
    Returns ``(A_x, A_y) − M·(B_y, −B_x)`` with ``M`` taken from ``chart`` at ``point``; it vanishes
    when ``A + iB`` is holomorphic on the surface.
    """
    jf, jg = chart.evaluate(*point)
    mx, my = _apply_metric(jf, jg, jB.dy, -jB.dx)
    return jA.dx - mx, jA.dy - my


def sample_gauss_map(chart: Chart, points: Sequence[Point]) -> list[ProjectivePoint]:
    return [gauss_map(*chart.evaluate(x, y)) for x, y in points]
