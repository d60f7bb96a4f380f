"""
Special Lagrangian 3-folds in C³ = R⁶ built from a minimal graph and its Lagrange potential.

For a minimal graph ``p`` with potential ``q`` the function ``F(x, y, z) = z·p(x, y) + λ·q(x, y)`` is
affine in ``z`` and solves ``det Hess F = tr Hess F``, so the gradient graph
``(x, y, z, F_x, F_y, F_z)`` is a special Lagrangian 3-fold ruled by the lines ``z ↦ (x, y, z)``.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from .exceptions import DomainError
from .jets import Jet2, Jet3
from .lagrange import lagrange_one_form
from .objects.chart import Chart
from .objects.potential import PotentialField


__all__ = [
    "sle3_residual",
    "hl_potential",
    "hl_system_residual",
    "sl_graph_point",
    "ruling_direction",
    "doubly_periodic_sl",
]


type Vector6 = npt.NDArray[np.float64]
type PotentialEvaluator = Callable[[float, float, float], Jet3]
type GraphEvaluator = Callable[[float, float, float], Vector6]


def sle3_residual(jF: Jet3) -> float:
    return jF.determinant() - jF.trace()


def hl_potential(p_chart: Chart, q_field: PotentialField, lam: float) -> PotentialEvaluator:
    """
    Returns an evaluator of the jets of ``F = z·p + λ·q``. By construction ``F_zz = 0``,
    ``F_xz = p_x``, ``F_yz = p_y`` and ``F_z = p``.
    """

    def evaluate(x: float, y: float, z: float) -> Jet3:
        jp = p_chart.f_jet(x, y)
        jq = q_field.jet(x, y)
        return Jet3(
            z * jp.value + lam * jq.value,
            z * jp.dx + lam * jq.dx,
            z * jp.dy + lam * jq.dy,
            jp.value,
            z * jp.dxx + lam * jq.dxx,
            z * jp.dxy + lam * jq.dxy,
            jp.dx,
            z * jp.dyy + lam * jq.dyy,
            jp.dy,
            0.0,
        )

    return evaluate


def _minimal_operator(jp: Jet2, ju: Jet2) -> float:
    return (1.0 + jp.dy * jp.dy) * ju.dxx - 2.0 * jp.dx * jp.dy * ju.dxy + (1.0 + jp.dx * jp.dx) * ju.dyy


def hl_system_residual(jp: Jet2, jq: Jet2, lam: float) -> tuple[float, float]:
    """
    Applies ``(1 + p_y²)∂xx − 2 p_x p_y ∂xy + (1 + p_x²)∂yy`` to ``p`` and to ``λ·q``; both vanish
    exactly when ``F = z·p + λ·q`` is special Lagrangian.
    """
    return _minimal_operator(jp, jp), lam * _minimal_operator(jp, jq)


def sl_graph_point(
    p_chart: Chart,
    q_field: PotentialField,
    lam: float,
    x: float,
    y: float,
    z: float,
) -> Vector6:
    """
    Returns ``(x, y, z, z p_x − λ p_y / W, z p_y + λ p_x / W, p)``, the gradient graph of
    :func:`hl_potential` with ``∇q`` replaced through the Lagrange system.
    """
    jp = p_chart.f_jet(x, y)
    # ∇q enters through the Lagrange system; q_field must still be defined at the point
    q_field.jet(x, y)
    qx, qy = lagrange_one_form(jp)
    return np.array([x, y, z, z * jp.dx + lam * qx, z * jp.dy + lam * qy, jp.value], dtype=np.float64)


def ruling_direction(p_chart: Chart, x: float, y: float) -> Vector6:
    jp = p_chart.f_jet(x, y)
    return np.array([0.0, 0.0, 1.0, jp.dx, jp.dy, 0.0], dtype=np.float64)


def doubly_periodic_sl(lam: float) -> GraphEvaluator:
    """
    The special Lagrangian graph over the Scherk square ``|x|, |y| < π/2``:
    ``(x, y, z, A, B, C)`` with ``D = √(1 − sin²x sin²y)`` and

    - ``A = −z tan x − λ cos x sin y / D``
    - ``B = z tan y − λ sin x cos y / D``
    - ``C = ln(cos x / cos y)``
    """

    def evaluate(x: float, y: float, z: float) -> Vector6:
        if not (abs(x) < math.pi / 2.0 and abs(y) < math.pi / 2.0):
            raise DomainError(
                f"Point ({x}, {y}) lies outside the Scherk square |x|, |y| < π/2.",
                chart="doubly_periodic_sl",
                point=(x, y),
            )
        sx, cx, sy, cy = math.sin(x), math.cos(x), math.sin(y), math.cos(y)
        d = math.sqrt(1.0 - sx * sx * sy * sy)
        return np.array(
            [
                x,
                y,
                z,
                -z * sx / cx - lam * cx * sy / d,
                z * sy / cy - lam * sx * cy / d,
                math.log(cx / cy),
            ],
            dtype=np.float64,
        )

    return evaluate
