"""
Closed-form minimal graphs and conformal patches.

Every chart below is written with :mod:`osserman.jets` arithmetic so its jets are exact. The R³
minimal graphs come paired with a closed-form Lagrange potential (see :class:`MinimalGraph`); the
λ-families are built from those pairs with :func:`osserman.lagrange.deform`.

Potentials here satisfy ``q_x = −p_y / W`` and ``q_y = p_x / W``. Several families are commonly
written with the opposite sign of ``q``, which is the mirror image ``g → −g`` of the same surface;
``printed=True`` returns that mirror image, whose Osserman coefficient is ``−coth λ``.
"""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Callable, Sequence
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ._utilities import DeferredMessage
from .enums import Branch
from .exceptions import DomainError, ParameterError
from .jets import Jet2, arccos, arcsin, arctan, arsinh, cos, cosh, log, sin, sinh, sqrt, tan, tanh
from .lagrange import deform
from .objects.chart import Chart, Domain
from .objects.patch import ConformalPatch
from .objects.potential import PotentialField
from .objects.reports import CurvatureReport, CurvatureRow, Ray, SingularityReport
from .types.common import Point


__all__ = [
    "MinimalGraph",
    "chart_key",
    "chebyshev_T",
    # charts
    "flat",
    "paraboloid_test",
    "holomorphic",
    "sigma_N",
    "sigma_alpha_beta",
    "catenoid_annulus",
    "helicoid",
    "catenoid",
    "scherk",
    "scherk_sheared",
    "saddle_tower",
    "saddle_tower_general",
    "helicoid_deform",
    "catenoid_deform",
    "scherk_doubly",
    "scherk_doubly_sheared",
    "scherk_tower",
    "scherk_tower_general",
    "lagrangian_scherk",
    "lagrangian_scherk_hessian",
    "monge_ampere_residual",
    # patches
    "patch_XN",
    "patch_F_minus",
    "patch_F_plus",
    "flat_patch",
    "conformality_defect",
    "harmonicity_defect",
    "gauss_curvature_conformal",
    "total_curvature",
    "curvature_table",
    # singularities
    "singularity_probe",
]

__log__: logging.Logger = logging.getLogger("osserman.catalog")

HALF_PI: float = math.pi / 2.0


class MinimalGraph(NamedTuple):
    """A minimal graph ``z = p(x, y)`` in R³ together with a closed-form Lagrange potential."""
    chart: Chart
    potential: PotentialField


def chart_key(name: str, **parameters: object) -> str:
    if not parameters:
        return name
    return f"{name}:" + ",".join(f"{key}={value}" for key, value in parameters.items())


def _require_lambda(lam: float) -> None:
    if not math.isfinite(lam):
        raise ParameterError("'lambda' must be finite.")


def _require_shear(rho: float, alpha: float) -> None:
    if not rho > 0.0:
        raise ParameterError("'rho' must be more than 0.0.")
    if not 0.0 < alpha < HALF_PI:
        raise ParameterError("'alpha' must be between 0.0 and π/2 (exclusive).")


# chebyshev polynomials

def chebyshev_T(N: int, zeta: float) -> float:
    """
    Evaluates the Chebyshev polynomial of the first kind with ``T_{k+2} = 2ζ T_{k+1} − T_k``.
    """
    if N < 0:
        raise ParameterError("'N' must be more than or equal to 0.")
    if N == 0:
        return 1.0
    previous, current = 1.0, float(zeta)
    for _ in range(N - 1):
        previous, current = current, 2.0 * zeta * current - previous
    return current


def _chebyshev_jet(N: int, zeta: Jet2) -> Jet2:
    if N == 0:
        return Jet2(1.0)
    previous, current = Jet2(1.0), zeta
    for _ in range(N - 1):
        previous, current = current, 2.0 * zeta * current - previous
    return current


def _complex_power(X: Jet2, Y: Jet2, N: int) -> tuple[Jet2, Jet2]:
    # real and imaginary parts of (x + iy)^N
    re, im = X, Y
    for _ in range(N - 1):
        re, im = re * X - im * Y, re * Y + im * X
    return re, im


# elementary charts

def flat() -> Chart:
    return Chart.from_formula(
        "flat",
        Domain("R²", bounds=(-1.0, 1.0, -1.0, 1.0)),
        lambda X, Y: (Jet2(0.0), Jet2(0.0)),
        hypersurface=True,
        description="coordinate plane",
    )


def paraboloid_test() -> Chart:
    return Chart.from_formula(
        "paraboloid_test",
        Domain("R²", bounds=(-1.0, 1.0, -1.0, 1.0)),
        lambda X, Y: (X * X + Y * Y, Jet2(0.0)),
        hypersurface=True,
        description="non-minimal paraboloid f = x² + y²",
    )


def holomorphic(N: int = 2) -> Chart:
    """The graph of ``ζ ↦ ζ^N``; holomorphic curves solve the Osserman system with ``μ = 1``."""
    if N < 1:
        raise ParameterError("'N' must be more than or equal to 1.")
    return Chart.from_formula(
        chart_key("holomorphic", N=N),
        Domain("R²", bounds=(-1.0, 1.0, -1.0, 1.0)),
        lambda X, Y: _complex_power(X, Y, N),
        mu=1.0,
        description=f"holomorphic curve w = ζ^{N}",
    )


def sigma_N(N: int) -> Chart:
    """
    The graph of ``Ψ_N(ρ)·(x + iy)^N`` over the punctured plane, with
    ``Ψ_N(ρ) = T_N(√(1 + ρ²)) / (N ρ^N)``.
    """
    if N < 1:
        raise ParameterError("'N' must be more than or equal to 1.")

    def formula(X: Jet2, Y: Jet2) -> tuple[Jet2, Jet2]:
        rho2 = X * X + Y * Y
        psi = _chebyshev_jet(N, sqrt(1.0 + rho2)) / (N * rho2 ** (N / 2))
        re, im = _complex_power(X, Y, N)
        return psi * re, psi * im

    return Chart.from_formula(
        chart_key("sigmaN", N=N),
        Domain("R² ∖ {0}", [lambda X, Y: sqrt(X * X + Y * Y)], bounds=(-2.0, 2.0, -2.0, 2.0), sample_margin=0.05),
        formula,
        description=f"Chebyshev punctured-plane graph of degree {N}",
    )


def _sigma_alpha_beta(alpha: float, beta: float, side: Branch | None, name: str, description: str) -> Chart:
    shift = beta * beta - alpha * alpha

    def formula(X: Jet2, Y: Jet2) -> tuple[Jet2, Jet2]:
        rho2 = X * X + Y * Y
        f = alpha * log((sqrt(rho2) + sqrt(rho2 + shift)) / 2.0)
        g = beta * arctan(Y / X) if beta != 0.0 else Jet2(0.0)
        return f, g

    match side:
        case Branch.RIGHT:
            domain = Domain("x > 0", [lambda X, Y: X], bounds=(0.0, 3.0, -3.0, 3.0))
        case Branch.LEFT:
            domain = Domain("x < 0", [lambda X, Y: -X], bounds=(-3.0, 0.0, -3.0, 3.0))
        case _:
            domain = Domain("R²", [lambda X, Y: sqrt(X * X + Y * Y)], bounds=(-3.0, 3.0, -3.0, 3.0))
    domain = domain.restrict(f"x² + y² > {-shift}", lambda X, Y: X * X + Y * Y + shift)

    return Chart.from_formula(name, domain, formula, hypersurface=beta == 0.0, description=description)


def sigma_alpha_beta(alpha: float, beta: float, *, side: Branch | None = Branch.RIGHT) -> Chart:
    """
    The graph of ``(α·ln((r + √(r² + β² − α²)) / 2), β·arctan(y / x))``.

    ``arctan(y / x)`` is the principal branch, so the chart lives on one half-plane chosen by
    ``side``. The half-plane may only be dropped (``side=None``) when ``β = 0``, which leaves the
    whole region ``r² > α²``.
    """
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise ParameterError("'alpha' and 'beta' must be finite.")
    if side is None and beta != 0.0:
        raise ParameterError("'side' may only be omitted when 'beta' is 0.0.")
    name = chart_key("sigma_alpha_beta", alpha=alpha, beta=beta, side=side.value if side else "annulus")
    return _sigma_alpha_beta(alpha, beta, side, name, "two-parameter logarithmic graph")


def catenoid_annulus() -> Chart:
    return _sigma_alpha_beta(1.0, 0.0, None, "catenoid_annulus", "catenoid over the annulus r > 1")


# minimal graphs in R³

def _square() -> Domain:
    return Domain(
        "|x| < π/2, |y| < π/2",
        [
            lambda X, Y: HALF_PI - X,
            lambda X, Y: HALF_PI + X,
            lambda X, Y: HALF_PI - Y,
            lambda X, Y: HALF_PI + Y,
        ],
        bounds=(-HALF_PI, HALF_PI, -HALF_PI, HALF_PI),
    )


def helicoid() -> MinimalGraph:
    chart = Chart.from_formula(
        "helicoid",
        Domain(
            "|y| < π/2",
            [lambda X, Y: HALF_PI - Y, lambda X, Y: HALF_PI + Y],
            bounds=(-2.0, 2.0, -HALF_PI, HALF_PI),
        ),
        lambda X, Y: (X * tan(Y), Jet2(0.0)),
        hypersurface=True,
        description="helicoid z = x tan y, foliated by lines",
    )
    return MinimalGraph(chart, PotentialField.closed_form("helicoid", lambda X, Y: -sqrt(cos(Y) ** 2 + X * X)))


def catenoid() -> MinimalGraph:
    chart = Chart.from_formula(
        "catenoid",
        Domain(
            "x² < cosh²y",
            [lambda X, Y: cosh(Y) - X, lambda X, Y: cosh(Y) + X],
            bounds=(-3.0, 3.0, -1.5, 1.5),
        ),
        lambda X, Y: (sqrt(cosh(Y) ** 2 - X * X), Jet2(0.0)),
        hypersurface=True,
        description="catenoid z = √(cosh²y − x²), foliated by ellipses",
    )
    return MinimalGraph(chart, PotentialField.closed_form("catenoid", lambda X, Y: -X * tanh(Y)))


def scherk() -> MinimalGraph:
    chart = Chart.from_formula(
        "scherk",
        _square(),
        lambda X, Y: (log(cos(X)) - log(cos(Y)), Jet2(0.0)),
        hypersurface=True,
        description="Scherk doubly periodic graph z = ln(cos x / cos y)",
    )
    return MinimalGraph(chart, PotentialField.closed_form("scherk", lambda X, Y: -arcsin(sin(X) * sin(Y))))


def _rhomboid_coordinates(rho: float, alpha: float) -> Callable[[Jet2, Jet2], tuple[Jet2, Jet2]]:
    ca, sa = math.cos(alpha), math.sin(alpha)

    def coordinates(X: Jet2, Y: Jet2) -> tuple[Jet2, Jet2]:
        return (0.5 * rho) * (X / ca - Y / sa), (0.5 * rho) * (X / ca + Y / sa)

    return coordinates


def scherk_sheared(rho: float, alpha: float) -> MinimalGraph:
    """
    Scherk's doubly periodic graph over a rhomboid of angle ``2α`` and side ``π / ρ``. At
    ``(ρ, α) = (2, π/4)`` it is the orthogonal graph rotated by ``π/4`` and scaled by ``1/2``.
    """
    _require_shear(rho, alpha)
    ca, sa = math.cos(alpha), math.sin(alpha)
    rhomboid = _rhomboid_coordinates(rho, alpha)

    def p(X: Jet2, Y: Jet2) -> tuple[Jet2, Jet2]:
        a, b = rhomboid(X, Y)
        return (log(cos(a)) - log(cos(b))) / rho, Jet2(0.0)

    def argument(X: Jet2, Y: Jet2) -> Jet2:
        return ca * ca * cos(rho * X / ca) - sa * sa * cos(rho * Y / sa)

    domain = Domain(
        "rhomboid |a| < π/2, |b| < π/2",
        [
            lambda X, Y: HALF_PI - rhomboid(X, Y)[0],
            lambda X, Y: HALF_PI + rhomboid(X, Y)[0],
            lambda X, Y: HALF_PI - rhomboid(X, Y)[1],
            lambda X, Y: HALF_PI + rhomboid(X, Y)[1],
        ],
        bounds=(-math.pi * ca / rho, math.pi * ca / rho, -math.pi * sa / rho, math.pi * sa / rho),
        sample_margin=0.1 / rho,
    ).restrict("|arccos argument| < 1", lambda X, Y: 1.0 - argument(X, Y), lambda X, Y: 1.0 + argument(X, Y))

    name = chart_key("scherk_sheared", rho=rho, alpha=alpha)
    chart = Chart.from_formula(
        name, domain, p, hypersurface=True, description="sheared Scherk doubly periodic graph",
    )
    return MinimalGraph(chart, PotentialField.closed_form(name, lambda X, Y: -arccos(argument(X, Y)) / rho))


def saddle_tower() -> MinimalGraph:
    chart = Chart.from_formula(
        "saddle_tower",
        Domain(
            "|sinh x sinh y| < 1",
            [lambda X, Y: 1.0 - sinh(X) * sinh(Y), lambda X, Y: 1.0 + sinh(X) * sinh(Y)],
            bounds=(-2.5, 2.5, -2.5, 2.5),
        ),
        lambda X, Y: (arcsin(sinh(X) * sinh(Y)), Jet2(0.0)),
        hypersurface=True,
        description="Scherk saddle tower z = arcsin(sinh x sinh y)",
    )
    return MinimalGraph(chart, PotentialField.closed_form("saddle_tower", lambda X, Y: log(cosh(Y)) - log(cosh(X))))


def saddle_tower_general(rho: float, alpha: float) -> MinimalGraph:
    _require_shear(rho, alpha)
    ca, sa = math.cos(alpha), math.sin(alpha)
    rhomboid = _rhomboid_coordinates(rho, alpha)

    def argument(X: Jet2, Y: Jet2) -> Jet2:
        return ca * ca * cosh(rho * X / ca) - sa * sa * cosh(rho * Y / sa)

    def potential(X: Jet2, Y: Jet2) -> Jet2:
        a, b = rhomboid(X, Y)
        return (log(cosh(a)) - log(cosh(b))) / rho

    name = chart_key("saddle_tower_general", rho=rho, alpha=alpha)
    chart = Chart.from_formula(
        name,
        Domain(
            "|arccos argument| < 1",
            [lambda X, Y: 1.0 - argument(X, Y), lambda X, Y: 1.0 + argument(X, Y)],
            bounds=(-3.0 / rho, 3.0 / rho, -3.0 / rho, 3.0 / rho),
            sample_margin=0.1 / rho,
        ),
        lambda X, Y: (arccos(argument(X, Y)) / rho, Jet2(0.0)),
        hypersurface=True,
        description="Scherk generalized saddle tower",
    )
    return MinimalGraph(chart, PotentialField.closed_form(name, potential))


# λ-families

def _family(graph: MinimalGraph, lam: float, name: str, description: str, *, printed: bool, mirrored: bool) -> Chart:
    _require_lambda(lam)
    key = chart_key(name, **{"lambda": lam}) if ":" not in name else f"{name},lambda={lam}"
    chart = deform(graph.chart, graph.potential, lam, name=key, description=description)
    if printed and mirrored and lam != 0.0:
        chart = chart.reflect(name=f"{key},printed=true")
    __log__.debug(f"Chart '{chart.name}' built with mu={chart.mu}.")
    return chart


def helicoid_deform(lam: float, *, printed: bool = False) -> Chart:
    return _family(
        helicoid(), lam, "helicoid_deform", "helicoid family foliated by hyperbolas or lines",
        printed=printed, mirrored=True,
    )


def catenoid_deform(lam: float, *, printed: bool = False) -> Chart:
    return _family(
        catenoid(), lam, "catenoid_deform", "catenoid family, annuli of total curvature −4π",
        printed=printed, mirrored=True,
    )


def scherk_doubly(lam: float, *, printed: bool = False) -> Chart:
    return _family(
        scherk(), lam, "scherk_doubly", "doubly periodic Scherk family over the square",
        printed=printed, mirrored=True,
    )


def scherk_doubly_sheared(lam: float, rho: float, alpha: float, *, printed: bool = False) -> Chart:
    return _family(
        scherk_sheared(rho, alpha), lam, chart_key("scherk_doubly_sheared", rho=rho, alpha=alpha),
        "doubly periodic Scherk family over a rhomboid net", printed=printed, mirrored=True,
    )


def scherk_tower(lam: float, *, printed: bool = False) -> Chart:
    return _family(
        saddle_tower(), lam, "scherk_tower", "saddle tower family, singly periodic",
        printed=printed, mirrored=True,
    )


def scherk_tower_general(lam: float, rho: float, alpha: float, *, printed: bool = False) -> Chart:
    return _family(
        saddle_tower_general(rho, alpha), lam, chart_key("scherk_tower_general", rho=rho, alpha=alpha),
        "generalized saddle tower family", printed=printed, mirrored=False,
    )


# lagrangian scherk graph

def lagrangian_scherk() -> Chart:
    return Chart.from_formula(
        "lagrangian_scherk",
        _square(),
        lambda X, Y: (arsinh(tan(X) * cos(Y)), arsinh(tan(Y) * cos(X))),
        description="Lagrangian Scherk gradient graph",
    )


def lagrangian_scherk_hessian(x: float, y: float) -> Jet2:
    """
    Returns the second-order part of the potential ``h`` with ``∇h = (f, g)`` of
    :func:`lagrangian_scherk`; the value slot is left at ``0`` since ``h`` is only known up to a
    constant.
    """
    jf, jg = lagrangian_scherk().evaluate(x, y)
    return Jet2(0.0, jf.value, jg.value, jf.dx, jf.dy, jg.dy)


def monge_ampere_residual(h_hessian: Jet2) -> float:
    return h_hessian.dxx * h_hessian.dyy - h_hessian.dxy * h_hessian.dxy - 1.0


# conformal patches

def patch_XN(N: int) -> ConformalPatch:
    """``X_N(t, θ) = (sinh t cos θ, sinh t sin θ, cosh(Nt) cos(Nθ) / N, cosh(Nt) sin(Nθ) / N)``."""
    if N < 1:
        raise ParameterError("'N' must be more than or equal to 1.")

    def formula(T: Jet2, H: Jet2) -> tuple[Jet2, Jet2, Jet2, Jet2]:
        return (
            sinh(T) * cos(H),
            sinh(T) * sin(H),
            cosh(N * T) * cos(N * H) / N,
            cosh(N * T) * sin(N * H) / N,
        )

    return ConformalPatch(
        chart_key("XN", N=N),
        formula,
        lambda t, theta: np.cosh(t) ** 2 + np.sinh(N * t) ** 2 + 0.0 * theta,
        description=f"conformal patch of the degree {N} Chebyshev graph",
    )


def patch_F_plus(lam: float) -> ConformalPatch:
    _require_lambda(lam)
    c, s = math.cosh(lam), math.sinh(lam)

    def formula(U: Jet2, V: Jet2) -> tuple[Jet2, Jet2, Jet2, Jet2]:
        return cosh(U) * cos(V), U, c * cosh(U) * sin(V), s * sinh(U) * cos(V)

    def factor(u, v):
        return np.cosh(u) ** 2 + s * s * (np.sinh(u) ** 2 * np.sin(v) ** 2 + np.cosh(u) ** 2 * np.cos(v) ** 2)

    return ConformalPatch(
        chart_key("Fplus", **{"lambda": lam}),
        formula,
        factor,
        description="conformal patch of the catenoid family",
    )


def patch_F_minus(lam: float) -> ConformalPatch:
    _require_lambda(lam)
    c, s = math.cosh(lam), math.sinh(lam)

    def formula(U: Jet2, V: Jet2) -> tuple[Jet2, Jet2, Jet2, Jet2]:
        return sinh(U) * cos(V), V, c * sinh(U) * sin(V), s * cosh(U) * cos(V)

    def factor(u, v):
        return np.cosh(u) ** 2 + s * s * (np.cosh(u) ** 2 * np.sin(v) ** 2 + np.sinh(u) ** 2 * np.cos(v) ** 2)

    return ConformalPatch(
        chart_key("Fminus", **{"lambda": lam}),
        formula,
        factor,
        v_range=(-math.inf, math.inf),
        periodic_v=False,
        description="conformal patch of the helicoid family",
    )


def flat_patch() -> ConformalPatch:
    return ConformalPatch(
        "flat_patch",
        lambda U, V: (U, V, Jet2(0.0), Jet2(0.0)),
        lambda u, v: np.ones_like(np.asarray(u, dtype=np.float64) + np.asarray(v, dtype=np.float64)),
        v_range=(-math.inf, math.inf),
        periodic_v=False,
        description="coordinate plane",
    )


def conformality_defect(patch: ConformalPatch, u: float, v: float) -> float:
    """
    Largest of ``| |X_u|² − Λ |``, ``| |X_v|² − Λ |`` and ``|X_u · X_v|``, relative to ``max(1, Λ)``.
    """
    xu, xv = patch.tangents(u, v)
    factor = patch.conformal_factor(u, v)
    defects = (abs(float(xu @ xu) - factor), abs(float(xv @ xv) - factor), abs(float(xu @ xv)))
    return max(defects) / max(1.0, factor)


def harmonicity_defect(patch: ConformalPatch, u: float, v: float, fd_step: float = 1e-3) -> float:
    """Sup norm of the five-point Laplacian of the patch map."""
    h = fd_step
    laplacian = (
        patch.point(u + h, v) + patch.point(u - h, v) + patch.point(u, v + h) + patch.point(u, v - h)
        - 4.0 * patch.point(u, v)
    ) / (h * h)
    return float(np.max(np.abs(laplacian)))


def _require_patch_margin(patch: ConformalPatch, u: float, v: float, margin: float) -> None:
    for du, dv in ((margin, 0.0), (-margin, 0.0), (0.0, margin), (0.0, -margin)):
        if not patch.contains(u + du, v + dv):
            raise DomainError(
                f"Parameter ({u}, {v}) is closer than {margin} to the boundary of patch '{patch.name}'.",
                chart=patch.name,
                point=(u, v),
            )


def _log_factor_laplacian(
    patch: ConformalPatch,
    u: npt.NDArray[np.float64],
    v: npt.NDArray[np.float64],
    h: float,
) -> npt.NDArray[np.float64]:
    def log_factor(a: npt.NDArray[np.float64], b: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return np.log(patch.conformal_factor_grid(a, b))

    return (
        log_factor(u + h, v) + log_factor(u - h, v) + log_factor(u, v + h) + log_factor(u, v - h)
        - 4.0 * log_factor(u, v)
    ) / (h * h)


def gauss_curvature_conformal(patch: ConformalPatch, u: float, v: float, fd_step: float = 1e-3) -> float:
    """
    Gauss curvature ``K = −Δ(log Λ) / (2Λ)`` of the metric ``Λ·(du² + dv²)``, with the Laplacian taken
    by central differences.
    """
    if fd_step <= 0.0:
        raise ValueError("'fd_step' must be more than 0.0.")
    _require_patch_margin(patch, u, v, 2.0 * fd_step)
    factor = patch.conformal_factor(u, v)
    if not factor > 0.0:
        raise DomainError(
            f"Patch '{patch.name}' has a non-positive conformal factor at ({u}, {v}).",
            chart=patch.name,
            point=(u, v),
        )
    laplacian = _log_factor_laplacian(patch, np.array(u), np.array(v), fd_step)
    return float(-laplacian / (2.0 * factor))


def total_curvature(patch: ConformalPatch, T: float, n: int, *, fd_step: float = 1e-3) -> float:
    """
    ``∫∫ K dA = ∫∫ K·Λ du dv`` over ``[−T, T] × [0, 2π]`` with an ``n × n`` tensor
    Gauss–Legendre rule.
    """
    if not T > 0.0:
        raise ParameterError("'T' must be more than 0.0.")
    if n < 16:
        raise ParameterError("'n' must be more than or equal to 16.")
    margin = 2.0 * fd_step
    if not (patch.contains(-T - margin, -margin) and patch.contains(T + margin, 2.0 * math.pi + margin)):
        raise DomainError(
            f"Patch '{patch.name}' does not cover [-{T}, {T}] x [0, 2π] with margin {margin}.",
            chart=patch.name,
            point=(T, 2.0 * math.pi),
        )

    nodes, weights = np.polynomial.legendre.leggauss(n)
    u, wu = T * nodes, T * weights
    v, wv = math.pi * (nodes + 1.0), math.pi * weights
    U, V = np.meshgrid(u, v, indexing="ij")
    # K·Λ = −Δ(log Λ) / 2
    integrand = -0.5 * _log_factor_laplacian(patch, U, V, fd_step)
    return math.fsum((np.outer(wu, wv) * integrand).ravel())


def curvature_table(
    patch: ConformalPatch,
    Ts: Sequence[float],
    n: int,
    *,
    expected: float | None = None,
    tolerance: float = 0.05,
    fd_step: float = 1e-3,
) -> CurvatureReport:
    """
    Evaluates :func:`total_curvature` for every truncation ``T`` and estimates the neglected tail as
    ``|I(T) − I(T − 1)|`` (``T / 2`` in place of ``T − 1`` when ``T <= 2``).
    """
    rows: list[CurvatureRow] = []
    for T in Ts:
        value = total_curvature(patch, T, n, fd_step=fd_step)
        previous = total_curvature(patch, T - 1.0 if T > 2.0 else T / 2.0, n, fd_step=fd_step)
        rows.append(CurvatureRow(T, n, value, abs(value - previous)))
    report = CurvatureReport(patch.name, rows, expected=expected, tolerance=tolerance)
    __log__.debug(DeferredMessage(json.dumps, report.data, indent=4))
    return report


# singularities

_DEFAULT_RADII: tuple[float, ...] = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
_AXIS_DIRECTIONS: tuple[Point, ...] = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))


def singularity_probe(
    chart: Chart,
    center: Point = (0.0, 0.0),
    radius_sequence: Sequence[float] = _DEFAULT_RADII,
    *,
    directions: Sequence[Point] = _AXIS_DIRECTIONS,
) -> SingularityReport:
    """
    Samples ``(f, g)`` along rays into ``center``; the value at the smallest radius is taken as the
    ray's limit. Rays whose limits disagree certify a singularity that cannot be removed.
    """
    radii = sorted(radius_sequence, reverse=True)
    if len(radii) < 2:
        raise ValueError("'radius_sequence' must contain at least 2 radii.")

    rays: list[Ray] = []
    for dx, dy in directions:
        norm = math.hypot(dx, dy)
        ux, uy = dx / norm, dy / norm
        samples = [chart.heights(center[0] + r * ux, center[1] + r * uy) for r in radii]
        (f, g), (f_prev, g_prev) = samples[-1], samples[-2]
        rays.append(Ray((ux, uy), f, g, max(abs(f - f_prev), abs(g - g_prev))))

    report = SingularityReport(chart.name, center, radii, rays)
    __log__.info(f"Chart '{chart.name}' ray limits at {center} disagree by {report.discrepancy}.")
    return report
