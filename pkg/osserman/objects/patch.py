from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from ..exceptions import DomainError
from ..jets import Jet2


__all__ = ["ConformalPatch"]


type PatchFormula = Callable[[Jet2, Jet2], tuple[Jet2, Jet2, Jet2, Jet2]]
type FloatLike = float | npt.NDArray[np.float64]
type ConformalFactor = Callable[[FloatLike, FloatLike], FloatLike]


class ConformalPatch:
    """
    A parametrised surface ``X(u, v)`` in R⁴ whose induced metric is ``Λ(u, v)·(du² + dv²)``.

    The four coordinate functions are written with :class:`~osserman.jets.Jet2` arithmetic, so the
    tangents ``X_u`` and ``X_v`` are exact. ``conformal_factor`` is the closed form of ``Λ``; it is
    independent of the tangents, which is what lets the conformality defect be measured at all.

    ``u_range`` and ``v_range`` describe the parameter rectangle (use ``±inf`` for strips) and the
    periodicity flags mark directions in which the patch closes up.
    """

    __slots__ = (
        "name", "_formula", "_conformal_factor", "u_range", "v_range", "periodic_u", "periodic_v",
        "description",
    )

    def __init__(
        self,
        name: str,
        formula: PatchFormula,
        conformal_factor: ConformalFactor,
        *,
        u_range: tuple[float, float] = (-math.inf, math.inf),
        v_range: tuple[float, float] = (0.0, 2.0 * math.pi),
        periodic_u: bool = False,
        periodic_v: bool = True,
        description: str = "",
    ) -> None:
        self.name: str = name
        self._formula: PatchFormula = formula
        self._conformal_factor: ConformalFactor = conformal_factor
        self.u_range: tuple[float, float] = u_range
        self.v_range: tuple[float, float] = v_range
        self.periodic_u: bool = periodic_u
        self.periodic_v: bool = periodic_v
        self.description: str = description

    def __repr__(self) -> str:
        return f"<osserman.ConformalPatch: name='{self.name}', u_range={self.u_range}, " \
               f"v_range={self.v_range}, periodic_v={self.periodic_v}>"

    def contains(self, u: float, v: float) -> bool:
        u_ok = self.periodic_u or self.u_range[0] <= u <= self.u_range[1]
        v_ok = self.periodic_v or self.v_range[0] <= v <= self.v_range[1]
        return u_ok and v_ok

    def jets(self, u: float, v: float) -> tuple[Jet2, Jet2, Jet2, Jet2]:
        if not self.contains(u, v):
            raise DomainError(
                f"Parameter ({u}, {v}) lies outside the domain of patch '{self.name}'.",
                chart=self.name,
                point=(u, v),
            )
        return self._formula(*Jet2.seeds(u, v))

    def point(self, u: float, v: float) -> npt.NDArray[np.float64]:
        return np.array([jet.value for jet in self.jets(u, v)], dtype=np.float64)

    def tangents(self, u: float, v: float) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        jets = self.jets(u, v)
        return (
            np.array([jet.dx for jet in jets], dtype=np.float64),
            np.array([jet.dy for jet in jets], dtype=np.float64),
        )

    def laplacian(self, u: float, v: float) -> npt.NDArray[np.float64]:
        return np.array([jet.dxx + jet.dyy for jet in self.jets(u, v)], dtype=np.float64)

    def conformal_factor(self, u: float, v: float) -> float:
        return float(self._conformal_factor(u, v))

    def conformal_factor_grid(
        self,
        u: npt.NDArray[np.float64],
        v: npt.NDArray[np.float64],
    ) -> npt.NDArray[np.float64]:
        return np.asarray(self._conformal_factor(u, v), dtype=np.float64)
