from __future__ import annotations

import cmath
import math
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt


__all__ = [
    "ProjectivePoint",
    "Hyperplane",
]


_TIE_TOLERANCE: float = 1e-12


class ProjectivePoint:
    """
    A point ``[z1 : z2 : z3 : z4]`` of complex projective 3-space.

    The stored representative is canonical: it is divided by its first largest-modulus component so
    that component equals ``1``. Any nonzero complex multiple of the input therefore produces the same
    stored coordinates.
    """

    __slots__ = ("z1", "z2", "z3", "z4",)

    def __init__(self, z1: complex, z2: complex, z3: complex, z4: complex) -> None:
        coordinates = (complex(z1), complex(z2), complex(z3), complex(z4))
        moduli = [abs(z) for z in coordinates]
        if not all(math.isfinite(m) for m in moduli):
            raise ValueError("'ProjectivePoint' coordinates must be finite.")
        largest = max(moduli)
        if largest == 0.0:
            raise ValueError("'ProjectivePoint' coordinates must not all be zero.")
        # near-ties go to the first index so rescaling cannot flip the pivot through rounding
        pivot = next(i for i, m in enumerate(moduli) if m >= largest * (1.0 - _TIE_TOLERANCE))

        scale = coordinates[pivot]
        self.z1: complex = coordinates[0] / scale
        self.z2: complex = coordinates[1] / scale
        self.z3: complex = coordinates[2] / scale
        self.z4: complex = coordinates[3] / scale
        # exact, so normalising twice is the identity
        match pivot:
            case 0:
                self.z1 = 1.0 + 0.0j
            case 1:
                self.z2 = 1.0 + 0.0j
            case 2:
                self.z3 = 1.0 + 0.0j
            case _:
                self.z4 = 1.0 + 0.0j

    def __repr__(self) -> str:
        return f"<osserman.ProjectivePoint: [{self.z1} : {self.z2} : {self.z3} : {self.z4}]>"

    def __iter__(self):
        yield from (self.z1, self.z2, self.z3, self.z4)

    @classmethod
    def from_array(cls, coordinates: Iterable[complex]) -> ProjectivePoint:
        return cls(*coordinates)

    @property
    def coordinates(self) -> npt.NDArray[np.complex128]:
        return np.array([self.z1, self.z2, self.z3, self.z4], dtype=np.complex128)

    def distance(self, other: ProjectivePoint) -> float:
        """Componentwise sup distance between canonical representatives."""
        return max(abs(a - b) for a, b in zip(self, other))

    def quadric(self) -> complex:
        return self.z1 * self.z1 + self.z2 * self.z2 + self.z3 * self.z3 + self.z4 * self.z4


class Hyperplane:
    """
    The hyperplane ``a1 z1 + a2 z2 + a3 z3 + a4 z4 = 0`` of complex projective 3-space, stored with
    ``|a| = 1`` and its first nonzero coefficient real and positive.
    """

    __slots__ = ("a1", "a2", "a3", "a4",)

    def __init__(self, a1: complex, a2: complex, a3: complex, a4: complex, *, atol: float = 0.0) -> None:
        coefficients = np.array([a1, a2, a3, a4], dtype=np.complex128)
        norm = float(np.linalg.norm(coefficients))
        if not math.isfinite(norm) or norm == 0.0:
            raise ValueError("'Hyperplane' coefficients must be finite and not all zero.")
        coefficients /= norm

        leading = next(c for c in coefficients if abs(c) > atol)
        coefficients *= cmath.exp(-1j * cmath.phase(leading))

        self.a1: complex = complex(coefficients[0])
        self.a2: complex = complex(coefficients[1])
        self.a3: complex = complex(coefficients[2])
        self.a4: complex = complex(coefficients[3])

    def __repr__(self) -> str:
        return f"<osserman.Hyperplane: ({self.a1}, {self.a2}, {self.a3}, {self.a4})>"

    def __iter__(self):
        yield from (self.a1, self.a2, self.a3, self.a4)

    @classmethod
    def osserman(cls, mu: float) -> Hyperplane:
        """The hyperplane ``z3 + iμ z4 = 0`` carrying the Gauss image of an Osserman graph."""
        return cls(0.0, 0.0, 1.0, 1j * mu)

    @classmethod
    def holomorphic_pair(cls) -> tuple[Hyperplane, Hyperplane]:
        """The hyperplanes ``z1 + i z2 = 0`` and ``z3 + i z4 = 0`` containing holomorphic curves."""
        return cls(1.0, 1j, 0.0, 0.0), cls(0.0, 0.0, 1.0, 1j)

    @property
    def coefficients(self) -> npt.NDArray[np.complex128]:
        return np.array([self.a1, self.a2, self.a3, self.a4], dtype=np.complex128)

    def evaluate(self, point: ProjectivePoint) -> complex:
        return sum((a * z for a, z in zip(self, point)), start=0j)

    def distance(self, other: Hyperplane) -> float:
        return float(np.linalg.norm(self.coefficients - other.coefficients))

    @property
    def data(self) -> list[list[float]]:
        return [[a.real, a.imag] for a in self]
