"""
Second-order forward-mode jets.

A :class:`Jet2` carries the value, gradient and Hessian of a scalar field of two variables at one
point. Arithmetic and the elementary functions below propagate all six numbers exactly, so any
closed-form height function written with them yields exact jets when evaluated on the seeds
returned by :meth:`Jet2.seeds`.
"""

from __future__ import annotations

import math
import sys
from collections.abc import Callable

import numpy as np
import numpy.typing as npt


__all__ = [
    "Jet2",
    "Jet3",
    "sqrt",
    "exp",
    "log",
    "sin",
    "cos",
    "tan",
    "sinh",
    "cosh",
    "tanh",
    "arcsin",
    "arccos",
    "arctan",
    "arsinh",
    "arcosh",
    "finite_difference_jet",
]


type Operand = Jet2 | float | int


class Jet2:
    __slots__ = ("value", "dx", "dy", "dxx", "dxy", "dyy",)

    def __init__(
        self,
        value: float,
        dx: float = 0.0,
        dy: float = 0.0,
        dxx: float = 0.0,
        dxy: float = 0.0,
        dyy: float = 0.0,
    ) -> None:
        self.value: float = value
        self.dx: float = dx
        self.dy: float = dy
        self.dxx: float = dxx
        self.dxy: float = dxy
        self.dyy: float = dyy

    def __repr__(self) -> str:
        return f"<osserman.Jet2: value={self.value}, dx={self.dx}, dy={self.dy}, dxx={self.dxx}, " \
               f"dxy={self.dxy}, dyy={self.dyy}>"

    # constructors

    @classmethod
    def constant(cls, value: float) -> Jet2:
        return cls(float(value))

    @classmethod
    def seeds(cls, x: float, y: float) -> tuple[Jet2, Jet2]:
        """
        Returns the coordinate jets ``(x, y)`` at the given point, i.e. ``x`` with ``dx = 1`` and
        ``y`` with ``dy = 1``.
        """
        return cls(float(x), 1.0, 0.0), cls(float(y), 0.0, 1.0)

    # properties

    @property
    def gradient(self) -> tuple[float, float]:
        return self.dx, self.dy

    @property
    def hessian(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (self.dxx, self.dxy), (self.dxy, self.dyy)

    def fields(self) -> tuple[float, float, float, float, float, float]:
        return self.value, self.dx, self.dy, self.dxx, self.dxy, self.dyy

    def is_finite(self) -> bool:
        return all(math.isfinite(field) for field in self.fields())

    def sup_norm(self) -> float:
        return max(abs(field) for field in self.fields())

    # chain rule

    def _compose(self, f0: float, f1: float, f2: float) -> Jet2:
        # v = phi(u): v_i = phi' u_i, v_ij = phi'' u_i u_j + phi' u_ij
        return Jet2(
            f0,
            f1 * self.dx,
            f1 * self.dy,
            f2 * self.dx * self.dx + f1 * self.dxx,
            f2 * self.dx * self.dy + f1 * self.dxy,
            f2 * self.dy * self.dy + f1 * self.dyy,
        )

    # arithmetic

    def __neg__(self) -> Jet2:
        return Jet2(-self.value, -self.dx, -self.dy, -self.dxx, -self.dxy, -self.dyy)

    def __pos__(self) -> Jet2:
        return self

    def __add__(self, other: Operand) -> Jet2:
        if isinstance(other, Jet2):
            return Jet2(
                self.value + other.value,
                self.dx + other.dx,
                self.dy + other.dy,
                self.dxx + other.dxx,
                self.dxy + other.dxy,
                self.dyy + other.dyy,
            )
        return Jet2(self.value + other, self.dx, self.dy, self.dxx, self.dxy, self.dyy)

    def __radd__(self, other: float | int) -> Jet2:
        return self + other

    def __sub__(self, other: Operand) -> Jet2:
        return self + (-other)

    def __rsub__(self, other: float | int) -> Jet2:
        return (-self) + other

    def __mul__(self, other: Operand) -> Jet2:
        if isinstance(other, Jet2):
            return Jet2(
                self.value * other.value,
                self.dx * other.value + self.value * other.dx,
                self.dy * other.value + self.value * other.dy,
                self.dxx * other.value + 2.0 * self.dx * other.dx + self.value * other.dxx,
                self.dxy * other.value + self.dx * other.dy + self.dy * other.dx + self.value * other.dxy,
                self.dyy * other.value + 2.0 * self.dy * other.dy + self.value * other.dyy,
            )
        return Jet2(
            self.value * other,
            self.dx * other,
            self.dy * other,
            self.dxx * other,
            self.dxy * other,
            self.dyy * other,
        )

    def __rmul__(self, other: float | int) -> Jet2:
        return self * other

    def reciprocal(self) -> Jet2:
        v = self.value
        return self._compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))

    def __truediv__(self, other: Operand) -> Jet2:
        if isinstance(other, Jet2):
            return self * other.reciprocal()
        return self * (1.0 / other)

    def __rtruediv__(self, other: float | int) -> Jet2:
        return self.reciprocal() * other

    def __pow__(self, exponent: float | int) -> Jet2:
        if exponent == 0:
            return Jet2(1.0)
        if exponent == 1:
            return self
        v = self.value
        if exponent == 2:
            return self._compose(v * v, 2.0 * v, 2.0)
        return self._compose(
            v ** exponent,
            exponent * v ** (exponent - 1),
            exponent * (exponent - 1) * v ** (exponent - 2),
        )


def _lift(u: Operand) -> Jet2:
    return u if isinstance(u, Jet2) else Jet2(float(u))


# elementary functions

def sqrt(u: Operand) -> Jet2:
    u = _lift(u)
    s = math.sqrt(u.value)
    return u._compose(s, 0.5 / s, -0.25 / (s * u.value))


def exp(u: Operand) -> Jet2:
    u = _lift(u)
    e = math.exp(u.value)
    return u._compose(e, e, e)


def log(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    return u._compose(math.log(v), 1.0 / v, -1.0 / (v * v))


def sin(u: Operand) -> Jet2:
    u = _lift(u)
    s, c = math.sin(u.value), math.cos(u.value)
    return u._compose(s, c, -s)


def cos(u: Operand) -> Jet2:
    u = _lift(u)
    s, c = math.sin(u.value), math.cos(u.value)
    return u._compose(c, -s, -c)


def tan(u: Operand) -> Jet2:
    u = _lift(u)
    t = math.tan(u.value)
    sec2 = 1.0 + t * t
    return u._compose(t, sec2, 2.0 * t * sec2)


def sinh(u: Operand) -> Jet2:
    u = _lift(u)
    s, c = math.sinh(u.value), math.cosh(u.value)
    return u._compose(s, c, s)


def cosh(u: Operand) -> Jet2:
    u = _lift(u)
    s, c = math.sinh(u.value), math.cosh(u.value)
    return u._compose(c, s, c)


def tanh(u: Operand) -> Jet2:
    u = _lift(u)
    t = math.tanh(u.value)
    sech2 = 1.0 - t * t
    return u._compose(t, sech2, -2.0 * t * sech2)


def arcsin(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    r = 1.0 - v * v
    return u._compose(math.asin(v), 1.0 / math.sqrt(r), v / (r * math.sqrt(r)))


def arccos(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    r = 1.0 - v * v
    return u._compose(math.acos(v), -1.0 / math.sqrt(r), -v / (r * math.sqrt(r)))


def arctan(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    r = 1.0 + v * v
    return u._compose(math.atan(v), 1.0 / r, -2.0 * v / (r * r))


def arsinh(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    r = 1.0 + v * v
    return u._compose(math.asinh(v), 1.0 / math.sqrt(r), -v / (r * math.sqrt(r)))


def arcosh(u: Operand) -> Jet2:
    u = _lift(u)
    v = u.value
    r = v * v - 1.0
    return u._compose(math.acosh(v), 1.0 / math.sqrt(r), -v / (r * math.sqrt(r)))


# third-order coordinates

class Jet3:
    __slots__ = ("value", "dx", "dy", "dz", "dxx", "dxy", "dxz", "dyy", "dyz", "dzz",)

    def __init__(
        self,
        value: float,
        dx: float,
        dy: float,
        dz: float,
        dxx: float,
        dxy: float,
        dxz: float,
        dyy: float,
        dyz: float,
        dzz: float,
    ) -> None:
        self.value: float = value
        self.dx: float = dx
        self.dy: float = dy
        self.dz: float = dz
        self.dxx: float = dxx
        self.dxy: float = dxy
        self.dxz: float = dxz
        self.dyy: float = dyy
        self.dyz: float = dyz
        self.dzz: float = dzz

    def __repr__(self) -> str:
        return f"<osserman.Jet3: value={self.value}, gradient={self.gradient}>"

    @property
    def gradient(self) -> tuple[float, float, float]:
        return self.dx, self.dy, self.dz

    def hessian(self) -> npt.NDArray[np.float64]:
        return np.array(
            [
                [self.dxx, self.dxy, self.dxz],
                [self.dxy, self.dyy, self.dyz],
                [self.dxz, self.dyz, self.dzz],
            ],
            dtype=np.float64,
        )

    def trace(self) -> float:
        return self.dxx + self.dyy + self.dzz

    def determinant(self) -> float:
        # symmetric cofactor expansion along the first row
        return (
            self.dxx * (self.dyy * self.dzz - self.dyz * self.dyz)
            - self.dxy * (self.dxy * self.dzz - self.dyz * self.dxz)
            + self.dxz * (self.dxy * self.dyz - self.dyy * self.dxz)
        )


# finite-difference oracle

_EPSILON: float = sys.float_info.epsilon


def _first(func: Callable[[float], float], t: float, h: float) -> float:
    return (-func(t + 2 * h) + 8 * func(t + h) - 8 * func(t - h) + func(t - 2 * h)) / (12 * h)


def _second(func: Callable[[float], float], t: float, h: float) -> float:
    return (
        -func(t + 2 * h) + 16 * func(t + h) - 30 * func(t) + 16 * func(t - h) - func(t - 2 * h)
    ) / (12 * h * h)


def finite_difference_jet(
    func: Callable[[float, float], float],
    x: float,
    y: float,
    *,
    step: float | None = None,
    second_step: float | None = None,
) -> Jet2:
    """
    Builds a :class:`Jet2` of ``func`` at ``(x, y)`` from central differences.

    First partials use five-point stencils with ``h = cbrt(eps) * max(1, |t|)``; second partials use
    five-point stencils (and a four-point cross stencil for the mixed partial) with
    ``h = eps ** (1 / 4) * max(1, |t|)``. Either step may be overridden.
    """
    hx = step if step is not None else math.cbrt(_EPSILON) * max(1.0, abs(x))
    hy = step if step is not None else math.cbrt(_EPSILON) * max(1.0, abs(y))
    kx = second_step if second_step is not None else _EPSILON ** 0.25 * max(1.0, abs(x))
    ky = second_step if second_step is not None else _EPSILON ** 0.25 * max(1.0, abs(y))

    def along_x(t: float) -> float:
        return func(t, y)

    def along_y(t: float) -> float:
        return func(x, t)

    mixed = (
        func(x + kx, y + ky) - func(x + kx, y - ky) - func(x - kx, y + ky) + func(x - kx, y - ky)
    ) / (4 * kx * ky)

    return Jet2(
        func(x, y),
        _first(along_x, x, hx),
        _first(along_y, y, hy),
        _second(along_x, x, kx),
        mixed,
        _second(along_y, y, ky),
    )
