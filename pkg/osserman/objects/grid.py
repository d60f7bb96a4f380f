from __future__ import annotations

import numpy as np
import numpy.typing as npt

from .._utilities import SCHEMA_VERSION
from ..types.common import Box
from ..types.grid import GridFieldData
from .chart import Chart


__all__ = ["GridField"]


type FloatArray = npt.NDArray[np.float64]
type BoolArray = npt.NDArray[np.bool_]


class GridField:
    """
    Nodal samples of the height pair ``(f, g)`` on a uniform ``nx × ny`` lattice.

    Arrays are indexed ``[i, j]`` with ``i`` along ``x``. Nodes flagged in ``boundary_mask`` hold
    Dirichlet data and are never written after construction: :attr:`f` and :attr:`g` are read-only
    views and :meth:`set_free` only touches free nodes.
    """

    __slots__ = ("nx", "ny", "x", "y", "hx", "hy", "_f", "_g", "boundary_mask", "chart",)

    def __init__(
        self,
        x: FloatArray,
        y: FloatArray,
        f: FloatArray,
        g: FloatArray,
        *,
        boundary_mask: BoolArray | None = None,
        chart: str | None = None,
    ) -> None:
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        nx, ny = len(x), len(y)
        if nx < 3 or ny < 3:
            raise ValueError("'nx' and 'ny' must both be more than or equal to 3.")
        hx, hy = (x[-1] - x[0]) / (nx - 1), (y[-1] - y[0]) / (ny - 1)
        if hx <= 0.0 or hy <= 0.0:
            raise ValueError("'x' and 'y' must be increasing.")
        if not (np.allclose(np.diff(x), hx, rtol=1e-9) and np.allclose(np.diff(y), hy, rtol=1e-9)):
            raise ValueError("'x' and 'y' must be uniformly spaced.")
        if np.shape(f) != (nx, ny) or np.shape(g) != (nx, ny):
            raise ValueError("'f' and 'g' must have shape (nx, ny).")

        if boundary_mask is None:
            boundary_mask = np.zeros((nx, ny), dtype=np.bool_)
            boundary_mask[[0, -1], :] = True
            boundary_mask[:, [0, -1]] = True
        elif np.shape(boundary_mask) != (nx, ny):
            raise ValueError("'boundary_mask' must have shape (nx, ny).")

        self.nx: int = nx
        self.ny: int = ny
        self.x: FloatArray = x
        self.y: FloatArray = y
        self.hx: float = float(hx)
        self.hy: float = float(hy)
        self._f: FloatArray = np.array(f, dtype=np.float64)
        self._g: FloatArray = np.array(g, dtype=np.float64)
        self.boundary_mask: BoolArray = np.array(boundary_mask, dtype=np.bool_)
        self.boundary_mask.flags.writeable = False
        self.chart: str | None = chart

    def __repr__(self) -> str:
        return f"<osserman.GridField: nx={self.nx}, ny={self.ny}, hx={self.hx}, hy={self.hy}, chart={self.chart!r}>"

    # constructors

    @classmethod
    def zeros(cls, box: Box, nx: int, ny: int, *, chart: str | None = None) -> GridField:
        x0, x1, y0, y1 = box
        x = np.linspace(x0, x1, nx)
        y = np.linspace(y0, y1, ny)
        return cls(x, y, np.zeros((nx, ny)), np.zeros((nx, ny)), chart=chart)

    @classmethod
    def from_chart(cls, chart: Chart, box: Box, nx: int, ny: int, *, boundary_only: bool = False) -> GridField:
        """
        Samples ``chart`` at every node, or only at boundary nodes (interior filled by transfinite
        interpolation) when ``boundary_only`` is set.
        """
        grid = cls.zeros(box, nx, ny, chart=chart.name)
        f, g = grid._f, grid._g
        for i, xi in enumerate(grid.x):
            for j, yj in enumerate(grid.y):
                if boundary_only and not grid.boundary_mask[i, j]:
                    continue
                f[i, j], g[i, j] = chart.heights(float(xi), float(yj))
        return grid.transfinite() if boundary_only else grid

    @classmethod
    def from_data(cls, data: GridFieldData) -> GridField:
        nx, ny = data["nx"], data["ny"]
        return cls(
            np.array(data["x"], dtype=np.float64),
            np.array(data["y"], dtype=np.float64),
            np.array(data["f"], dtype=np.float64).reshape(nx, ny),
            np.array(data["g"], dtype=np.float64).reshape(nx, ny),
            boundary_mask=np.array(data["boundary_mask"], dtype=np.bool_).reshape(nx, ny),
            chart=data["chart"],
        )

    # views

    @property
    def f(self) -> FloatArray:
        view = self._f.view()
        view.flags.writeable = False
        return view

    @property
    def g(self) -> FloatArray:
        view = self._g.view()
        view.flags.writeable = False
        return view

    @property
    def free_mask(self) -> BoolArray:
        return ~self.boundary_mask

    @property
    def box(self) -> Box:
        return float(self.x[0]), float(self.x[-1]), float(self.y[0]), float(self.y[-1])

    def free_values(self) -> FloatArray:
        free = self.free_mask
        return np.concatenate([self._f[free], self._g[free]])

    # mutation

    def set_free(self, values: FloatArray) -> None:
        free = self.free_mask
        count = int(free.sum())
        if values.shape != (2 * count,):
            raise ValueError(f"'values' must have shape ({2 * count},).")
        self._f[free] = values[:count]
        self._g[free] = values[count:]

    def copy(self) -> GridField:
        return GridField(self.x, self.y, self._f, self._g, boundary_mask=self.boundary_mask, chart=self.chart)

    def with_free(self, values: FloatArray) -> GridField:
        grid = self.copy()
        grid.set_free(values)
        return grid

    def transfinite(self) -> GridField:
        """
        Returns a copy whose free nodes hold the Coons patch of the outer boundary ring.
        """
        s = ((self.x - self.x[0]) / (self.x[-1] - self.x[0]))[:, None]
        t = ((self.y - self.y[0]) / (self.y[-1] - self.y[0]))[None, :]
        grid = self.copy()
        for values in (grid._f, grid._g):
            left, right = values[0, :][None, :], values[-1, :][None, :]
            bottom, top = values[:, 0][:, None], values[:, -1][:, None]
            coons = (
                (1 - s) * left + s * right + (1 - t) * bottom + t * top
                - (1 - s) * (1 - t) * values[0, 0] - s * (1 - t) * values[-1, 0]
                - (1 - s) * t * values[0, -1] - s * t * values[-1, -1]
            )
            free = grid.free_mask
            values[free] = coons[free]
        return grid

    # serialisation

    @property
    def data(self) -> GridFieldData:
        return {
            "schema_version": SCHEMA_VERSION,
            "chart":          self.chart,
            "nx":             self.nx,
            "ny":             self.ny,
            "x":              self.x.tolist(),
            "y":              self.y.tolist(),
            "f":              self._f.ravel().tolist(),
            "g":              self._g.ravel().tolist(),
            "boundary_mask":  self.boundary_mask.ravel().tolist(),
        }
