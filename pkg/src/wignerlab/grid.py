"""Uniform centered grids, trapezoid quadrature and bilinear interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class Grid1D:
    """Half-open uniform grid ``x_k = -L + k*dx`` on ``[-L, L)``, ``dx = 2L/n``.

    ``n`` must be a power of two and at least 8 so every grid can be fed to
    the FFT-based transforms without special cases.
    """

    n: int
    L: float

    def __post_init__(self):
        n = int(self.n)
        if n != self.n or n < 8 or n & (n - 1):
            raise ValueError(f"grid size must be a power of two >= 8, got {self.n!r}")
        if not (np.isfinite(self.L) and self.L > 0):
            raise ValueError(f"half width must be positive and finite, got {self.L!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "L", float(self.L))

    @property
    def dx(self) -> float:
        return 2.0 * self.L / self.n

    @cached_property
    def points(self) -> np.ndarray:
        pts = -self.L + self.dx * np.arange(self.n)
        pts.setflags(write=False)
        return pts

    def index_of(self, x):
        """Fractional index of coordinate(s) ``x``."""
        return (np.asarray(x, dtype=float) + self.L) / self.dx

    def contains(self, x):
        """Whether ``x`` lies in the closed hull ``[x_0, x_{n-1}]`` of the nodes."""
        x = np.asarray(x, dtype=float)
        return (x >= self.points[0]) & (x <= self.points[-1])


@dataclass(frozen=True)
class Grid2D:
    gx: Grid1D
    gp: Grid1D

    @property
    def shape(self) -> tuple[int, int]:
        return (self.gx.n, self.gp.n)

    @property
    def cell_area(self) -> float:
        return self.gx.dx * self.gp.dx

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.gx.points, self.gp.points, indexing="ij")


def integrate_1d(values, grid: Grid1D) -> float:
    """Trapezoid rule over the ``n`` grid nodes.

    The half-open grid is treated as ``n - 1`` closed intervals, so a constant
    1 on ``Grid1D(8, 1.0)`` integrates to ``1.75`` rather than ``2``.
    """
    values = np.asarray(values)
    if values.shape[-1] != grid.n:
        raise ValueError(f"expected {grid.n} samples, got {values.shape[-1]}")
    return np.trapezoid(values, dx=grid.dx, axis=-1)


def integrate_2d(values, grid: Grid2D) -> float:
    """Tensor-product trapezoid rule; axis 0 is ``x``, axis 1 is ``p``."""
    values = np.asarray(values)
    if values.shape != grid.shape:
        raise ValueError(f"expected shape {grid.shape}, got {values.shape}")
    inner = np.trapezoid(values, dx=grid.gp.dx, axis=1)
    return float(np.trapezoid(inner, dx=grid.gx.dx))


def _linear_weights(grid: Grid1D, x):
    f = grid.index_of(x)
    i0 = np.clip(np.floor(f).astype(np.intp), 0, grid.n - 2)
    return i0, f - i0, grid.contains(x)


def interp_linear(values, grid: Grid1D, x):
    """Linear interpolation of 1D samples; zero outside the node hull."""
    values = np.asarray(values)
    i0, t, inside = _linear_weights(grid, x)
    out = values[i0] * (1.0 - t) + values[i0 + 1] * t
    return np.where(inside, out, 0.0)


def interp_bilinear(values, grid: Grid2D, x, p):
    """Bilinear interpolation of ``values[ix, ip]`` at ``(x, p)``.

    Exact at the nodes and for any function bilinear on each cell. Queries
    outside the bounding box of the nodes return 0: every density handled by
    this package is treated as compactly supported inside its grid.
    """
    values = np.asarray(values)
    x, p = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(p, dtype=float))
    i, s, in_x = _linear_weights(grid.gx, x)
    j, t, in_p = _linear_weights(grid.gp, p)
    out = (
        values[i, j] * (1 - s) * (1 - t)
        + values[i + 1, j] * s * (1 - t)
        + values[i, j + 1] * (1 - s) * t
        + values[i + 1, j + 1] * s * t
    )
    out = np.where(in_x & in_p, out, 0.0)
    return out[()] if out.ndim == 0 else out
