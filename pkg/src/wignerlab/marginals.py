"""Directional marginals ``(a x + b p)_* w`` of a phase-space density."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import map_coordinates

from .grid import Grid1D, integrate_1d, interp_bilinear, interp_linear
from .wigner import QuasiDensity2D


@dataclass(frozen=True)
class Direction:
    a: float
    b: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("direction (0, 0) does not define a marginal")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def from_angle(cls, theta: float) -> "Direction":
        return cls(np.cos(theta), np.sin(theta))

    def scaled(self, c: float) -> "Direction":
        return Direction(c * self.a, c * self.b)


@dataclass(frozen=True, eq=False)
class SignedDensity1D:
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n,):
            raise ValueError(f"expected {self.grid.n} samples, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def mass(self) -> float:
        return float(integrate_1d(self.values, self.grid))

    def at(self, z):
        """Linear interpolation, zero outside the node hull."""
        return interp_linear(self.values, self.grid, z)


def default_z_grid(w: QuasiDensity2D, d: Direction) -> Grid1D:
    """Grid covering the image of the phase-space box under ``(x, p) -> a x + b p``."""
    half = abs(d.a) * w.grid.gx.L + abs(d.b) * w.grid.gp.L
    return Grid1D(w.grid.gx.n, half)


def _sample(w: QuasiDensity2D, x, p, order: int):
    if order == 1:
        return interp_bilinear(w.values, w.grid, x, p)
    if order != 3:
        raise ValueError("interpolation order must be 1 (bilinear) or 3 (cubic spline)")
    coords = [w.grid.gx.index_of(x).ravel(), w.grid.gp.index_of(p).ravel()]
    out = map_coordinates(
        w.spline_coefficients, coords, order=3, mode="grid-constant", cval=0.0, prefilter=False
    )
    return out.reshape(np.shape(x))


def _axis_marginal(values, grid: Grid1D, where, order: int):
    if order == 1:
        return interp_linear(values, grid, where)
    coords = [grid.index_of(where).ravel()]
    return map_coordinates(values, coords, order=3, mode="grid-constant", cval=0.0).reshape(np.shape(where))


def pushforward_density(
    w: QuasiDensity2D, d: Direction, gz: Grid1D | None = None, order: int = 3
) -> SignedDensity1D:
    """Density of ``z = a x + b p`` under ``w``.

    For ``|b| >= |a|``::

        g(z) = 1/|b| * int w(x, (z - a x)/b) dx

    evaluated by the trapezoid rule over the x-nodes. For ``|b| < |a|`` the
    roles of the axes are swapped so the Jacobian factor never exceeds
    ``sqrt(2)`` for unit directions. Off-grid values come from a cubic
    B-spline (``order=3``) or bilinear interpolation (``order=1``); both are
    exact at the nodes, and values outside the box count as zero.
    """
    gz = default_z_grid(w, d) if gz is None else gz
    z = gz.points
    gx, gp = w.grid.gx, w.grid.gp
    a, b = d.a, d.b
    if b == 0:
        rows = integrate_1d(w.values, gp)  # integrate over p
        return SignedDensity1D(gz, _axis_marginal(rows, gx, z / a, order) / abs(a))
    if a == 0:
        cols = integrate_1d(w.values.T, gx)
        return SignedDensity1D(gz, _axis_marginal(cols, gp, z / b, order) / abs(b))
    if abs(b) >= abs(a):
        x = np.broadcast_to(gx.points, (gz.n, gx.n))
        p = (z[:, None] - a * x) / b
        vals = _sample(w, x, p, order)
        return SignedDensity1D(gz, integrate_1d(vals, gx) / abs(b))
    p = np.broadcast_to(gp.points, (gz.n, gp.n))
    x = (z[:, None] - b * p) / a
    vals = _sample(w, x, p, order)
    return SignedDensity1D(gz, integrate_1d(vals, gp) / abs(a))


def interval_mass(g: SignedDensity1D, u: float, v: float) -> float:
    """Trapezoid integral of ``g`` over ``[u, v]`` with linear end cells.

    Infinite endpoints are clipped to the grid.
    """
    if u > v:
        raise ValueError(f"empty interval: u={u} > v={v}")
    pts = g.grid.points
    u = max(u, pts[0])
    v = min(v, pts[-1])
    if u >= v:
        return 0.0
    inner = pts[(pts > u) & (pts < v)]
    nodes = np.concatenate(([u], inner, [v]))
    return float(np.trapezoid(g.at(nodes), nodes))


def check_direction_scaling(
    w: QuasiDensity2D, d: Direction, c: float, intervals, order: int = 3
) -> float:
    """Largest gap between ``(ax+bp)_* w (u, v)`` and ``(cax+cbp)_* w (cu, cv)``.

    For negative ``c`` the image interval is ``(cv, cu)``.
    """
    if c == 0:
        raise ValueError("scaling factor must be nonzero")
    lhs = pushforward_density(w, d, order=order)
    rhs = lhs if c == 1 else pushforward_density(w, d.scaled(c), order=order)
    worst = 0.0
    for u, v in intervals:
        cu, cv = (c * u, c * v) if c > 0 else (c * v, c * u)
        worst = max(worst, abs(interval_mass(lhs, u, v) - interval_mass(rhs, cu, cv)))
    return worst
