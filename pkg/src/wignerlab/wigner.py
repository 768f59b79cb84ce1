"""Wigner quasidistributions on a phase-space grid.

With hbar = 1::

    w(x, p) = 1/(2 pi) * int psi*(x + g/2) psi(x - g/2) exp(i g p) dg

The lag ``g`` is sampled at ``2 m dx`` so both ``x_k +- g/2`` are grid nodes
and no interpolation of ``psi`` is needed. The lag sum is then evaluated at
whatever momentum nodes are requested, which decouples the momentum grid
from the reciprocal of the position grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.ndimage import spline_filter
from scipy.special import eval_laguerre

from .grid import Grid1D, Grid2D, integrate_2d
from .spectral import ft_on_grid
from .states import Cat, Fock, Gaussian, StateSpec, WaveFunction

HBAR = 1.0
IMAG_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class QuasiDensity2D:
    """Real, possibly negative, density sampled as ``values[ix, ip]``."""

    grid: Grid2D
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != self.grid.shape:
            raise ValueError(f"expected shape {self.grid.shape}, got {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def mass(self) -> float:
        return integrate_2d(self.values, self.grid)

    @cached_property
    def spline_coefficients(self) -> np.ndarray:
        """Cubic B-spline coefficients, zero-padded outside the grid."""
        return spline_filter(self.values, order=3, mode="grid-constant")

    def with_values(self, values, **metadata) -> "QuasiDensity2D":
        return QuasiDensity2D(self.grid, values, {**self.metadata, **metadata})


def _check_normalized(psi: WaveFunction):
    nrm2 = psi.norm() ** 2
    if abs(nrm2 - 1.0) > NORM_TOLERANCE:
        raise ValueError(f"state is not normalized (|psi|^2 integrates to {nrm2:.12g})")


def _lag_pairs(n: int):
    """Index pairs ``(k + m, k - m)`` for all rows ``k`` and lags ``|m| <= n/2``."""
    m = np.arange(-(n // 2), n // 2 + 1)
    k = np.arange(n)[:, None]
    plus, minus = k + m, k - m
    ok = (plus >= 0) & (plus < n) & (minus >= 0) & (minus < n)
    return m, np.clip(plus, 0, n - 1), np.clip(minus, 0, n - 1), ok


def _lag_transform(amp_plus, amp_minus, ok, lags, out_points, sign):
    corr = np.where(ok, np.conj(amp_plus) * amp_minus, 0.0)
    kernel = np.exp(sign * 1j * np.outer(lags, out_points))
    return corr @ kernel


def _finish(raw, scale, grid: Grid2D, label: str, route: str) -> QuasiDensity2D:
    raw = raw * scale
    peak = np.abs(raw).max()
    residue = float(np.abs(raw.imag).max() / peak) if peak > 0 else 0.0
    if residue > IMAG_TOLERANCE:
        raise ValueError(f"imaginary residue {residue:.2e} exceeds tolerance; grid too coarse")
    return QuasiDensity2D(grid, raw.real, {"state": label, "route": route, "imag_residue": residue})


def compute_wigner(psi: WaveFunction, gp: Grid1D | None = None) -> QuasiDensity2D:
    """Wigner function of ``psi`` on ``psi.grid x gp`` (``gp`` defaults to ``psi.grid``)."""
    _check_normalized(psi)
    gx = psi.grid
    gp = gx if gp is None else gp
    m, plus, minus, ok = _lag_pairs(gx.n)
    lags = 2.0 * m * gx.dx / HBAR
    vals = psi.values
    raw = _lag_transform(vals[plus], vals[minus], ok, lags, gp.points, +1)
    dgamma = 2.0 * gx.dx / HBAR
    return _finish(raw, dgamma / (2.0 * np.pi), Grid2D(gx, gp), psi.label, "position")


def compute_wigner_momentum_form(
    psi: WaveFunction, gx: Grid1D | None = None, gp: Grid1D | None = None
) -> QuasiDensity2D:
    """Wigner function built from the momentum amplitudes.

    ``w(x, p) ~ int phi*(p + g/2) phi(p - g/2) exp(-i g x) dg`` with
    ``phi = F[psi]``. The identity holds up to a constant factor, which is
    fixed by rescaling to unit total mass.
    """
    _check_normalized(psi)
    gx = psi.grid if gx is None else gx
    gp = psi.grid if gp is None else gp
    # phi on a grid twice as wide, same spacing as gp, so p_j +- m dp are nodes
    wide = Grid1D(2 * gp.n, 2 * gp.L)
    phi = ft_on_grid(psi.values, psi.grid, wide)
    m, plus, minus, ok = _lag_pairs(gp.n)
    off = gp.n // 2
    lags = 2.0 * m * gp.dx
    raw = _lag_transform(phi[plus + off], phi[minus + off], ok, lags, gx.points, -1)
    raw = raw.T  # rows indexed by x
    grid = Grid2D(gx, gp)
    w = _finish(raw, 1.0, grid, psi.label, "momentum")
    return w.with_values(w.values / w.mass())


def oracle_wigner(spec: StateSpec, grid: Grid2D) -> QuasiDensity2D:
    """Closed-form Wigner functions for Gaussian packets, low Fock levels and cats."""
    x, p = grid.mesh()
    if isinstance(spec, Gaussian):
        s2 = spec.sigma ** 2
        w = np.exp(-((x - spec.x0) ** 2) / s2 - s2 * (p - spec.p0) ** 2) / np.pi
    elif isinstance(spec, Fock) and spec.level <= 3:
        r2 = x * x + p * p
        w = (-1) ** spec.level / np.pi * eval_laguerre(spec.level, 2 * r2) * np.exp(-r2)
    elif isinstance(spec, Cat):
        a = spec.alpha
        sign = 1.0 if spec.parity == "+" else -1.0
        lobes = np.exp(-((x - a) ** 2) - p * p) + np.exp(-((x + a) ** 2) - p * p)
        fringe = 2.0 * np.exp(-x * x - p * p) * np.cos(2 * a * p)
        w = (lobes + sign * fringe) / (np.pi * 2.0 * (1.0 + sign * np.exp(-a * a)))
    else:
        raise ValueError(f"no closed-form Wigner function for {spec!r}")
    return QuasiDensity2D(grid, w, {"state": repr(spec), "route": "oracle"})


@dataclass(frozen=True)
class NegativityReport:
    min_value: float
    negative_mass: float
    negative_area: float

    def to_dict(self) -> dict:
        return {"min_value": self.min_value, "negative_mass": self.negative_mass, "negative_area": self.negative_area}


def negativity_report(w: QuasiDensity2D, floor: float = 1e-12) -> NegativityReport:
    """Minimum, integral of the negative part, and area where ``w`` is negative.

    ``negative_mass`` is the (nonpositive) integral of ``min(w, 0)``. The area
    counts cells whose value is below ``-floor * max|w|`` so rounding noise in
    the far tails of a nonnegative density does not register.
    """
    v = w.values
    peak = np.abs(v).max()
    neg = np.minimum(v, 0.0)
    area = np.count_nonzero(v < -floor * peak) * w.grid.cell_area if peak > 0 else 0.0
    return NegativityReport(float(v.min()), float(integrate_2d(neg, w.grid)), float(area))
