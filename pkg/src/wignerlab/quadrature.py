"""Measurement densities of the quadratures ``Z = a X + b P``.

For ``Z = -c X + P`` the generalized eigenvectors are the chirped plane waves
``exp(i r x + i c x^2/2)/sqrt(2 pi)``, so the density is the squared modulus of
a chirp transform of ``psi``. A general ``(a, b)`` with ``b != 0`` is a
rescaling of ``(a/b) X + P``. When ``|b| < |a|`` the chirp rate ``a/b`` gets
large and the sampled integrand aliases; in that regime the state is moved to
the momentum representation, where ``Z`` becomes ``b X - a P`` and the chirp
rate ``b/a`` is bounded by one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import Grid1D, integrate_1d, interp_linear
from .marginals import SignedDensity1D
from .spectral import chirp, frequency_grid, ft1d, ft_on_grid, ft_samples, ft_uniform, shift_samples
from .states import WaveFunction

MOMENTUM_PADDING = 4


@dataclass(frozen=True)
class Observable:
    a: float
    b: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("observable 0*X + 0*P is not a quadrature")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def from_angle(cls, theta: float) -> "Observable":
        return cls(np.cos(theta), np.sin(theta))


def _reflect(values: np.ndarray) -> np.ndarray:
    """``v[j] -> v[(n - j) % n]``: the map ``r -> -r`` on a periodic centered grid."""
    return np.roll(values[::-1], 1)


def density_X(psi: WaveFunction) -> SignedDensity1D:
    return SignedDensity1D(psi.grid, np.abs(psi.values) ** 2)


def density_P(psi: WaveFunction, grid: Grid1D | None = None) -> SignedDensity1D:
    """``|F psi|^2`` on the frequency grid, or on ``grid`` if given."""
    if grid is None:
        phi = ft1d(psi)
        return SignedDensity1D(phi.grid, np.abs(phi.values) ** 2)
    return SignedDensity1D(grid, np.abs(ft_on_grid(psi.values, psi.grid, grid)) ** 2)


def _scaled_grid(base: Grid1D, scale: float) -> Grid1D:
    return Grid1D(base.n, abs(scale) * base.L)


def density_Z(psi: WaveFunction, z: Observable, grid: Grid1D | None = None) -> SignedDensity1D:
    """Density of ``a X + b P`` in state ``psi``.

    Without ``grid`` the FFT route is used and the result lives on the
    natural grid ``r = b * xi`` (``r = a * x`` when ``b = 0``). With ``grid``
    the same amplitudes are evaluated directly on its nodes.
    """
    a, b = z.a, z.b
    if b == 0:
        if grid is None:
            vals = np.abs(psi.values) ** 2 / abs(a)
            return SignedDensity1D(_scaled_grid(psi.grid, a), vals if a > 0 else _reflect(vals))
        # band-limited evaluation of psi at r/a
        phi = ft_samples(psi.values, psi.grid)
        amp = ft_uniform(phi, frequency_grid(psi.grid), grid.points[0] / a, grid.dx / a, grid.n, sign=+1)
        return SignedDensity1D(grid, np.abs(amp) ** 2 / abs(a))
    if abs(b) < abs(a):
        wide = Grid1D(MOMENTUM_PADDING * psi.grid.n, frequency_grid(psi.grid).L)
        phi = WaveFunction(wide, ft_on_grid(psi.values, psi.grid, wide), psi.label)
        return density_Z(phi, Observable(b, -a), grid)
    c = -a / b
    chirped = chirp(psi.grid, c) * psi.values
    if grid is None:
        amp = ft_samples(chirped, psi.grid)
        vals = np.abs(amp) ** 2 / abs(b)
        rgrid = _scaled_grid(frequency_grid(psi.grid), b)
        return SignedDensity1D(rgrid, vals if b > 0 else _reflect(vals))
    amp = ft_uniform(chirped, psi.grid, grid.points[0] / b, grid.dx / b, grid.n)
    return SignedDensity1D(grid, np.abs(amp) ** 2 / abs(b))


def characteristic_rhs(psi: WaveFunction, alpha: float, beta: float, method: str = "spectral") -> complex:
    """``exp(i alpha beta/2) * int psi*(y) exp(-i alpha y) psi(y - beta) dy``.

    This is ``<psi| exp(-i(alpha X + beta P)) |psi>``. The shifted samples
    ``psi(y - beta)`` come from band-limited interpolation (``"spectral"``) or
    from linear interpolation (``"linear"``); both are zero outside the box.
    """
    y = psi.grid.points
    if beta == 0:
        shifted = psi.values
    elif method == "spectral":
        shifted = shift_samples(psi.values, psi.grid, beta)
    elif method == "linear":
        shifted = interp_linear(psi.values, psi.grid, y - beta)
    else:
        raise ValueError(f"unknown interpolation method {method!r}")
    integrand = np.conj(psi.values) * np.exp(-1j * alpha * y) * shifted
    return complex(np.exp(0.5j * alpha * beta) * integrate_1d(integrand, psi.grid))
