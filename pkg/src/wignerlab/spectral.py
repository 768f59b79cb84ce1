"""Continuum Fourier transforms on centered grids.

Conventions (hbar = 1)::

    F[f](xi)       = 1/sqrt(2 pi) * int f(x) exp(-i xi x) dx
    F^-1[g](x)     = 1/sqrt(2 pi) * int g(xi) exp(+i xi x) dxi
    F2[w](xi, eta) = 1/(2 pi) * iint w(x, p) exp(-i (xi x + eta p)) dx dp

Integrals are Riemann sums over the grid nodes. On a grid with ``n`` nodes and
spacing ``dx`` the reciprocal grid has spacing ``2 pi / (n dx)`` and is again a
centered half-open :class:`~wignerlab.grid.Grid1D`, so transforms map grids to
grids and the round trip is exact up to rounding.
"""

from __future__ import annotations

import numpy as np
from scipy import fft as sfft
from scipy.signal import czt

from .grid import Grid1D, Grid2D
from .states import WaveFunction

SQRT_2PI = np.sqrt(2.0 * np.pi)


def frequency_grid(grid: Grid1D) -> Grid1D:
    """Reciprocal grid: same ``n``, spacing ``2 pi / (n dx)``."""
    return Grid1D(grid.n, grid.n * np.pi / (2.0 * grid.L))


def _alternating(n: int, shift: int = 0) -> np.ndarray:
    return np.where((np.arange(n) - shift) % 2 == 0, 1.0, -1.0)


def _shape_for(axis: int, ndim: int, n: int) -> tuple:
    shape = [1] * ndim
    shape[axis] = n
    return tuple(shape)


def ft_samples(values, grid: Grid1D, axis: int = -1) -> np.ndarray:
    """Forward transform of samples along ``axis``; output on ``frequency_grid(grid)``."""
    values = np.asarray(values, dtype=complex)
    n = grid.n
    sign = _alternating(n).reshape(_shape_for(axis, values.ndim, n))
    post = _alternating(n, n // 2).reshape(sign.shape)
    out = sfft.fft(values * sign, axis=axis)
    return out * post * (grid.dx / SQRT_2PI)


def ift_samples(values, grid: Grid1D, axis: int = -1) -> np.ndarray:
    """Inverse transform of samples living on ``frequency_grid(grid)`` back onto ``grid``."""
    values = np.asarray(values, dtype=complex)
    n = grid.n
    fgrid = frequency_grid(grid)
    pre = _alternating(n, n // 2).reshape(_shape_for(axis, values.ndim, n))
    post = _alternating(n).reshape(pre.shape)
    out = sfft.ifft(values * pre, axis=axis) * n
    return out * post * (fgrid.dx / SQRT_2PI)


def ft1d(psi: WaveFunction) -> WaveFunction:
    return WaveFunction(frequency_grid(psi.grid), ft_samples(psi.values, psi.grid), psi.label)


def ift1d(phi: WaveFunction) -> WaveFunction:
    """Inverse of :func:`ft1d`; ``phi`` lives on a frequency grid."""
    grid = frequency_grid(phi.grid)
    return WaveFunction(grid, ift_samples(phi.values, grid), phi.label)


def ft2d(values, grid: Grid2D) -> tuple[np.ndarray, Grid2D]:
    """2D forward transform, prefactor ``1/(2 pi)``, as two 1D passes."""
    out = ft_samples(values, grid.gx, axis=0)
    out = ft_samples(out, grid.gp, axis=1)
    return out, Grid2D(frequency_grid(grid.gx), frequency_grid(grid.gp))


def ift2d(values, grid: Grid2D) -> np.ndarray:
    """Inverse of :func:`ft2d`. ``grid`` is the spatial grid of the result."""
    out = ift_samples(values, grid.gx, axis=0)
    return ift_samples(out, grid.gp, axis=1)


def ft_uniform(values, grid: Grid1D, start: float, step: float, count: int, sign: int = -1) -> np.ndarray:
    """Continuum transform at the uniform frequencies ``start + j*step``.

    Computes ``1/sqrt(2 pi) * sum_k f_k exp(sign * i * xi_j * x_k) dx`` with a
    chirp-z transform, so the output spacing need not be reciprocal to the
    input spacing and may be negative. ``sign=+1`` gives the inverse kernel.
    """
    values = np.asarray(values, dtype=complex)
    h = grid.dx
    x0 = grid.points[0]
    xi = start + step * np.arange(count)
    a = np.exp(-sign * 1j * start * h)
    w = np.exp(sign * 1j * step * h)
    s = czt(values, m=count, w=w, a=a, axis=-1)
    return s * np.exp(sign * 1j * xi * x0) * (h / SQRT_2PI)


def ft_on_grid(values, grid: Grid1D, out: Grid1D, sign: int = -1) -> np.ndarray:
    """Continuum transform evaluated on the nodes of an arbitrary grid ``out``."""
    return ft_uniform(values, grid, out.points[0], out.dx, out.n, sign)


def ft_at(values, grid: Grid1D, xi, sign: int = -1) -> np.ndarray:
    """Continuum transform at arbitrary frequencies by direct summation."""
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    kernel = np.exp(sign * 1j * np.outer(xi, grid.points))
    return kernel @ np.asarray(values, dtype=complex) * (grid.dx / SQRT_2PI)


def chirp(grid: Grid1D, c: float) -> np.ndarray:
    """The conjugate chirp ``exp(-i c x^2 / 2)`` on ``grid``."""
    x = grid.points
    return np.exp(-0.5j * c * x * x)


def chirp_ft(psi: WaveFunction, c: float) -> WaveFunction:
    """``r -> 1/sqrt(2 pi) * int exp(-i r x) exp(-i c x^2/2) psi(x) dx`` on the frequency grid.

    These are the amplitudes against the chirped plane waves
    ``exp(i r x + i c x^2/2)/sqrt(2 pi)``, the generalized eigenvectors of
    ``-c X + P``. ``c = 0`` is exactly :func:`ft1d`.
    """
    if c == 0:
        return ft1d(psi)
    return WaveFunction(frequency_grid(psi.grid), ft_samples(chirp(psi.grid, c) * psi.values, psi.grid), psi.label)


def chirp_ft_on_grid(psi: WaveFunction, c: float, out: Grid1D) -> np.ndarray:
    """Same amplitudes as :func:`chirp_ft`, evaluated on the nodes of ``out``."""
    return ft_on_grid(chirp(psi.grid, c) * psi.values, psi.grid, out)


def ft2d_at(values, grid: Grid2D, xi, eta) -> np.ndarray:
    """2D continuum transform at scattered frequency pairs by direct summation."""
    xi, eta = np.broadcast_arrays(np.atleast_1d(np.asarray(xi, float)), np.atleast_1d(np.asarray(eta, float)))
    ex = np.exp(-1j * np.outer(xi.ravel(), grid.gx.points))
    ep = np.exp(-1j * np.outer(eta.ravel(), grid.gp.points))
    s = np.einsum("mk,kj,mj->m", ex, np.asarray(values, dtype=complex), ep)
    return (s * grid.cell_area / (2.0 * np.pi)).reshape(xi.shape)


def shift_samples(values, grid: Grid1D, shift: float) -> np.ndarray:
    """Band-limited samples of ``f(x - shift)``; zero where ``x - shift`` leaves the box."""
    fgrid = frequency_grid(grid)
    spec = ft_samples(values, grid) * np.exp(-1j * fgrid.points * shift)
    out = ift_samples(spec, grid)
    return np.where(grid.contains(grid.points - shift), out, 0.0)
