"""Executable checks of the marginal characterization of the Wigner function.

* :func:`verify_marginal_theorem` compares every directional marginal of
  ``w`` with the measurement density of the matching quadrature.
* :func:`verify_slice_identity` checks ``2 pi * F2[w](a z, b z) = <psi|exp(-i z Z)|psi>``.
* :func:`reconstruct_from_marginals` inverts a sinogram by Fourier-slice
  assembly, so a density is recovered from its marginals alone.
* :func:`uniqueness_probe` looks for a marginal that separates two states.
"""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from .grid import Grid1D, Grid2D, integrate_1d, integrate_2d
from .marginals import Direction, SignedDensity1D, default_z_grid, pushforward_density
from .quadrature import Observable, characteristic_rhs, density_Z
from .spectral import SQRT_2PI, frequency_grid, ft2d_at, ft_samples, ift2d
from .states import WaveFunction
from .wigner import QuasiDensity2D, compute_wigner

MIN_RECONSTRUCTION_ANGLES = 8
SLICE_MASS_TOLERANCE = 1e-5


def angle_fan(count: int) -> np.ndarray:
    """``count`` equally spaced angles in ``[0, pi)``."""
    if count < 1:
        raise ValueError("need at least one angle")
    return np.pi * np.arange(count) / count


def _check_angles(angles) -> np.ndarray:
    angles = np.asarray(angles, dtype=float).ravel()
    if angles.size == 0:
        raise ValueError("angle list is empty")
    if angles[0] < 0 or angles[-1] >= np.pi or np.any(np.diff(angles) <= 0):
        raise ValueError("angles must be strictly increasing in [0, pi)")
    return angles


@dataclass
class AngleRecord:
    angle: float
    direction: tuple
    L1_error: float
    Linf_error: float


@dataclass
class VerificationReport:
    records: list
    max_L1: float
    slice_identity_error: float | None = None
    reconstruction_error: float | None = None
    metadata: dict = field(default_factory=dict)

    def offending(self, tol: float) -> list:
        return [r for r in self.records if not r.L1_error <= tol]

    def to_dict(self) -> dict:
        return {
            "metadata": self.metadata,
            "max_L1": self.max_L1,
            "slice_identity_error": self.slice_identity_error,
            "reconstruction_error": self.reconstruction_error,
            "records": [asdict(r) | {"direction": list(r.direction)} for r in self.records],
        }


def verify_marginal_theorem(
    psi: WaveFunction, angles, w: QuasiDensity2D | None = None, order: int = 3
) -> VerificationReport:
    """Compare ``(cos t x + sin t p)_* w`` with the density of ``cos t X + sin t P``.

    ``w`` defaults to the Wigner function of ``psi`` on ``psi.grid x psi.grid``;
    passing another density checks that one instead. Both sides are evaluated
    on the same grid, so no resampling enters the comparison.
    """
    angles = _check_angles(angles)
    w = compute_wigner(psi) if w is None else w
    records = []
    for theta in angles:
        d = Direction.from_angle(theta)
        gz = default_z_grid(w, d)
        g = pushforward_density(w, d, gz, order=order)
        dz = density_Z(psi, Observable(d.a, d.b), gz)
        diff = np.abs(g.values - dz.values)
        records.append(AngleRecord(float(theta), (d.a, d.b), float(integrate_1d(diff, gz)), float(diff.max())))
    return VerificationReport(
        records,
        max(r.L1_error for r in records),
        metadata={"state": psi.label, "n": psi.grid.n, "L": psi.grid.L, "order": order},
    )


def verify_slice_identity(psi: WaveFunction, zetas, angles, w: QuasiDensity2D | None = None) -> float:
    """Max of ``|2 pi * F2[w](a z, b z) - <psi|exp(-i z (aX + bP))|psi>|``.

    Frequency pairs outside the box resolvable by the grid of ``w`` are
    skipped with a warning.
    """
    w = compute_wigner(psi) if w is None else w
    fx, fp = frequency_grid(w.grid.gx), frequency_grid(w.grid.gp)
    worst = 0.0
    skipped = []
    for theta in np.asarray(angles, dtype=float).ravel():
        a, b = np.cos(theta), np.sin(theta)
        for zeta in np.asarray(zetas, dtype=float).ravel():
            xi, eta = a * zeta, b * zeta
            if abs(xi) >= fx.L or abs(eta) >= fp.L:
                skipped.append((float(theta), float(zeta)))
                continue
            lhs = 2.0 * np.pi * ft2d_at(w.values, w.grid, xi, eta)[0]
            rhs = characteristic_rhs(psi, xi, eta)
            worst = max(worst, abs(lhs - rhs))
    if skipped:
        warnings.warn(f"{len(skipped)} (angle, zeta) samples outside the frequency box were skipped: {skipped}")
    return float(worst)


@dataclass(frozen=True, eq=False)
class Sinogram:
    """Marginal densities ``values[i]`` of direction ``angles[i]`` on a shared grid."""

    angles: np.ndarray
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        angles = _check_angles(self.angles)
        values = np.array(self.values, dtype=float)
        if values.shape != (angles.size, self.grid.n):
            raise ValueError(f"expected shape {(angles.size, self.grid.n)}, got {values.shape}")
        masses = integrate_1d(values, self.grid)
        bad = np.flatnonzero(np.abs(masses - 1.0) > SLICE_MASS_TOLERANCE)
        if bad.size:
            raise ValueError(f"slices {bad.tolist()} do not have unit mass: {masses[bad].tolist()}")
        values.setflags(write=False)
        angles.setflags(write=False)
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "values", values)

    def slice(self, i: int) -> SignedDensity1D:
        return SignedDensity1D(self.grid, self.values[i])


def shared_r_grid(grid: Grid2D) -> Grid1D:
    """One grid wide enough for the marginal of every unit direction."""
    half = np.hypot(grid.gx.L, grid.gp.L)
    return Grid1D(grid.gx.n, half)


def sinogram_from_state(psi: WaveFunction, angles, grid: Grid1D | None = None) -> Sinogram:
    """Quadrature densities of ``psi``; nonnegative by construction."""
    angles = _check_angles(angles)
    grid = shared_r_grid(Grid2D(psi.grid, psi.grid)) if grid is None else grid
    rows = [density_Z(psi, Observable.from_angle(t), grid).values for t in angles]
    return Sinogram(angles, grid, np.array(rows))


def sinogram_of(w: QuasiDensity2D, angles, grid: Grid1D | None = None, order: int = 3) -> Sinogram:
    """Directional marginals of a phase-space density."""
    angles = _check_angles(angles)
    grid = shared_r_grid(w.grid) if grid is None else grid
    rows = [pushforward_density(w, Direction.from_angle(t), grid, order=order).values for t in angles]
    return Sinogram(angles, grid, np.array(rows))


def _slice_spectra(s: Sinogram, pad: int):
    """``F2[w]`` along each radial line, on a zero-padded (finer) frequency grid."""
    n = s.grid.n
    padded = Grid1D(pad * n, pad * s.grid.L)
    data = np.zeros((s.angles.size, padded.n))
    off = (pad - 1) * n // 2
    data[:, off : off + n] = s.values
    spectra = ft_samples(data, padded, axis=1) / SQRT_2PI
    return spectra, frequency_grid(padded)


def _radial(spectra, zgrid: Grid1D, rows, zeta):
    f = zgrid.index_of(zeta)
    inside = (f >= 0) & (f <= zgrid.n - 1)
    i0 = np.clip(np.floor(f).astype(np.intp), 0, zgrid.n - 2)
    t = f - i0
    vals = spectra[rows, i0] * (1 - t) + spectra[rows, i0 + 1] * t
    return np.where(inside, vals, 0.0)


def reconstruct_from_marginals(s: Sinogram, target: Grid2D, pad: int = 8) -> QuasiDensity2D:
    """Recover a phase-space density from its directional marginals.

    Each slice is Fourier transformed; its spectrum is the 2D transform of the
    density along the radial line at that angle. The radial lines are
    interpolated onto the Cartesian frequency grid of ``target`` (linear in
    angle between the two nearest lines, linear along each line), the origin is
    pinned to the common zero-frequency value, frequencies beyond the
    radial coverage are set to zero, and an inverse 2D transform returns to
    phase space. The result is renormalized to unit mass; the mass before
    renormalization and the discarded imaginary residue go into the metadata.
    """
    angles = s.angles
    k = angles.size
    if k < MIN_RECONSTRUCTION_ANGLES:
        raise ValueError(f"need at least {MIN_RECONSTRUCTION_ANGLES} angles, got {k}")
    spectra, zgrid = _slice_spectra(s, pad)

    fx, fp = frequency_grid(target.gx), frequency_grid(target.gp)
    xi, eta = np.meshgrid(fx.points, fp.points, indexing="ij")
    rho = np.hypot(xi, eta)
    phi = np.arctan2(eta, xi)
    # fold into [0, pi); the other half-plane is the same line at negative zeta
    back = phi < 0
    phi = np.where(back, phi + np.pi, phi)
    back |= phi >= np.pi
    phi = np.where(phi >= np.pi, phi - np.pi, phi)
    zeta = np.where(back, -rho, rho)

    # angles extended by one line on each side; wrapped lines flip zeta
    ext = np.concatenate(([angles[-1] - np.pi], angles, [angles[0] + np.pi]))
    rows = np.concatenate(([k - 1], np.arange(k), [0]))
    flip = np.concatenate(([-1.0], np.ones(k), [-1.0]))
    hi = np.clip(np.searchsorted(ext, phi, side="right"), 1, k + 1)
    lo = hi - 1
    u = (phi - ext[lo]) / (ext[hi] - ext[lo])
    v_lo = _radial(spectra, zgrid, rows[lo], flip[lo] * zeta)
    v_hi = _radial(spectra, zgrid, rows[hi], flip[hi] * zeta)
    spectrum = v_lo * (1 - u) + v_hi * u

    i0, j0 = target.gx.n // 2, target.gp.n // 2  # zero frequency
    spectrum[i0, j0] = spectra[:, zgrid.n // 2].mean()

    raw = ift2d(spectrum, target)
    peak = np.abs(raw).max()
    residue = float(np.abs(raw.imag).max() / peak) if peak > 0 else 0.0
    values = raw.real
    mass = integrate_2d(values, target)
    return QuasiDensity2D(
        target,
        values / mass,
        {"route": "fourier-slice", "angles": k, "mass_before_renormalization": mass, "imag_residue": residue},
    )


def reconstruction_error(recon: QuasiDensity2D, reference: QuasiDensity2D) -> float:
    """Max abs difference relative to ``max |reference|``."""
    return float(np.abs(recon.values - reference.values).max() / np.abs(reference.values).max())


@dataclass
class ProbeResult:
    states_differ: bool
    max_marginal_gap: float
    witness_angle: float
    wigner_l1: float


def uniqueness_probe(
    psi1: WaveFunction, psi2: WaveFunction, angles=None, threshold: float = 1e-6
) -> ProbeResult:
    """Search a fan of directions for a marginal that tells two states apart.

    ``states_differ`` is decided from the marginals alone (largest L1 gap
    above ``threshold``); the L1 distance of the Wigner functions is
    returned alongside so the two can be compared.
    """
    if psi1.grid != psi2.grid:
        raise ValueError("states live on different grids")
    angles = _check_angles(angle_fan(36) if angles is None else angles)
    w1, w2 = compute_wigner(psi1), compute_wigner(psi2)
    wigner_l1 = integrate_2d(np.abs(w1.values - w2.values), w1.grid)
    gaps = []
    for theta in angles:
        d = Direction.from_angle(theta)
        gz = default_z_grid(w1, d)
        g1 = pushforward_density(w1, d, gz).values
        g2 = pushforward_density(w2, d, gz).values
        gaps.append(float(integrate_1d(np.abs(g1 - g2), gz)))
    i = int(np.argmax(gaps))
    return ProbeResult(gaps[i] > threshold, gaps[i], float(angles[i]), float(wigner_l1))
