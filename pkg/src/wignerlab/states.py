"""Concrete one-particle states sampled on a grid.

A state is described declaratively by a ``StateSpec`` (one of the dataclasses
below) and turned into samples with :func:`realize`.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from .grid import Grid1D, integrate_1d

MAX_FOCK_LEVEL = 20
TAIL_TOLERANCE = 1e-8


class TailMassWarning(UserWarning):
    """The state does not decay to zero at the edges of its grid."""


@dataclass(frozen=True)
class Gaussian:
    x0: float = 0.0
    p0: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class Fock:
    level: int

    def __post_init__(self):
        if int(self.level) != self.level or not 0 <= self.level <= MAX_FOCK_LEVEL:
            raise ValueError(f"Fock level must be an integer in [0, {MAX_FOCK_LEVEL}]")


@dataclass(frozen=True)
class Cat:
    alpha: float
    parity: str = "+"

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("cat displacement must be positive")
        if self.parity not in ("+", "-"):
            raise ValueError("cat parity must be '+' or '-'")


@dataclass(frozen=True)
class Superposition:
    terms: tuple  # of (complex coefficient, StateSpec)

    def __post_init__(self):
        if len(self.terms) == 0:
            raise ValueError("superposition needs at least one term")
        object.__setattr__(self, "terms", tuple((complex(c), s) for c, s in self.terms))


@dataclass(frozen=True, eq=False)
class Sampled:
    values: np.ndarray
    grid: Grid1D

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(f"expected {self.grid.n} samples, got shape {values.shape}")
        object.__setattr__(self, "values", values)


StateSpec = Union[Gaussian, Fock, Cat, Superposition, Sampled]


@dataclass(frozen=True, eq=False)
class WaveFunction:
    grid: Grid1D
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(f"expected {self.grid.n} samples, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def norm(self) -> float:
        return float(np.sqrt(integrate_1d(np.abs(self.values) ** 2, self.grid)))

    def normalized(self) -> "WaveFunction":
        nrm = self.norm()
        if nrm == 0:
            raise ValueError("cannot normalize the zero function")
        return WaveFunction(self.grid, self.values / nrm, self.label)

    def tail_ratio(self) -> float:
        mod = np.abs(self.values)
        peak = mod.max()
        if peak == 0:
            return 0.0
        edge = max(mod[:2].max(), mod[-2:].max())
        return float(edge / peak)


def hermite_functions(levels: int, x) -> np.ndarray:
    """Normalized Hermite functions ``h_0 .. h_levels`` at ``x``.

    Uses the three-term recurrence on the normalized functions, which stays
    bounded where the raw polynomials and ``n!`` would overflow.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((levels + 1,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if levels >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for k in range(1, levels):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * x * out[k] - np.sqrt(k / (k + 1)) * out[k - 1]
    return out


def _raw(spec: StateSpec, grid: Grid1D) -> np.ndarray:
    x = grid.points
    if isinstance(spec, Gaussian):
        s2 = spec.sigma ** 2
        return (np.pi * s2) ** -0.25 * np.exp(-((x - spec.x0) ** 2) / (2 * s2)) * np.exp(1j * spec.p0 * x)
    if isinstance(spec, Fock):
        return hermite_functions(spec.level, x)[spec.level].astype(complex)
    if isinstance(spec, Cat):
        sign = 1.0 if spec.parity == "+" else -1.0
        return _raw(Gaussian(spec.alpha, 0.0, 1.0), grid) + sign * _raw(Gaussian(-spec.alpha, 0.0, 1.0), grid)
    if isinstance(spec, Superposition):
        out = np.zeros(grid.n, dtype=complex)
        for coeff, part in spec.terms:
            vals = _raw(part, grid)
            out += coeff * vals / np.sqrt(integrate_1d(np.abs(vals) ** 2, grid))
        return out
    if isinstance(spec, Sampled):
        if spec.grid != grid:
            raise ValueError("sampled state lives on a different grid; resample it first")
        return spec.values.copy()
    raise TypeError(f"unknown state spec {spec!r}")


def fix_global_phase(values: np.ndarray) -> np.ndarray:
    """Rotate so the largest-modulus sample is real and positive.

    Ties (e.g. odd states with symmetric peaks) go to the lowest index after
    rounding the moduli, so the result does not depend on last-bit noise.
    """
    mod = np.round(np.abs(values), 12)
    k = int(np.argmax(mod))
    if values[k] == 0:
        return values
    return values * (abs(values[k]) / values[k])


def realize(spec: StateSpec, grid: Grid1D) -> WaveFunction:
    """Sample ``spec`` on ``grid``, normalize and fix the global phase."""
    values = _raw(spec, grid)
    nrm2 = integrate_1d(np.abs(values) ** 2, grid)
    if not nrm2 > 0:
        raise ValueError(f"state {spec!r} has zero norm on this grid")
    values = fix_global_phase(values / np.sqrt(nrm2))
    psi = WaveFunction(grid, values, describe(spec))
    ratio = psi.tail_ratio()
    if ratio > TAIL_TOLERANCE:
        warnings.warn(
            f"{psi.label}: edge amplitude is {ratio:.2e} of the peak; enlarge the grid",
            TailMassWarning,
            stacklevel=2,
        )
    return psi


def inner(phi: WaveFunction, psi: WaveFunction) -> complex:
    """``<phi|psi>``, conjugate-linear in ``phi``."""
    if phi.grid != psi.grid:
        raise ValueError("inner product of states on different grids")
    return complex(integrate_1d(np.conj(phi.values) * psi.values, phi.grid))


def describe(spec: StateSpec) -> str:
    if isinstance(spec, Gaussian):
        return f"gaussian(x0={spec.x0:g}, p0={spec.p0:g}, sigma={spec.sigma:g})"
    if isinstance(spec, Fock):
        return f"fock({spec.level})"
    if isinstance(spec, Cat):
        return f"cat({spec.alpha:g}, {spec.parity})"
    if isinstance(spec, Superposition):
        return "superposition[" + ", ".join(f"{c:g}*{describe(s)}" for c, s in spec.terms) + "]"
    if isinstance(spec, Sampled):
        return f"sampled(n={spec.grid.n})"
    return repr(spec)


# -- JSON / CSV ingestion ----------------------------------------------------


def _complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex numbers are [re, im] pairs, got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, dict):
        return complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
    return complex(float(value))


def parse_state(doc: dict, grid: Grid1D | None = None, base_dir: Path | None = None) -> StateSpec:
    """Build a ``StateSpec`` from its JSON form.

    ``grid`` is required for the ``sampled`` variant, whose data is resampled
    onto it; ``base_dir`` resolves relative CSV paths.
    """
    if not isinstance(doc, dict) or "type" not in doc:
        raise ValueError("state must be an object with a 'type' field")
    kind = doc["type"]
    if kind == "gaussian":
        return Gaussian(float(doc.get("x0", 0.0)), float(doc.get("p0", 0.0)), float(doc.get("sigma", 1.0)))
    if kind == "fock":
        return Fock(int(doc["level"]))
    if kind == "cat":
        return Cat(float(doc["alpha"]), str(doc.get("parity", "+")))
    if kind == "superposition":
        terms = doc.get("terms")
        if not terms:
            raise ValueError("superposition needs a nonempty 'terms' list")
        return Superposition(
            tuple((_complex(t.get("coeff", 1.0)), parse_state(t["state"], grid, base_dir)) for t in terms)
        )
    if kind == "sampled":
        if grid is None:
            raise ValueError("a target grid is required to ingest sampled states")
        if "csv" in doc:
            path = Path(doc["csv"])
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            return load_sampled_csv(path, grid)
        x = np.asarray(doc["x"], dtype=float)
        re = np.asarray(doc["re"], dtype=float)
        im = np.asarray(doc.get("im", np.zeros_like(re)), dtype=float)
        return resample(x, re + 1j * im, grid)
    raise ValueError(f"unknown state type {kind!r}")


def resample(x, values, grid: Grid1D) -> Sampled:
    """Linearly resample ``values(x)`` onto ``grid``; zero outside the data."""
    x = np.asarray(x, dtype=float)
    values = np.asarray(values, dtype=complex)
    if x.ndim != 1 or x.shape != values.shape or x.size < 2:
        raise ValueError("need matching 1D arrays with at least two samples")
    if np.any(np.diff(x) <= 0):
        raise ValueError("sample abscissae must be strictly increasing")
    t = grid.points
    inside = (t >= x[0]) & (t <= x[-1])
    re = np.where(inside, np.interp(t, x, values.real), 0.0)
    im = np.where(inside, np.interp(t, x, values.imag), 0.0)
    return Sampled(re + 1j * im, grid)


def load_sampled_csv(path, grid: Grid1D) -> Sampled:
    """Read a three-column ``x,re,im`` CSV (header optional) onto ``grid``."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row:
                continue
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                if rows:
                    raise
                continue  # header
    data = np.asarray(rows, dtype=float)
    if data.ndim != 2 or data.shape[1] != 3:
        raise ValueError(f"{path}: expected three columns x,re,im")
    return resample(data[:, 0], data[:, 1] + 1j * data[:, 2], grid)
