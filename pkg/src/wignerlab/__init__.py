"""Wigner quasidistributions, their directional marginals, and quadrature densities."""

from .characterization import (
    Sinogram,
    VerificationReport,
    angle_fan,
    reconstruct_from_marginals,
    sinogram_from_state,
    sinogram_of,
    uniqueness_probe,
    verify_marginal_theorem,
    verify_slice_identity,
)
from .grid import Grid1D, Grid2D, integrate_1d, integrate_2d, interp_bilinear
from .marginals import Direction, SignedDensity1D, check_direction_scaling, interval_mass, pushforward_density
from .quadrature import Observable, characteristic_rhs, density_P, density_X, density_Z
from .spectral import chirp_ft, frequency_grid, ft1d, ft2d, ift1d, ift2d
from .states import Cat, Fock, Gaussian, Sampled, Superposition, WaveFunction, inner, parse_state, realize
from .wigner import QuasiDensity2D, compute_wigner, compute_wigner_momentum_form, negativity_report, oracle_wigner

__version__ = "0.1.0"

__all__ = [
    "Cat",
    "Direction",
    "Fock",
    "Gaussian",
    "Grid1D",
    "Grid2D",
    "Observable",
    "QuasiDensity2D",
    "Sampled",
    "SignedDensity1D",
    "Sinogram",
    "Superposition",
    "VerificationReport",
    "WaveFunction",
    "angle_fan",
    "characteristic_rhs",
    "check_direction_scaling",
    "chirp_ft",
    "compute_wigner",
    "compute_wigner_momentum_form",
    "density_P",
    "density_X",
    "density_Z",
    "frequency_grid",
    "ft1d",
    "ft2d",
    "ift1d",
    "ift2d",
    "inner",
    "integrate_1d",
    "integrate_2d",
    "interp_bilinear",
    "interval_mass",
    "negativity_report",
    "oracle_wigner",
    "parse_state",
    "pushforward_density",
    "realize",
    "reconstruct_from_marginals",
    "sinogram_from_state",
    "sinogram_of",
    "uniqueness_probe",
    "verify_marginal_theorem",
    "verify_slice_identity",
]
