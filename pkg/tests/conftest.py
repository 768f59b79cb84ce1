import warnings

import numpy as np
import pytest

from wignerlab import Cat, Fock, Gaussian, Grid1D, compute_wigner, realize

ACCEPTANCE_N = 512
ACCEPTANCE_L = 12.0

CATALOG = {
    "gaussian(0,0,1)": Gaussian(0.0, 0.0, 1.0),
    "gaussian(1,-0.5,1)": Gaussian(1.0, -0.5, 1.0),
    "gaussian(0,0,2)": Gaussian(0.0, 0.0, 2.0),
    "fock(1)": Fock(1),
    "fock(2)": Fock(2),
    "cat(2,+)": Cat(2.0, "+"),
}
GAUSSIAN_NAMES = ("gaussian(0,0,1)", "gaussian(1,-0.5,1)", "gaussian(0,0,2)")

# criterion number -> (description, passed) filled in by test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


def realize_quiet(spec, grid):
    """Realize without the tail diagnostic (the wide Gaussian trips it on L=12)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return realize(spec, grid)


@pytest.fixture(scope="session")
def acceptance_grid():
    return Grid1D(ACCEPTANCE_N, ACCEPTANCE_L)


@pytest.fixture(scope="session")
def catalog_states(acceptance_grid):
    return {name: realize_quiet(spec, acceptance_grid) for name, spec in CATALOG.items()}


@pytest.fixture(scope="session")
def catalog_wigners(catalog_states):
    return {name: compute_wigner(psi) for name, psi in catalog_states.items()}


@pytest.fixture(scope="session")
def small_grid():
    return Grid1D(256, 10.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        text, ok = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
