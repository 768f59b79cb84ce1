import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wignerlab import Grid1D, Grid2D, integrate_1d, integrate_2d, interp_bilinear
from wignerlab.grid import interp_linear

finite = st.floats(-5, 5, allow_nan=False)


@pytest.mark.parametrize("n", [0, 4, 7, 12, 100, 2.5])
def test_grid_rejects_bad_sizes(n):
    with pytest.raises(ValueError):
        Grid1D(n, 1.0)


@pytest.mark.parametrize("L", [0.0, -1.0, np.inf, np.nan])
def test_grid_rejects_bad_half_width(L):
    with pytest.raises(ValueError):
        Grid1D(8, L)


def test_points_half_open_and_centered():
    g = Grid1D(8, 1.0)
    assert g.dx == 0.25
    np.testing.assert_array_equal(g.points, -1.0 + 0.25 * np.arange(8))
    assert g.points[g.n // 2] == 0.0
    assert not g.points.flags.writeable


@given(st.integers(3, 12), st.floats(0.1, 50))
def test_points_strictly_increasing_and_symmetric(k, L):
    g = Grid1D(2**k, L)
    assert np.all(np.diff(g.points) > 0)
    # symmetric up to the single unmatched node at -L
    np.testing.assert_allclose(g.points[1:], -g.points[1:][::-1], atol=1e-12 * L)


def test_integrate_zero_and_constant():
    g = Grid1D(8, 1.0)
    assert integrate_1d(np.zeros(8), g) == 0.0
    assert integrate_1d(np.ones(8), g) == pytest.approx(1.75, abs=1e-15)


def test_integrate_gaussian():
    g = Grid1D(512, 10.0)
    f = np.exp(-g.points**2) / np.sqrt(np.pi)
    assert abs(integrate_1d(f, g) - 1.0) <= 1e-10


def test_integrate_wrong_length():
    with pytest.raises(ValueError):
        integrate_1d(np.ones(7), Grid1D(8, 1.0))


@given(finite, finite, st.integers(0, 2**31 - 1))
def test_integrate_linear(alpha, beta, seed):
    g = Grid1D(64, 3.0)
    r = np.random.default_rng(seed)
    f, h = r.standard_normal(64), r.standard_normal(64)
    lhs = integrate_1d(alpha * f + beta * h, g)
    rhs = alpha * integrate_1d(f, g) + beta * integrate_1d(h, g)
    assert lhs == pytest.approx(rhs, abs=1e-12 * (1 + abs(alpha) + abs(beta)) * 64)


def test_trapezoid_second_order_on_compact_bump():
    # smooth bump with finitely many derivatives at the edges, so the rule is
    # only second order and the factor of four is visible
    def bump(x):
        return np.where(np.abs(x - 0.3) < 1, (1 - (x - 0.3) ** 2) ** 3, 0.0)

    exact = 32.0 / 35.0
    errs = []
    for n in (32, 64, 128, 256):
        g = Grid1D(n, 2.0)
        errs.append(abs(integrate_1d(bump(g.points), g) - exact))
    for coarse, fine in zip(errs, errs[1:]):
        assert fine <= coarse / 4 * 1.05


def test_shifted_gaussian_refines():
    errs = []
    for n in (16, 32):
        g = Grid1D(n, 8.0)
        f = np.exp(-((g.points - 0.7) ** 2)) / np.sqrt(np.pi)
        errs.append(abs(integrate_1d(f, g) - 1.0))
    assert errs[1] <= errs[0] / 4


def test_integrate_2d_product():
    g = Grid1D(512, 10.0)
    g2 = Grid2D(g, g)
    f = np.exp(-g.points**2) / np.sqrt(np.pi)
    assert abs(integrate_2d(np.outer(f, f), g2) - 1.0) <= 1e-9
    assert integrate_2d(np.zeros(g2.shape), g2) == 0.0


def test_integrate_2d_shape_check():
    g2 = Grid2D(Grid1D(8, 1.0), Grid1D(16, 1.0))
    assert g2.shape == (8, 16)
    with pytest.raises(ValueError):
        integrate_2d(np.zeros((16, 8)), g2)


def test_bilinear_examples():
    g2 = Grid2D(Grid1D(8, 1.0), Grid1D(8, 1.0))
    vals = np.zeros(g2.shape)
    vals[3, 3], vals[3, 4], vals[4, 3], vals[4, 4] = 0.0, 0.0, 2.0, 2.0
    x = 0.5 * (g2.gx.points[3] + g2.gx.points[4])
    p = 0.5 * (g2.gp.points[3] + g2.gp.points[4])
    assert interp_bilinear(vals, g2, x, p) == pytest.approx(1.0)
    assert interp_bilinear(np.ones(g2.shape), g2, x, p) == pytest.approx(1.0)


def test_bilinear_out_of_box_is_zero():
    g2 = Grid2D(Grid1D(8, 1.0), Grid1D(8, 1.0))
    ones = np.ones(g2.shape)
    assert interp_bilinear(ones, g2, 1.5, 0.0) == 0.0
    assert interp_bilinear(ones, g2, 0.0, -1.01) == 0.0
    assert interp_linear(np.ones(8), g2.gx, [-2.0, 0.9]).tolist() == [0.0, 0.0]


@settings(max_examples=50)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 2**31 - 1))
def test_bilinear_exact_at_nodes(i, j, seed):
    g2 = Grid2D(Grid1D(16, 2.0), Grid1D(16, 3.0))
    vals = np.random.default_rng(seed).standard_normal(g2.shape)
    assert interp_bilinear(vals, g2, g2.gx.points[i], g2.gp.points[j]) == pytest.approx(vals[i, j], abs=1e-13)


@given(finite, finite, finite, finite, st.floats(-1.0, 0.874), st.floats(-1.5, 1.312))
def test_bilinear_reproduces_bilinear_functions(c0, c1, c2, c3, x, p):
    g2 = Grid2D(Grid1D(16, 1.0), Grid1D(16, 1.5))
    X, P = g2.mesh()
    f = lambda x, p: c0 + c1 * x + c2 * p + c3 * x * p  # noqa: E731
    got = interp_bilinear(f(X, P), g2, x, p)
    assert got == pytest.approx(f(x, p), abs=1e-12)
