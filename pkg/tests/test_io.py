import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from wignerlab import Fock, Grid1D, Grid2D, QuasiDensity2D, compute_wigner, realize
from wignerlab import io


@pytest.fixture
def density():
    g = Grid1D(32, 8.0)
    return compute_wigner(realize(Fock(1), g))


def test_density_csv_round_trip(tmp_path, density):
    path = tmp_path / "w.csv"
    io.write_density_csv(path, density)
    text = path.read_bytes()
    assert text.startswith(b"x,p,w\n") and b"\r" not in text and text.endswith(b"\n")
    assert all(not line.endswith(b",") for line in text.splitlines())
    back = io.read_density_csv(path)
    assert back.grid == density.grid
    assert back.values.tobytes() == density.values.tobytes()


def test_density_csv_is_row_major(tmp_path, density):
    path = tmp_path / "w.csv"
    io.write_density_csv(path, density)
    rows = path.read_text().splitlines()[1:3]
    x0, p0, _ = map(float, rows[0].split(","))
    x1, p1, _ = map(float, rows[1].split(","))
    assert x0 == x1 == -8.0 and p1 - p0 == pytest.approx(0.5)


@settings(max_examples=30)
@given(hnp.arrays(np.float64, 5, elements=st.floats(allow_nan=False, allow_infinity=False, width=64)))
def test_csv_floats_are_exact(tmp_path_factory, values):
    path = tmp_path_factory.mktemp("csv") / "v.csv"
    io.write_csv(path, ("v",), (values,))
    back = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=1)
    assert back.tobytes() == values.tobytes()


def test_incomplete_grid_rejected(tmp_path):
    path = tmp_path / "w.csv"
    path.write_text("x,p,w\n" + "\n".join(f"{x},{p},0" for x in (-1.0, -0.5, 0.0, 0.5) for p in (-1.0, 0.0)
                                          if not (x == 0.5 and p == 0.0)) + "\n")
    with pytest.raises(ValueError):
        io.read_density_csv(path)


def test_pgm_scaling_and_orientation(tmp_path):
    g2 = Grid2D(Grid1D(8, 1.0), Grid1D(16, 2.0))
    x, p = g2.mesh()
    vals = x + 10 * p
    meta = io.write_pgm(tmp_path / "w.pgm", vals)
    img = io.read_pgm(tmp_path / "w.pgm")
    assert img.shape == (16, 8)  # rows are p, columns are x
    assert meta["min"] == vals.min() and meta["max"] == vals.max()
    assert img[0, -1] == 255 and img[-1, 0] == 0  # top right: largest x and p
    assert np.all(np.diff(img.astype(int), axis=1) >= 0)


def test_pgm_with_whitespace_valued_pixels(tmp_path):
    vals = np.array([[0.0, 9.0, 10.0, 32.0] * 2] * 8) / 255 * 255
    vals[0, 0] = 255.0  # pin the scale so pixel value = sample value
    io.write_pgm(tmp_path / "a.pgm", vals)
    np.testing.assert_array_equal(io.read_pgm(tmp_path / "a.pgm"), vals.T[::-1].astype(np.uint8))


def test_pgm_constant_image(tmp_path):
    io.write_pgm(tmp_path / "c.pgm", np.full((8, 8), 3.0))
    assert not io.read_pgm(tmp_path / "c.pgm").any()


def test_read_pgm_rejects_other_formats(tmp_path):
    (tmp_path / "x.pgm").write_bytes(b"P2\n1 1\n255\n0\n")
    with pytest.raises(ValueError):
        io.read_pgm(tmp_path / "x.pgm")


def test_json_and_grid_meta(tmp_path):
    g2 = Grid2D(Grid1D(8, 1.0), Grid1D(16, 2.0))
    io.write_json(tmp_path / "m.json", io.grid_meta(g2))
    assert json.loads((tmp_path / "m.json").read_text()) == {"x": {"n": 8, "L": 1.0}, "p": {"n": 16, "L": 2.0}}


def test_quasidensity_immutable(density):
    with pytest.raises(ValueError):
        density.values[0, 0] = 1.0
    assert isinstance(density.with_values(density.values * 0, tag=1), QuasiDensity2D)
