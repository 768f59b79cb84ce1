"""CSV, JSON and PGM writers/readers used by the command line tools.

CSV files are UTF-8, comma separated, ``\\n`` terminated, with a header row.
Floats are written with 17 significant digits so they read back bit-exact.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .grid import Grid1D, Grid2D
from .wigner import QuasiDensity2D

FLOAT_FMT = "%.17g"


def _fmt(v: float) -> str:
    return FLOAT_FMT % v


def write_csv(path, header, columns) -> None:
    cols = [np.asarray(c).ravel() for c in columns]
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in zip(*cols)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_density_csv(path, w: QuasiDensity2D) -> None:
    """Row-major ``x,p,w`` table (``p`` varies fastest)."""
    x, p = w.grid.mesh()
    write_csv(path, ("x", "p", "w"), (x, p, w.values))


def read_density_csv(path) -> QuasiDensity2D:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    xs, ps = np.unique(data[:, 0]), np.unique(data[:, 1])
    grid = Grid2D(Grid1D(xs.size, -xs[0]), Grid1D(ps.size, -ps[0]))
    if data.shape[0] != xs.size * ps.size:
        raise ValueError(f"{path}: not a full tensor grid")
    return QuasiDensity2D(grid, data[:, 2].reshape(grid.shape), {"source": str(path)})


def write_pgm(path, values) -> dict:
    """8-bit binary PGM; 0 is ``min(values)`` and 255 is ``max(values)``.

    ``values[ix, ip]`` is drawn with ``x`` along columns (left to right) and
    ``p`` along rows (top row is the largest ``p``). Returns the scaling.
    """
    values = np.asarray(values, dtype=float)
    lo, hi = float(values.min()), float(values.max())
    span = hi - lo
    scaled = np.zeros_like(values) if span == 0 else (values - lo) / span * 255.0
    image = np.rint(scaled).astype(np.uint8).T[::-1]
    rows, cols = image.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        fh.write(image.tobytes())
    return {"min": lo, "max": hi, "orientation": "columns: x ascending; rows: p descending"}


def read_pgm(path) -> np.ndarray:
    raw = Path(path).read_bytes()
    m = re.match(rb"P5\s+(\d+)\s+(\d+)\s+(\d+)\s", raw)
    if m is None:
        raise ValueError(f"{path}: not a binary PGM")
    cols, rows = int(m.group(1)), int(m.group(2))
    # exactly one whitespace byte separates the header from the pixels
    return np.frombuffer(raw[m.end() :], dtype=np.uint8).reshape(rows, cols)


def grid_meta(grid: Grid2D) -> dict:
    return {"x": {"n": grid.gx.n, "L": grid.gx.L}, "p": {"n": grid.gp.n, "L": grid.gp.L}}


def write_json(path, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
