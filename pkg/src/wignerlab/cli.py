"""``wignerlab`` command line interface.

Exit codes: 0 checks passed, 1 a verification failed, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io
from .characterization import (
    MIN_RECONSTRUCTION_ANGLES,
    reconstruct_from_marginals,
    reconstruction_error,
    sinogram_from_state,
    verify_marginal_theorem,
    verify_slice_identity,
)
from .grid import Grid1D
from .marginals import Direction, default_z_grid, pushforward_density
from .quadrature import Observable, density_Z
from .states import StateSpec, describe, parse_state, realize
from .wigner import compute_wigner, negativity_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_TOLERANCES = {"l1": 1e-4, "slice": 1e-4, "recon": 1e-3}
SLICE_ZETAS = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    state: StateSpec
    n: int
    L: float
    angles_deg: list
    tolerances: dict
    output_dir: Path
    hooks: dict = field(default_factory=dict)

    @property
    def grid(self) -> Grid1D:
        return Grid1D(self.n, self.L)

    @property
    def angles(self) -> np.ndarray:
        return np.deg2rad(np.asarray(self.angles_deg, dtype=float))


def _angles_deg(spec) -> list:
    if isinstance(spec, bool):
        raise ConfigError("'angles' must be a count or a list of degrees")
    if isinstance(spec, int):
        if spec < 1:
            raise ConfigError("angle count must be at least 1")
        return [180.0 * k / spec for k in range(spec)]
    if isinstance(spec, list) and spec:
        vals = [float(a) for a in spec]
        if any(not 0 <= a < 180 for a in vals) or any(b <= a for a, b in zip(vals, vals[1:])):
            raise ConfigError("explicit angles must be strictly increasing degrees in [0, 180)")
        return vals
    raise ConfigError("'angles' must be a positive count or a nonempty list of degrees")


def load_config(path, out=None, n=None, L=None) -> RunConfig:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse config {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    try:
        grid_doc = doc.get("grid", {})
        n = int(n if n is not None else grid_doc.get("n", 512))
        L = float(L if L is not None else grid_doc.get("L", 12.0))
        if n < 64 or n & (n - 1):
            raise ConfigError(f"grid n must be a power of two >= 64, got {n}")
        grid = Grid1D(n, L)
        if "state" not in doc:
            raise ConfigError("config has no 'state'")
        state = parse_state(doc["state"], grid, path.parent)
        tolerances = dict(DEFAULT_TOLERANCES)
        tolerances.update({k: float(v) for k, v in doc.get("tolerances", {}).items()})
        if any(not v > 0 for v in tolerances.values()):
            raise ConfigError("tolerances must be positive")
        angles = _angles_deg(doc.get("angles", 36))
        output_dir = Path(out if out is not None else doc.get("output_dir", "out"))
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid config {path}: {exc}") from exc
    return RunConfig(state, n, L, angles, tolerances, output_dir, dict(doc.get("test_hooks", {})))


def _prepare(cfg: RunConfig):
    try:
        cfg.output_dir.mkdir(parents=True, exist_ok=True)
        probe = cfg.output_dir / ".write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise ConfigError(f"output directory {cfg.output_dir} is not writable: {exc}") from exc
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        psi = realize(cfg.state, cfg.grid)
    for wrn in caught:
        print(f"warning: {wrn.message}", file=sys.stderr)
    return psi


def _write_density(out: Path, stem: str, w) -> None:
    io.write_density_csv(out / f"{stem}.csv", w)
    scale = io.write_pgm(out / f"{stem}.pgm", w.values)
    io.write_json(out / f"{stem}.meta.json", {**scale, "grid": io.grid_meta(w.grid)})


def _apply_hooks(cfg: RunConfig, w):
    if cfg.hooks.get("negate_quadrant"):
        x, p = w.grid.mesh()
        return w.with_values(np.where((x > 0) & (p > 0), -w.values, w.values), corrupted="negate_quadrant")
    return w


def cmd_wigner(cfg: RunConfig) -> int:
    psi = _prepare(cfg)
    w = _apply_hooks(cfg, compute_wigner(psi))
    _write_density(cfg.output_dir, "w", w)
    summary = {
        "state": describe(cfg.state),
        "grid": io.grid_meta(w.grid),
        "normalization": w.mass(),
        "imag_residue": w.metadata.get("imag_residue"),
        "negativity": negativity_report(w).to_dict(),
    }
    io.write_json(cfg.output_dir / "summary.json", summary)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    psi = _prepare(cfg)
    w = _apply_hooks(cfg, compute_wigner(psi))
    report = verify_marginal_theorem(psi, cfg.angles, w=w)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report.slice_identity_error = verify_slice_identity(psi, SLICE_ZETAS, cfg.angles, w=w)
    for wrn in caught:
        print(f"warning: {wrn.message}", file=sys.stderr)
    tol = cfg.tolerances
    offending = [deg for deg, r in zip(cfg.angles_deg, report.records) if not r.L1_error <= tol["l1"]]
    doc = report.to_dict()
    doc["metadata"]["state"] = describe(cfg.state)
    doc["tolerances"] = tol
    doc["offending_angles_deg"] = offending
    slice_ok = report.slice_identity_error <= tol["slice"]
    doc["passed"] = not offending and slice_ok
    io.write_json(cfg.output_dir / "report.json", doc)
    if offending:
        print(f"marginal check failed at angles (deg): {offending}", file=sys.stderr)
    if not slice_ok:
        print(f"slice identity error {report.slice_identity_error:.3e} > {tol['slice']:g}", file=sys.stderr)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def cmd_marginal(cfg: RunConfig, angle_deg: float) -> int:
    psi = _prepare(cfg)
    w = _apply_hooks(cfg, compute_wigner(psi))
    theta = np.deg2rad(angle_deg)
    d = Direction.from_angle(theta)
    gz = default_z_grid(w, d)
    g = pushforward_density(w, d, gz)
    dz = density_Z(psi, Observable(d.a, d.b), gz)
    io.write_csv(cfg.output_dir / "marginal.csv", ("z", "pushforward", "density_z"), (gz.points, g.values, dz.values))
    diff = np.abs(g.values - dz.values)
    l1 = float(np.trapezoid(diff, dx=gz.dx))
    io.write_json(
        cfg.output_dir / "marginal.json",
        {"angle_deg": angle_deg, "direction": [d.a, d.b], "L1_error": l1, "Linf_error": float(diff.max())},
    )
    return EXIT_OK if l1 <= cfg.tolerances["l1"] else EXIT_FAIL


def cmd_reconstruct(cfg: RunConfig) -> int:
    if len(cfg.angles_deg) < MIN_RECONSTRUCTION_ANGLES:
        raise ConfigError(f"reconstruction needs at least {MIN_RECONSTRUCTION_ANGLES} angles")
    psi = _prepare(cfg)
    sino = sinogram_from_state(psi, cfg.angles)
    ang = np.repeat(sino.angles, sino.grid.n)
    r = np.tile(sino.grid.points, sino.angles.size)
    io.write_csv(cfg.output_dir / "sinogram.csv", ("angle", "r", "g"), (ang, r, sino.values))
    reference = compute_wigner(psi)
    recon = reconstruct_from_marginals(sino, reference.grid)
    _write_density(cfg.output_dir, "recon", recon)
    err = reconstruction_error(recon, reference)
    i0, j0 = (k // 2 for k in recon.grid.shape)
    report = {
        "state": describe(cfg.state),
        "angles": sino.angles.size,
        "reconstruction_error": err,
        "tolerance": cfg.tolerances["recon"],
        "mass_before_renormalization": recon.metadata["mass_before_renormalization"],
        "imag_residue": recon.metadata["imag_residue"],
        "value_at_origin": float(recon.values[i0, j0]),
        "negativity": negativity_report(recon).to_dict(),
        "passed": err <= cfg.tolerances["recon"],
    }
    io.write_json(cfg.output_dir / "recon_report.json", report)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wignerlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("wigner", "compute the Wigner function and its negativity summary"),
        ("verify", "check every directional marginal against the quadrature density"),
        ("marginal", "write one directional marginal next to its quadrature density"),
        ("reconstruct", "rebuild the Wigner function from quadrature densities"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", help="output directory (overrides output_dir)")
        p.add_argument("--n", type=int, help="grid size override")
        p.add_argument("--L", type=float, help="grid half width override")
        if name == "marginal":
            p.add_argument("--angle", type=float, required=True, help="direction in degrees")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, args.out, args.n, args.L)
        if args.command == "wigner":
            return cmd_wigner(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "marginal":
            return cmd_marginal(cfg, args.angle)
        return cmd_reconstruct(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
