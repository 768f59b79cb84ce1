import json
import subprocess
import sys

import numpy as np
import pytest

from wignerlab import Gaussian
from wignerlab import io
from wignerlab.cli import ConfigError, build_parser, load_config, main

INV_PI = 0.3183098861837907


def write_config(tmp_path, name="cfg.json", **over):
    doc = {
        "state": {"type": "gaussian", "x0": 0.0, "p0": 0.0, "sigma": 1.0},
        "grid": {"n": 128, "L": 8.0},
        "angles": 12,
        "tolerances": {"l1": 1e-4, "slice": 1e-4, "recon": 1e-3},
    }
    doc.update(over)
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_load_config_defaults_and_overrides(tmp_path):
    cfg = load_config(write_config(tmp_path, angles=[0, 45, 90]), out=tmp_path / "o", n=256, L=10.0)
    assert cfg.state == Gaussian(0.0, 0.0, 1.0)
    assert (cfg.n, cfg.L) == (256, 10.0)
    np.testing.assert_allclose(cfg.angles, [0, np.pi / 4, np.pi / 2])
    assert cfg.output_dir == tmp_path / "o"
    cfg = load_config(write_config(tmp_path, angles=4))
    assert cfg.angles_deg == [0.0, 45.0, 90.0, 135.0]


@pytest.mark.parametrize(
    "over",
    [{"grid": {"n": 32, "L": 8}}, {"grid": {"n": 100, "L": 8}}, {"angles": 0}, {"angles": [90, 45]},
     {"angles": [180]}, {"angles": True}, {"tolerances": {"l1": 0}}, {"state": {"type": "fock"}},
     {"state": {"type": "wavelet"}}],
)
def test_invalid_configs(tmp_path, over):
    with pytest.raises(ConfigError):
        load_config(write_config(tmp_path, **over))


def test_missing_state_and_bad_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text(json.dumps({"grid": {"n": 64, "L": 8}}))
    with pytest.raises(ConfigError):
        load_config(p)
    p.write_text("")
    with pytest.raises(ConfigError):
        load_config(p)
    p.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        load_config(p)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")


def test_wigner_command(tmp_path, capsys):
    out = tmp_path / "w"
    cfg = write_config(tmp_path, state={"type": "fock", "level": 1})
    assert main(["wigner", "--config", cfg, "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["negativity"]["min_value"] == pytest.approx(-INV_PI, abs=1e-4)
    assert summary["normalization"] == pytest.approx(1.0, abs=1e-6)
    meta = json.loads((out / "w.meta.json").read_text())
    assert meta["grid"] == {"x": {"n": 128, "L": 8.0}, "p": {"n": 128, "L": 8.0}}
    assert meta["min"] == pytest.approx(summary["negativity"]["min_value"])
    back = io.read_density_csv(out / "w.csv")
    assert back.values.min() == meta["min"] and back.values.max() == meta["max"]
    assert io.read_pgm(out / "w.pgm").shape == (128, 128)


def test_wigner_ground_state_nonnegative(tmp_path):
    out = tmp_path / "g"
    assert main(["wigner", "--config", write_config(tmp_path), "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert abs(summary["negativity"]["negative_mass"]) <= 1e-9


def test_tail_warning_goes_to_stderr(tmp_path, capsys):
    cfg = write_config(tmp_path, state={"type": "gaussian", "sigma": 2.0})
    main(["wigner", "--config", cfg, "--out", str(tmp_path / "t")])
    assert "edge amplitude" in capsys.readouterr().err


def test_verify_pass_and_single_angle(tmp_path):
    out = tmp_path / "v"
    assert main(["verify", "--config", write_config(tmp_path, angles=[0]), "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    assert len(report["records"]) == 1 and report["passed"]
    assert report["slice_identity_error"] <= 1e-4


def test_verify_corrupted_lists_angles(tmp_path, capsys):
    out = tmp_path / "bad"
    cfg = write_config(tmp_path, angles=[0, 30, 60], test_hooks={"negate_quadrant": True})
    assert main(["verify", "--config", cfg, "--out", str(out)]) == 1
    report = json.loads((out / "report.json").read_text())
    assert report["offending_angles_deg"] == [0.0, 30.0, 60.0]
    assert not report["passed"]
    assert "30.0" in capsys.readouterr().err


def test_verify_is_deterministic(tmp_path):
    cfg = write_config(tmp_path, state={"type": "cat", "alpha": 1.5, "parity": "-"}, tolerances={"l1": 1e-3})
    for run in ("a", "b"):
        main(["verify", "--config", cfg, "--out", str(tmp_path / run)])
    assert (tmp_path / "a" / "report.json").read_bytes() == (tmp_path / "b" / "report.json").read_bytes()


def test_marginal_command(tmp_path):
    out = tmp_path / "m"
    cfg = write_config(tmp_path, state={"type": "fock", "level": 2}, tolerances={"l1": 1e-3})
    assert main(["marginal", "--config", cfg, "--angle", "45", "--out", str(out)]) == 0
    data = np.loadtxt(out / "marginal.csv", delimiter=",", skiprows=1)
    assert data.shape == (128, 3)
    doc = json.loads((out / "marginal.json").read_text())
    assert doc["L1_error"] <= 1e-3
    np.testing.assert_allclose(data[:, 1], data[:, 2], atol=1e-3)


def test_reconstruct_command(tmp_path):
    out = tmp_path / "r"
    cfg = write_config(tmp_path, state={"type": "fock", "level": 1}, angles=90, grid={"n": 128, "L": 8.0})
    code = main(["reconstruct", "--config", cfg, "--out", str(out)])
    report = json.loads((out / "recon_report.json").read_text())
    assert code == (0 if report["passed"] else 1)
    assert report["value_at_origin"] < -0.25
    recon = io.read_density_csv(out / "recon.csv")
    assert recon.values.min() < 0
    sino = np.loadtxt(out / "sinogram.csv", delimiter=",", skiprows=1)
    assert sino.shape == (90 * 128, 3)
    assert sino[0, 0] == 0.0 and sino[-1, 0] == pytest.approx(np.pi * 89 / 90)


def test_reconstruct_ground_state_180(tmp_path):
    out = tmp_path / "r"
    cfg = write_config(tmp_path, angles=180, grid={"n": 256, "L": 10.0})
    assert main(["reconstruct", "--config", cfg, "--out", str(out)]) == 0
    assert json.loads((out / "recon_report.json").read_text())["reconstruction_error"] <= 1e-3


def test_usage_errors(tmp_path, capsys):
    assert main(["reconstruct", "--config", write_config(tmp_path, angles=4), "--out", str(tmp_path / "x")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["wigner", "--config", str(bad)]) == 2
    assert "cannot parse" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["wigner", "--config", write_config(tmp_path), "--out", str(blocker / "sub")]) == 2


def test_parser_subcommands():
    parser = build_parser()
    args = parser.parse_args(["marginal", "--config", "c.json", "--angle", "30", "--n", "256", "--L", "9"])
    assert (args.command, args.angle, args.n, args.L) == ("marginal", 30.0, 256, 9.0)


def test_module_entry_point(tmp_path):
    cfg = write_config(tmp_path, angles=[0, 90])
    res = subprocess.run([sys.executable, "-m", "wignerlab", "verify", "--config", cfg, "--out", str(tmp_path / "e")],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
