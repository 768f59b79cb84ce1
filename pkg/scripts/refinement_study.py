"""Grid refinement of the marginal check and of the Fourier-slice reconstruction.

For each grid size the script reports the worst marginal L1 gap over a fan
and the relative max error of the reconstruction from quadrature densities.

    python3 scripts/refinement_study.py --state fock2 --sizes 128 256 512
"""

import argparse

from wignerlab import (
    Cat,
    Fock,
    Gaussian,
    Grid1D,
    angle_fan,
    compute_wigner,
    realize,
    reconstruct_from_marginals,
    sinogram_from_state,
    verify_marginal_theorem,
)
from wignerlab.characterization import reconstruction_error

STATES = {"ground": Gaussian(0, 0, 1), "fock1": Fock(1), "fock2": Fock(2), "cat": Cat(2, "+")}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--state", choices=sorted(STATES), default="fock2")
    ap.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512])
    ap.add_argument("--L", type=float, default=10.0)
    ap.add_argument("--angles", type=int, default=36)
    ap.add_argument("--recon-angles", type=int, default=180)
    args = ap.parse_args(argv)

    print(f"{'n':>6} {'max L1':>10} {'ratio':>7} {'recon err':>10}")
    prev = None
    for n in args.sizes:
        psi = realize(STATES[args.state], Grid1D(n, args.L))
        w = compute_wigner(psi)
        l1 = verify_marginal_theorem(psi, angle_fan(args.angles), w=w).max_L1
        recon = reconstruct_from_marginals(sinogram_from_state(psi, angle_fan(args.recon_angles)), w.grid)
        ratio = f"{prev / l1:7.1f}" if prev else " " * 7
        print(f"{n:6d} {l1:10.2e} {ratio} {reconstruction_error(recon, w):10.2e}")
        prev = l1


if __name__ == "__main__":
    main()
