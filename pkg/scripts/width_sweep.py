"""Max error of the even-part transform of exp(-(6 pi t)^2) against kernel width c.

    python3 scripts/width_sweep.py --h 0.004 --N 30 --c 0.0005 0.001 0.002 0.004

Small c keeps the Gaussian window close to 1 over the band of interest but
under-samples the kernel; large c smooths more. The sweep makes the trade-off
visible for a fixed (h, N).
"""
import argparse
import sys

import numpy as np

from voigtft.reference import g_even_ft
from voigtft.sampling import FitParams
from voigtft.transform import ft_combined, make_grid


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--h", type=float, default=0.004)
    parser.add_argument("--N", type=int, default=30)
    parser.add_argument("--c", type=float, nargs="+",
                        default=[0.0005, 0.001, 0.0015, 0.002, 0.003, 0.004, 0.006])
    args = parser.parse_args(argv)

    nu = make_grid(-60, 60, 0.25)
    ref = g_even_ft(nu)
    print("c,max_abs_diff")
    for c in args.c:
        z = ft_combined(lambda t: np.exp(-((6 * np.pi * t) ** 2)), FitParams(args.h, c, args.N), nu)
        print(f"{c:g},{np.max(np.abs(z.real - ref)):.6e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
