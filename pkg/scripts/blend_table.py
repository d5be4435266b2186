"""Tabulate squareness, corner position and area along the linear blend parameter."""
import argparse

import numpy as np

from squircle import MIDWAY_SQUARENESS, SquircleParams, area_complete, blend_corner, perimeter, squareness_from_blend


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument("--r", type=float, default=1.0)
    args = ap.parse_args()
    print(f"{'tau':>6} {'s':>14} {'corner':>12} {'area':>14} {'perimeter':>14}")
    for tau in np.linspace(0.0, 1.0, args.steps + 1):
        s = squareness_from_blend(float(tau))
        p = SquircleParams(s, args.r)
        print(f"{tau:6.3f} {s:14.10f} {blend_corner(tau, args.r)[0]:12.8f} "
              f"{area_complete(p):14.10f} {perimeter(p):14.10f}")
    print(f"midway squareness (closed form): {MIDWAY_SQUARENESS:.12f}")


if __name__ == "__main__":
    main()
