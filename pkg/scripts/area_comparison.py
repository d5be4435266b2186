"""Compare the closed-form, quadrature and Monte Carlo areas over a range of squareness."""
import argparse
import time

from squircle import SquircleParams, area_complete, area_incomplete, area_monte_carlo


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1_000_000, help="Monte Carlo samples per shape")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    print(f"{'s':>6} {'complete':>18} {'quadrature':>18} {'monte carlo':>12} {'3 sigma':>9} {'in band':>7}")
    t0 = time.perf_counter()
    for s in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.928, 0.99, 1.0):
        p = SquircleParams(s)
        exact = area_complete(p)
        quad = area_incomplete(p) if s > 0 else exact
        mc = area_monte_carlo(p, args.n, args.seed, workers=args.workers)
        print(f"{s:6.3f} {exact:18.15f} {quad:18.15f} {mc.area:12.6f} {mc.half_width:9.2e} "
              f"{abs(mc.area - exact) <= mc.half_width!s:>7}")
    print(f"elapsed {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
