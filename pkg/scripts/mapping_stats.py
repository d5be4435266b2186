"""Round-trip error statistics for the disc/square and sphere/cube mappings."""
import argparse
from collections import Counter

import numpy as np

from squircle import Mapping2D, cube_to_sphere, disc_to_square, sphere_to_cube, square_to_disc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    for m in Mapping2D:
        errs = [np.max(np.abs(np.subtract(disc_to_square(m, *square_to_disc(m, x, y)), (x, y))))
                for x, y in rng.uniform(-1, 1, (args.n, 2))]
        print(f"2D {m.value:>3}: square -> disc -> square  max {max(errs):.2e}  mean {np.mean(errs):.2e}")

    stats = Counter()
    errs = []
    for pt in rng.uniform(-1, 1, (args.n, 3)):
        errs.append(np.max(np.abs(np.subtract(sphere_to_cube(*cube_to_sphere(*pt), stats=stats), pt))))
    print(f"3D cube -> sphere -> cube  max {max(errs):.2e}  mean {np.mean(errs):.2e}")
    total = sum(stats.values())
    for branch, count in stats.most_common():
        print(f"   {branch:>12}: {count:6d} ({100.0 * count / total:.1f}%)")


if __name__ == "__main__":
    main()
