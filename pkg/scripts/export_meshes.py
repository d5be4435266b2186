"""Write OBJ meshes for the surface family at a few squareness values."""
import argparse
from pathlib import Path

import numpy as np

from squircle import (NonUniformCone, NonUniformCylinder, Sphube, Sqellipsoid, Sqone, Sqylinder,
                      export_obj, extract_mesh, surface_residual)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="meshes")
    ap.add_argument("--res", type=int, default=48)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    specs = {
        "sphube_s0.5": Sphube(0.5, 1.0),
        "sphube_s0.9": Sphube(0.9, 1.0),
        "sqellipsoid": Sqellipsoid(0.8, 1.2, 1.0, 2.0),
        "sqylinder": Sqylinder(0.9, 1.0, 1.0, 3.0),
        "nucylinder": NonUniformCylinder(1.0, 1.0, 4.0),
        "sqone": Sqone(0.9, 1.0, 1.0, 3.0),
        "nucone": NonUniformCone(1.0, 1.0, 2.0),
    }
    for name, spec in specs.items():
        mesh = extract_mesh(spec, args.res)
        with open(out / f"{name}.obj", "wb") as fh:
            export_obj(mesh, fh)
        worst = np.max(np.abs(surface_residual(spec, *mesh.vertices.T)))
        print(f"{name:>14}: {len(mesh.vertices):6d} vertices {len(mesh.triangles):6d} triangles "
              f"max residual {worst:.1e}")


if __name__ == "__main__":
    main()
