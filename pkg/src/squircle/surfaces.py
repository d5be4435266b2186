"""Sphube, the n-D squircle, squircular quadrics and their triangle meshes.

Residuals are LHS - RHS of each governing equation, zero on the surface.
Star-shaped solids (sphube, sqellipsoid) are meshed by intersecting a
latitude/longitude fan of rays with the surface; the cylinder and cone
families are meshed by stacking exact 2D cross-section contours.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Union

import numpy as np

from .core import SquircleParams
from .curves import polar_radius
from .errors import DomainError, NumericalFailure


def _check_s(s):
    if not (0.0 <= s <= 1.0):
        raise DomainError(f"squareness must lie in [0, 1], got {s}")


def _check_lengths(**lengths):
    for name, val in lengths.items():
        if not (val > 0.0 and math.isfinite(val)):
            raise DomainError(f"{name} must be positive, got {val}")


@dataclass(frozen=True)
class Sphube:
    s: float
    r: float = 1.0

    def __post_init__(self):
        _check_s(self.s)
        _check_lengths(r=self.r)


@dataclass(frozen=True)
class Sqellipsoid:
    s: float
    a: float
    b: float
    c: float

    def __post_init__(self):
        _check_s(self.s)
        _check_lengths(a=self.a, b=self.b, c=self.c)


@dataclass(frozen=True)
class Sqylinder:
    """Extruded rectellipse, 0 <= z <= c."""

    s: float
    a: float
    b: float
    c: float

    def __post_init__(self):
        _check_s(self.s)
        _check_lengths(a=self.a, b=self.b, c=self.c)


@dataclass(frozen=True)
class NonUniformCylinder:
    """Circle/ellipse at z = 0 morphing into a square/rectangle at z = c."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        _check_lengths(a=self.a, b=self.b, c=self.c)


@dataclass(frozen=True)
class Sqone:
    """Squircular cone with apex at the origin, 0 <= z <= c."""

    s: float
    a: float
    b: float
    c: float

    def __post_init__(self):
        _check_s(self.s)
        _check_lengths(a=self.a, b=self.b, c=self.c)


@dataclass(frozen=True)
class NonUniformCone:
    """Cone whose cross-section grows from a point into a rectangle at z = c."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        _check_lengths(a=self.a, b=self.b, c=self.c)


SurfaceSpec = Union[Sphube, Sqellipsoid, Sqylinder, NonUniformCylinder, Sqone, NonUniformCone]


def surface_residual(spec: SurfaceSpec, x, y, z):
    x2, y2, z2 = np.multiply(x, x), np.multiply(y, y), np.multiply(z, z)
    if isinstance(spec, Sphube):
        k = spec.s * spec.s / (spec.r * spec.r)
        return (x2 + y2 + z2 - k * (x2 * y2 + y2 * z2 + x2 * z2)
                + k * k * x2 * y2 * z2 - spec.r * spec.r)
    if isinstance(spec, Sqellipsoid):
        X, Y, Z = x2 / spec.a ** 2, y2 / spec.b ** 2, z2 / spec.c ** 2
        s2 = spec.s * spec.s
        return X + Y + Z - s2 * (X * Y + X * Z + Y * Z) + s2 * s2 * X * Y * Z - 1.0
    if isinstance(spec, Sqylinder):
        X, Y = x2 / spec.a ** 2, y2 / spec.b ** 2
        return X + Y - spec.s * spec.s * X * Y - 1.0
    if isinstance(spec, NonUniformCylinder):
        X, Y = x2 / spec.a ** 2, y2 / spec.b ** 2
        return X + Y - (z2 / spec.c ** 2) * X * Y - 1.0
    if isinstance(spec, Sqone):
        # polynomial form, free of the 1/z^2 of x^2/a^2 + y^2/b^2 - s^2 c^2 x^2 y^2 / z^2 = z^2/c^2
        return (x2 * z2 / spec.a ** 2 + y2 * z2 / spec.b ** 2
                - spec.s ** 2 * spec.c ** 2 * x2 * y2 - z2 * z2 / spec.c ** 2)
    if isinstance(spec, NonUniformCone):
        X, Y = x2 / spec.a ** 2, y2 / spec.b ** 2
        return X + Y - X * Y - z2 / spec.c ** 2
    raise TypeError(f"unknown surface spec {spec!r}")


def elementary_symmetric(values) -> list[float]:
    """[e_0, e_1, ..., e_n] of ``values`` by the one-variable-at-a-time recurrence."""
    e = [1.0] + [0.0] * len(values)
    for i, v in enumerate(values, start=1):
        for k in range(i, 0, -1):
            e[k] += v * e[k - 1]
    return e


def nd_residual(s: float, r: float, coords) -> float:
    """n-dimensional squircle residual, 1 <= n <= 8.

    sum_k (-1)^(k+1) (s^2/r^2)^(k-1) e_k(x_1^2, ..., x_n^2) - r^2
    """
    coords = list(coords)
    n = len(coords)
    if not 1 <= n <= 8:
        raise ValueError(f"dimension must lie in 1..8, got {n}")
    _check_s(s)
    _check_lengths(r=r)
    e = elementary_symmetric([c * c for c in coords])
    k2 = s * s / (r * r)
    total = 0.0
    for k in range(1, n + 1):
        total += (-1.0) ** (k + 1) * k2 ** (k - 1) * e[k]
    return total - r * r


@dataclass
class TriMesh:
    vertices: np.ndarray = field(default_factory=lambda: np.zeros((0, 3)))
    triangles: np.ndarray = field(default_factory=lambda: np.zeros((0, 3), dtype=np.int64))

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)

    def triangle_areas(self) -> np.ndarray:
        p = self.vertices[self.triangles]
        return 0.5 * np.linalg.norm(np.cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]), axis=1)


def _grid_triangles(rows: int, cols: int, offset: int = 0) -> list[tuple[int, int, int]]:
    """Two triangles per cell of a rows x cols vertex grid that wraps in columns."""
    tris = []
    for i in range(rows - 1):
        for j in range(cols):
            a = offset + i * cols + j
            b = offset + i * cols + (j + 1) % cols
            c = offset + (i + 1) * cols + j
            d = offset + (i + 1) * cols + (j + 1) % cols
            tris.append((a, c, b))
            tris.append((b, c, d))
    return tris


def _star_radii(spec, dirs: np.ndarray) -> np.ndarray:
    """Radius along each unit direction (normalised coordinates) by bisection.

    In normalised coordinates X = x/a, ... the clip box is [-1, 1]^3, so each
    ray is searched on (0, 1/max|d_i|], at most sqrt3.
    """
    if isinstance(spec, Sphube):
        s, scale = spec.s, np.array([spec.r, spec.r, spec.r])
    else:
        s, scale = spec.s, np.array([spec.a, spec.b, spec.c])

    def f(rho):
        X, Y, Z = (rho[:, None] * dirs).T ** 2
        s2 = s * s
        return X + Y + Z - s2 * (X * Y + X * Z + Y * Z) + s2 * s2 * X * Y * Z - 1.0

    hi = 1.0 / np.max(np.abs(dirs), axis=1)
    lo = np.zeros_like(hi)
    f_hi = f(hi)
    bad = np.flatnonzero(f_hi < -1e-12)
    if bad.size:
        raise NumericalFailure(f"no surface crossing along direction {dirs[bad[0]].tolist()}")
    # a second sign change on the ray would mean the solid is not star-shaped
    probe = np.linspace(0.0, 1.0, 17)[1:-1]
    signs = np.stack([np.sign(f(hi * t)) for t in probe] + [np.sign(f_hi)])
    flips = np.sum(np.diff(signs, axis=0) != 0, axis=0)
    if np.any(flips > 1):
        i = int(np.flatnonzero(flips > 1)[0])
        raise NumericalFailure(f"more than one crossing along direction {dirs[i].tolist()}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        inside = f(mid) <= 0.0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
        if np.all(hi - lo <= 4.0 * np.finfo(float).eps * hi):
            break
    rho = 0.5 * (lo + hi)
    return rho[:, None] * dirs * scale


def _mesh_star(spec, res: int) -> TriMesh:
    n_lat, n_lon = res, 2 * res
    theta = math.pi * np.arange(1, n_lat) / n_lat
    phi = 2.0 * math.pi * np.arange(n_lon) / n_lon
    T, P = np.meshgrid(theta, phi, indexing="ij")
    ring = np.column_stack([(np.sin(T) * np.cos(P)).ravel(),
                            (np.sin(T) * np.sin(P)).ravel(),
                            np.cos(T).ravel()])
    dirs = np.vstack([[0.0, 0.0, 1.0], ring, [0.0, 0.0, -1.0]])
    verts = _star_radii(spec, dirs)

    top, bottom = 0, len(dirs) - 1
    rows = n_lat - 1
    tris = []
    for j in range(n_lon):
        tris.append((top, 1 + j, 1 + (j + 1) % n_lon))
        base = 1 + (rows - 1) * n_lon
        tris.append((bottom, base + (j + 1) % n_lon, base + j))
    tris += _grid_triangles(rows, n_lon, offset=1)
    return TriMesh(verts, tris)


def _cross_section(spec, z: float):
    """(a', b', s') of the rectellipse cut at height z, or None at an apex."""
    if isinstance(spec, Sqylinder):
        return spec.a, spec.b, spec.s
    if isinstance(spec, NonUniformCylinder):
        return spec.a, spec.b, min(z / spec.c, 1.0)
    if isinstance(spec, Sqone):
        h = z / spec.c
        s_eff = spec.s * spec.a * spec.b
        if s_eff > 1.0:
            raise NumericalFailure(
                f"cross-sections are not closed: s*a*b = {s_eff} exceeds 1")
        return (spec.a * h, spec.b * h, s_eff) if h > 0.0 else None
    if isinstance(spec, NonUniformCone):
        h = min(z / spec.c, 1.0)
        return (spec.a * h, spec.b * h, h) if h > 0.0 else None
    raise TypeError(f"cannot stack cross-sections of {spec!r}")


def _mesh_stacked(spec, res: int) -> TriMesh:
    n_z, n_ring = res, 2 * res
    theta = 2.0 * math.pi * np.arange(n_ring) / n_ring
    zs = spec.c * np.arange(n_z + 1) / n_z
    verts = []
    apex = None
    for z in zs:
        sec = _cross_section(spec, float(z))
        if sec is None:
            apex = len(verts)
            verts.append(np.array([[0.0, 0.0, z]]))
            continue
        a, b, s = sec
        rho = polar_radius(SquircleParams(s, 1.0), theta)
        verts.append(np.column_stack([a * rho * np.cos(theta), b * rho * np.sin(theta),
                                      np.full(n_ring, z)]))
    verts = np.vstack(verts)
    tris = []
    if apex is not None:
        # the apex is the first level; fan it into the first ring
        for j in range(n_ring):
            tris.append((apex, 1 + (j + 1) % n_ring, 1 + j))
        tris += _grid_triangles(n_z, n_ring, offset=1)
    else:
        tris += _grid_triangles(n_z + 1, n_ring)
    return TriMesh(verts, tris)


def extract_mesh(spec: SurfaceSpec, resolution: int) -> TriMesh:
    """Triangulate ``spec``; ``resolution`` counts latitude bands or z levels.

    Cylinders and cones are open surfaces (no end caps).
    """
    if resolution < 8:
        raise ValueError(f"resolution must be at least 8, got {resolution}")
    if isinstance(spec, (Sphube, Sqellipsoid)):
        return _mesh_star(spec, resolution)
    return _mesh_stacked(spec, resolution)


def export_obj(mesh: TriMesh, sink: IO[bytes]) -> None:
    """Write ``v x y z`` lines then 1-based ``f i j k`` lines."""
    lines = [f"v {x:.9g} {y:.9g} {z:.9g}\n" for x, y, z in mesh.vertices]
    lines += [f"f {i + 1} {j + 1} {k + 1}\n" for i, j, k in mesh.triangles]
    sink.write("".join(lines).encode("ascii"))
