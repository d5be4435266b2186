"""Volumetric cube <-> sphere mapping through the shrunken sphube.

Cube C = [-1, 1]^3 with (x, y, z); unit ball with (u, v, w).  The mapping is
radial and satisfies the squircularity condition

    u^2 + v^2 + w^2 = x^2 + y^2 + z^2 - x^2 y^2 - y^2 z^2 - x^2 z^2 + x^2 y^2 z^2.

The inverse substitutes y = (v/u) x, z = (w/u) x, which leaves a cubic in
t = x^2 solved with the cubic formula (real Cardano root when the
discriminant is <= 0, De Moivre's trigonometric form otherwise).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalFailure
from .map2d import Mapping2D, disc_to_square

AXIS_EPS = 1e-12
CLAMP_EPS = 1e-12
_TRIPLE_TOL = 1e-12
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class CubicCoeffs:
    """a t^3 + b t^2 + c t + d = 0 with t = x^2."""

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_sphere_point(cls, u: float, v: float, w: float) -> "CubicCoeffs":
        u2, v2, w2 = u * u, v * v, w * w
        a = v2 * w2 / (u2 * u2)
        return cls(a=a,
                   b=-(v2 / u2 + w2 / u2 + a),
                   c=1.0 + v2 / u2 + w2 / u2,
                   d=-(u2 + v2 + w2))

    @property
    def discriminant(self) -> float:
        a, b, c, d = self.a, self.b, self.c, self.d
        return (18.0 * a * b * c * d - 4.0 * b ** 3 * d + b * b * c * c
                - 4.0 * a * c ** 3 - 27.0 * a * a * d * d)

    def __call__(self, t):
        return ((self.a * t + self.b) * t + self.c) * t + self.d

    def derivative(self, t):
        return (3.0 * self.a * t + 2.0 * self.b) * t + self.c

    def scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))


def _upper_bracket(cf: CubicCoeffs) -> float:
    # a = k^2 l^2 and c - 1 = k^2 + l^2 for the ratios k = v/u, l = w/u; inside
    # the cube t <= 1 / max(1, k^2, l^2), where the root is unique.
    p = cf.c - 1.0
    disc = max(p * p - 4.0 * cf.a, 0.0)
    z_max = 0.5 * (p + math.sqrt(disc))
    return 1.0 / max(1.0, z_max)


def _formula_root(cf: CubicCoeffs):
    """Root selected by the cubic formula, with the name of the branch used."""
    a, b, c = cf.a, cf.b, cf.c
    D0 = cf.discriminant
    delta0 = b * b - 3.0 * a * c
    r0 = 0.5 * (2.0 * b ** 3 - 9.0 * a * b * c + 27.0 * a * a * cf.d)
    s = cf.scale()
    if abs(delta0) <= _TRIPLE_TOL * s * s and abs(D0) <= _TRIPLE_TOL * s ** 4:
        # triple root: C0 = 0 and the formula is 0/0
        return -b / (3.0 * a), "triple_root"
    if D0 <= 0.0:
        q = 0.5 * math.sqrt(-27.0 * a * a * D0)
        # either sign of the square root yields the same real root; take the
        # one that does not cancel against r0
        C0 = float(np.cbrt(r0 + math.copysign(q, r0)))
        if C0 == 0.0:
            return -b / (3.0 * a), "triple_root"
        return -(b + C0 + delta0 / C0) / (3.0 * a), "cardano"
    q0 = 0.5 * math.sqrt(27.0 * a * a * D0)
    theta = math.atan2(q0, r0)
    modulus = (r0 * r0 + q0 * q0) ** (1.0 / 6.0)
    return -(b + 2.0 * modulus * math.cos(theta / 3.0)) / (3.0 * a), "de_moivre"


def _all_real_roots(cf: CubicCoeffs):
    roots = np.roots([cf.a, cf.b, cf.c, cf.d])
    return [float(z.real) for z in roots if abs(z.imag) <= 1e-9 * max(1.0, abs(z))]


def solve_even_sextic(cf: CubicCoeffs, stats: Counter | None = None) -> float:
    """Return t = x^2 in [0, 1] solving the cubic built from a sphere point.

    The cubic-formula root is checked against the bracket [0, t_max] that
    holds the unique in-cube root, falls back to the in-bracket real root
    with the smallest residual if needed, and is then polished with
    bracketed Newton steps.  ``stats`` (a Counter) records the branch taken.
    """
    if not cf.a > 0.0:
        raise NumericalFailure(f"leading coefficient must be positive, got {cf.a}")
    t_max = _upper_bracket(cf)
    scale = cf.scale()
    t, branch = _formula_root(cf)
    slack = 1e-9
    if not (math.isfinite(t) and -slack <= t <= t_max * (1.0 + slack)):
        candidates = [z for z in _all_real_roots(cf) if -slack <= z <= t_max * (1.0 + slack)]
        if not candidates:
            raise NumericalFailure(f"no real root of {cf} in [0, {t_max}]")
        t = min(candidates, key=lambda z: abs(cf(z)))
        branch = "fallback"
    if stats is not None:
        stats[branch] += 1
    t = min(max(t, 0.0), t_max)

    # p(0) = d < 0 <= p(t_max) and p is increasing on the bracket
    lo, hi = 0.0, t_max
    for _ in range(100):
        val = cf(t)
        if abs(val) <= 4.0 * _EPS * scale:
            break
        if val < 0.0:
            lo = t
        else:
            hi = t
        slope = cf.derivative(t)
        nxt = t - val / slope if slope > 0.0 else 0.5 * (lo + hi)
        if not (lo < nxt < hi):
            nxt = 0.5 * (lo + hi)
        if nxt == t or hi - lo <= 2.0 * _EPS * max(t, 1e-300):
            t = nxt
            break
        t = nxt
    if abs(cf(t)) > 1e-9 * scale:
        raise NumericalFailure(f"cubic residual {abs(cf(t)):.3e} exceeds tolerance for {cf}")
    return t


def cube_to_sphere(x: float, y: float, z: float) -> tuple[float, float, float]:
    x2, y2, z2 = x * x, y * y, z * z
    r2 = x2 + y2 + z2
    if r2 == 0.0:
        return 0.0, 0.0, 0.0
    s2 = r2 - x2 * y2 - y2 * z2 - x2 * z2 + x2 * y2 * z2
    m = math.sqrt(max(s2, 0.0)) / math.sqrt(r2)
    return x * m, y * m, z * m


def _clip1(a):
    return math.copysign(1.0, a) if abs(a) > 1.0 else a


def sphere_to_cube(u: float, v: float, w: float,
                   stats: Counter | None = None) -> tuple[float, float, float]:
    """Inverse of :func:`cube_to_sphere`.

    Points within 1e-12 of a coordinate plane use the special cases: the
    origin maps to itself, axis points pass through unchanged, and points in
    a coordinate plane use the 2D FG-squircular inverse.
    """
    n2 = u * u + v * v + w * w
    if n2 > (1.0 + CLAMP_EPS) ** 2 or not math.isfinite(n2):
        raise DomainError(f"({u}, {v}, {w}) lies outside the unit ball")
    if n2 > 1.0:
        n = math.sqrt(n2)
        u, v, w = u / n, v / n, w / n

    coords = [u, v, w]
    zero = [abs(c) < AXIS_EPS for c in coords]
    nz = sum(zero)
    if nz == 3:
        if stats is not None:
            stats["origin"] += 1
        return 0.0, 0.0, 0.0
    if nz == 2:
        if stats is not None:
            stats["axis"] += 1
        return u, v, w
    if nz == 1:
        if stats is not None:
            stats["plane"] += 1
        k = zero.index(True)
        i, j = [m for m in range(3) if m != k]
        out = [0.0, 0.0, 0.0]
        out[i], out[j] = disc_to_square(Mapping2D.FG_SQUIRCULAR, coords[i], coords[j])
        return tuple(out)

    # pivot on the largest coordinate so that |v/u|, |w/u| <= 1 and t <= 1
    p = max(range(3), key=lambda m: abs(coords[m]))
    q, r = [m for m in range(3) if m != p]
    cp = coords[p]
    cf = CubicCoeffs.from_sphere_point(cp, coords[q], coords[r])
    t = solve_even_sextic(cf, stats)
    xp = math.copysign(math.sqrt(t), cp)
    out = [0.0, 0.0, 0.0]
    out[p] = _clip1(xp)
    out[q] = _clip1(coords[q] / cp * xp)
    out[r] = _clip1(coords[r] / cp * xp)
    return tuple(out)


def squircularity_gap(cube_pt, sphere_pt) -> float:
    """|u^2 + v^2 + w^2 - (x^2 + y^2 + z^2 - x^2y^2 - y^2z^2 - x^2z^2 + x^2y^2z^2)|."""
    x, y, z = cube_pt
    u, v, w = sphere_pt
    x2, y2, z2 = x * x, y * y, z * z
    shell = x2 + y2 + z2 - x2 * y2 - y2 * z2 - x2 * z2 + x2 * y2 * z2
    return abs(u * u + v * v + w * w - shell)
