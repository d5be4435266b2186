"""Disc <-> square mappings built on the FG-squircle.

Square [-1, 1]^2 with coordinates (x, y); unit disc with coordinates (u, v).
Both mappings send concentric circles in the disc to concentric squircles in
the square.

FG-squircular:   u = x sqrt(x^2 + y^2 - x^2 y^2) / sqrt(x^2 + y^2)
elliptical grid: u = x sqrt(1 - y^2 / 2),  v = y sqrt(1 - x^2 / 2)
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .core import SQRT2
from .errors import DomainError

AXIS_EPS = 1e-12
CLAMP_EPS = 1e-12


class Mapping2D(enum.Enum):
    FG_SQUIRCULAR = "fgs"
    ELLIPTICAL_GRID = "eg"


class Direction(enum.Enum):
    SQUARE_TO_DISC = "square2disc"
    DISC_TO_SQUARE = "disc2square"


def _sqrt0(x):
    # radicands may dip a few ulps below zero at the diagonal and the rim
    return math.sqrt(x) if x > 0.0 else 0.0


def square_to_disc(m: Mapping2D, x: float, y: float) -> tuple[float, float]:
    m = Mapping2D(m)
    if m is Mapping2D.ELLIPTICAL_GRID:
        return x * _sqrt0(1.0 - 0.5 * y * y), y * _sqrt0(1.0 - 0.5 * x * x)
    r2 = x * x + y * y
    if r2 == 0.0:
        return 0.0, 0.0
    scale = _sqrt0((r2 - x * x * y * y) / r2)
    return x * scale, y * scale


def _clip1(a):
    return math.copysign(1.0, a) if abs(a) > 1.0 else a


def disc_to_square(m: Mapping2D, u: float, v: float) -> tuple[float, float]:
    m = Mapping2D(m)
    if abs(u) < AXIS_EPS or abs(v) < AXIS_EPS:
        return u, v
    if m is Mapping2D.FG_SQUIRCULAR:
        # x^2 = (S - sqrt(S (S - 4 u^2 v^2))) / (2 v^2),  S = u^2 + v^2.
        # Rationalising gives x = u * sqrt(2 S / (S + sqrt(S (S - 4 u^2 v^2)))),
        # and y = v times the same factor.
        S = u * u + v * v
        root = _sqrt0(S * (S - 4.0 * u * u * v * v))
        scale = math.sqrt(2.0 * S / (S + root))
        return _clip1(u * scale), _clip1(v * scale)
    # 1/2 sqrt(2 + u^2 - v^2 + 2 sqrt2 u) - 1/2 sqrt(2 + u^2 - v^2 - 2 sqrt2 u)
    # == 2 sqrt2 u / (sqrt(...+) + sqrt(...-))
    bx = 2.0 + u * u - v * v
    by = 2.0 - u * u + v * v
    tx, ty = 2.0 * SQRT2 * u, 2.0 * SQRT2 * v
    x = 2.0 * SQRT2 * u / (_sqrt0(bx + tx) + _sqrt0(bx - tx))
    y = 2.0 * SQRT2 * v / (_sqrt0(by + ty) + _sqrt0(by - ty))
    return _clip1(x), _clip1(y)


def disc_to_square_eg_alt(u: float, v: float) -> tuple[float, float]:
    """The sgn-form of the elliptical-grid inverse (equivalent off the axes)."""
    bx = 2.0 + u * u - v * v
    by = 2.0 - u * u + v * v
    sx = 1.0 if u >= 0.0 else -1.0
    sy = 1.0 if v >= 0.0 else -1.0
    x = sx / SQRT2 * _sqrt0(bx - _sqrt0(bx * bx - 8.0 * u * u))
    y = sy / SQRT2 * _sqrt0(by - _sqrt0(by * by - 8.0 * v * v))
    return x, y


def disc_to_square_literal(u: float, v: float) -> tuple[float, float]:
    """FG-squircular inverse in its unrationalised form, with the sgn(uv)/v factor."""
    S = u * u + v * v
    root = _sqrt0(S - _sqrt0(S * (S - 4.0 * u * u * v * v)))
    sg = math.copysign(1.0, u * v)
    return sg / (v * SQRT2) * root, sg / (u * SQRT2) * root


def _check_square(x, y):
    ax, ay = abs(x), abs(y)
    if max(ax, ay) > 1.0 + CLAMP_EPS or not (math.isfinite(x) and math.isfinite(y)):
        return None
    return math.copysign(min(ax, 1.0), x), math.copysign(min(ay, 1.0), y)


def _check_disc(u, v):
    n = math.hypot(u, v)
    if n > 1.0 + CLAMP_EPS or not math.isfinite(n):
        return None
    if n > 1.0:
        return u / n, v / n
    return u, v


def remap_grid(m: Mapping2D, direction: Direction, pts) -> list[tuple[float, float]]:
    """Map each point of ``pts`` in order.

    Points outside the source domain by at most 1e-12 are clamped onto it;
    anything further out raises :class:`DomainError` carrying the index.
    """
    direction = Direction(direction)
    if direction is Direction.SQUARE_TO_DISC:
        check, fn = _check_square, square_to_disc
    else:
        check, fn = _check_disc, disc_to_square
    out = []
    for i, (a, b) in enumerate(pts):
        pt = check(float(a), float(b))
        if pt is None:
            raise DomainError(f"point {i} ({a}, {b}) lies outside the source domain", index=i)
        out.append(fn(m, *pt))
    return out
