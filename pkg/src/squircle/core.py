"""The FG-squircle and rectellipse as implicit curves.

Curve:        x^2 + y^2 - (s^2/r^2) x^2 y^2 = r^2,  clipped to |x|, |y| <= r
Rectellipse:  x^2/a^2 + y^2/b^2 - s^2 x^2 y^2 / (a^2 b^2) = 1

All evaluators accept scalars or numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularInputError

SQRT2 = math.sqrt(2.0)

# squareness of the shape halfway (tau = 0.5) between circle and square
MIDWAY_SQUARENESS = math.sqrt(736.0 * SQRT2 - 1040.0)


@dataclass(frozen=True)
class SquircleParams:
    """Squareness ``s`` in [0, 1] and radius ``r`` > 0."""

    s: float
    r: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.s <= 1.0):
            raise DomainError(f"squareness must lie in [0, 1], got {self.s}")
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise DomainError(f"radius must be positive and finite, got {self.r}")

    @classmethod
    def from_blend(cls, tau: float, r: float = 1.0) -> "SquircleParams":
        return cls(squareness_from_blend(tau), r)


@dataclass(frozen=True)
class RectellipseParams:
    a: float
    b: float
    s: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise DomainError(f"semi-axes must be positive, got a={self.a}, b={self.b}")
        if not (0.0 <= self.s <= 1.0):
            raise DomainError(f"squareness must lie in [0, 1], got {self.s}")


def implicit_residual(p: SquircleParams, x, y):
    """x^2 + y^2 - (s^2/r^2) x^2 y^2 - r^2; zero on the curve, negative inside."""
    x2 = np.multiply(x, x)
    y2 = np.multiply(y, y)
    return x2 + y2 - (p.s * p.s / (p.r * p.r)) * x2 * y2 - p.r * p.r


def contains(p: SquircleParams, x, y):
    """Closed-region membership: on or inside the curve and inside the clip box."""
    inside = implicit_residual(p, x, y) <= 0.0
    in_box = np.logical_and(np.abs(x) <= p.r, np.abs(y) <= p.r)
    return np.logical_and(inside, in_box)


def squareness_from_blend(tau: float) -> float:
    """Map the linear blend parameter to squareness.

    ``tau`` moves the top-right corner point of the curve linearly from the
    circle's (r/sqrt2, r/sqrt2) to the square's (r, r).
    """
    if not (0.0 <= tau <= 1.0):
        raise DomainError(f"blend parameter must lie in [0, 1], got {tau}")
    if tau == 1.0:
        # ds/dtau vanishes here, so rounding at the endpoint would be amplified
        # by any inverse; return the exact value
        return 1.0
    # with g = (sqrt2 - 1) tau:
    #   (3 - 2 sqrt2) tau^2 - (2 - 2 sqrt2) tau = g (2 + g)
    #   (1 - (1 - sqrt2) tau)^2                 = (1 + g)^2
    g = (SQRT2 - 1.0) * tau
    s = 2.0 * math.sqrt(g * (2.0 + g)) / (1.0 + g) ** 2
    return min(max(s, 0.0), 1.0)


def blend_from_squareness(s: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Inverse of :func:`squareness_from_blend` by bisection on [0, 1]."""
    if not (0.0 <= s <= 1.0):
        raise DomainError(f"squareness must lie in [0, 1], got {s}")
    if s == 0.0:
        return 0.0
    if s == 1.0:
        return 1.0
    lo, hi = 0.0, 1.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if squareness_from_blend(mid) < s:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def blend_corner(tau: float, r: float = 1.0) -> tuple[float, float]:
    """Top-right corner point at blend ``tau`` (it lies on the diagonal)."""
    c = r * (SQRT2 / 2.0 * (1.0 - tau) + tau)
    return c, c


def squareness_from_point(x: float, y: float, r: float = 1.0) -> float:
    """The squareness whose curve of radius ``r`` passes through (x, y)."""
    if x * y == 0.0:
        raise SingularInputError("squareness is undetermined for points on an axis")
    if abs(x) > r or abs(y) > r:
        raise DomainError(f"point ({x}, {y}) lies outside the clip box of radius {r}")
    radicand = x * x + y * y - r * r
    if radicand < 0.0:
        if radicand > -1e-14:
            radicand = 0.0
        else:
            raise DomainError(f"point ({x}, {y}) lies inside the circle of radius {r}")
    return abs(r / (x * y)) * math.sqrt(radicand)


def rectellipse_residual(q: RectellipseParams, x, y):
    X = np.multiply(x, x) / (q.a * q.a)
    Y = np.multiply(y, y) / (q.b * q.b)
    return X + Y - q.s * q.s * X * Y - 1.0
