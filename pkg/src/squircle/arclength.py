"""Numerical arc length of the FG-squircle along three independent routes.

No closed form is known, so each route integrates its own length element:

* Cartesian   sqrt(1 + f'(x)^2) dx on the upper-right branch y = f(x)
* parametric  |(x'(t), y'(t))| dt for any :class:`CurveForm`
* polar       sqrt(rho^2 + rho'(theta)^2) d theta
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .core import SquircleParams
from .curves import CurveForm, param_point, polar_radius
from .errors import DomainError
from .quadrature import integrate

TOL = 1e-10
QUARTER_PI = 0.25 * math.pi


class ArcMethod(enum.Enum):
    CARTESIAN = "cartesian"
    PARAMETRIC = "parametric"
    POLAR = "polar"


def _step(t):
    return 1e-6 * np.maximum(1.0, np.abs(t))


def _kinks(lo, hi):
    """Odd multiples of pi/4 (square corners) and multiples of pi/2 inside (lo, hi)."""
    k0 = math.ceil(lo / QUARTER_PI)
    k1 = math.floor(hi / QUARTER_PI)
    return [k * QUARTER_PI for k in range(k0, k1 + 1) if lo < k * QUARTER_PI < hi]


def arclength_cartesian(p: SquircleParams, x1: float, x2: float) -> float:
    """Length of y = f(x) on the first-quadrant branch, 0 <= x1 <= x2 <= r.

    With x = r sin(psi) the 1/sqrt(r^2 - x^2) factor of f' cancels against dx,
    leaving the bounded integrand

        sqrt(r^2 cos^2 psi + [r^3 x (s^2 - 1) / (r^2 - s^2 x^2)^(3/2)]^2).
    """
    s, r = p.s, p.r
    if not (0.0 <= x1 <= x2 <= r):
        raise ValueError(f"need 0 <= x1 <= x2 <= r, got x1={x1}, x2={x2}, r={r}")
    if x1 == x2:
        return 0.0
    psi1 = math.asin(min(x1 / r, 1.0))
    psi2 = math.asin(min(x2 / r, 1.0))
    slope_num = r ** 3 * (s * s - 1.0)

    def integrand(psi):
        x = r * np.sin(psi)
        c = r * np.cos(psi)
        inner = (r - s * x) * (r + s * x)
        if s == 1.0:
            # f' vanishes identically on the flat top edge
            return np.abs(c)
        slope = slope_num * x / inner ** 1.5
        return np.sqrt(c * c + slope * slope)

    return integrate(integrand, psi1, psi2, abs_tol=1e-12, rel_tol=1e-12)


def arclength_parametric(p: SquircleParams, form: CurveForm, t1: float, t2: float) -> float:
    """Length of the parametric curve between ``t1`` and ``t2`` (t1 <= t2).

    Velocities come from central differences with h = 1e-6 max(1, |t|).
    """
    if t2 < t1:
        raise ValueError(f"need t1 <= t2, got {t1}, {t2}")
    form = CurveForm(form)

    def speed(t):
        h = _step(t)
        xp, yp = param_point(p, form, t + h)
        xm, ym = param_point(p, form, t - h)
        return np.hypot(xp - xm, yp - ym) / (2.0 * h)

    return integrate(speed, t1, t2, abs_tol=TOL, rel_tol=TOL, breakpoints=_kinks(t1, t2))


def arclength_polar(p: SquircleParams, theta1: float, theta2: float) -> float:
    """Length of the curve between polar angles ``theta1 <= theta2``."""
    if theta2 < theta1:
        raise ValueError(f"need theta1 <= theta2, got {theta1}, {theta2}")

    def element(theta):
        h = _step(theta)
        drho = (polar_radius(p, theta + h) - polar_radius(p, theta - h)) / (2.0 * h)
        return np.hypot(polar_radius(p, theta), drho)

    return integrate(element, theta1, theta2, abs_tol=TOL, rel_tol=TOL,
                     breakpoints=_kinks(theta1, theta2))


def perimeter(p: SquircleParams, method: ArcMethod = ArcMethod.POLAR,
              form: CurveForm = CurveForm.ELLIPTIC_GRID_1) -> float:
    """Full perimeter; 2 pi r <= perimeter <= 8 r."""
    method = ArcMethod(method)
    if method is ArcMethod.POLAR:
        return arclength_polar(p, 0.0, 2.0 * math.pi)
    if method is ArcMethod.PARAMETRIC:
        return arclength_parametric(p, form, 0.0, 2.0 * math.pi)
    # eight copies of the arc from the top of the curve to the diagonal
    x_diag = float(polar_radius(p, QUARTER_PI)) / math.sqrt(2.0)
    return 8.0 * arclength_cartesian(p, 0.0, min(x_diag, p.r))


def arclength(p: SquircleParams, start: float, stop: float,
              method: ArcMethod = ArcMethod.POLAR,
              form: CurveForm = CurveForm.ELLIPTIC_GRID_1) -> float:
    """Dispatch on ``method``; ``start``/``stop`` are x, t or theta accordingly."""
    method = ArcMethod(method)
    if method is ArcMethod.CARTESIAN:
        return arclength_cartesian(p, start, stop)
    if method is ArcMethod.PARAMETRIC:
        return arclength_parametric(p, form, start, stop)
    if method is ArcMethod.POLAR:
        return arclength_polar(p, start, stop)
    raise DomainError(f"unknown method {method}")
