"""Polar and parametric forms of the FG-squircle.

The direct forms all have ``s`` (or ``s sin 2t``) in a denominator and a
``1 - sqrt(1 - ...)`` numerator.  Multiplying through by the conjugate gives
algebraically identical expressions with no removable singularities, e.g.

    rho = r sqrt2 / (s sin 2t) * sqrt(1 - sqrt(1 - s^2 sin^2 2t))
        = r sqrt2 / sqrt(1 + sqrt(1 - s^2 sin^2 2t))

so the circle limit s = 0 and the axis directions need no special casing.
The literal transcriptions are kept (``*_literal``) for cross-checking.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .core import SQRT2, SquircleParams


class CurveForm(enum.Enum):
    ELLIPTIC_GRID_1 = "eg1"
    ELLIPTIC_GRID_2 = "eg2"
    FG_SQUIRCULAR = "fgs"


def _sgn(x):
    # sgn(0) = +1 so axis points resolve to the nonnegative branch
    return np.where(np.asarray(x) >= 0.0, 1.0, -1.0)


def _polar_factor(s, angle):
    sin2 = np.sin(2.0 * angle)
    return SQRT2 / np.sqrt(1.0 + np.sqrt(np.maximum(1.0 - s * s * sin2 * sin2, 0.0)))


def polar_radius(p: SquircleParams, theta):
    """Distance from the origin to the curve in direction ``theta``."""
    return p.r * _polar_factor(p.s, theta)


def polar_radius_literal(p: SquircleParams, theta):
    sin2 = np.sin(2.0 * theta)
    return (p.r * SQRT2 / (p.s * sin2)) * np.sqrt(1.0 - np.sqrt(1.0 - p.s ** 2 * sin2 ** 2))


def _eg1(s, r, t):
    c, sn = np.cos(t), np.sin(t)
    c2t = np.cos(2.0 * t)
    k = 2.0 * SQRT2 * s
    px = np.sqrt(np.maximum(2.0 + k * c + s * s * c2t, 0.0))
    mx = np.sqrt(np.maximum(2.0 - k * c + s * s * c2t, 0.0))
    py = np.sqrt(np.maximum(2.0 + k * sn - s * s * c2t, 0.0))
    my = np.sqrt(np.maximum(2.0 - k * sn - s * s * c2t, 0.0))
    # (sqrt P - sqrt M) / (2 s) == 2 sqrt2 cos t / (sqrt P + sqrt M)
    x = 2.0 * SQRT2 * r * c / (px + mx)
    y = 2.0 * SQRT2 * r * sn / (py + my)
    return x, y


def _eg2(s, r, t):
    c, sn = np.cos(t), np.sin(t)
    s2c2t = s * s * np.cos(2.0 * t)
    bx = 2.0 + s2c2t
    by = 2.0 - s2c2t
    rx = np.sqrt(np.maximum(bx * bx - 8.0 * s * s * c * c, 0.0))
    ry = np.sqrt(np.maximum(by * by - 8.0 * s * s * sn * sn, 0.0))
    # sgn(c)/(s sqrt2) sqrt(B - sqrt(B^2 - 8 s^2 c^2)) == 2 c / sqrt(B + sqrt(...))
    x = 2.0 * r * c / np.sqrt(bx + rx)
    y = 2.0 * r * sn / np.sqrt(by + ry)
    return x, y


def _fgs(s, r, t):
    # sgn(cos t) / (s sqrt2 |sin t|) sqrt(1 - sqrt(1 - s^2 sin^2 2t)) reduces
    # to the polar radius along direction t
    f = r * _polar_factor(s, t)
    return f * np.cos(t), f * np.sin(t)


_FORMS = {
    CurveForm.ELLIPTIC_GRID_1: _eg1,
    CurveForm.ELLIPTIC_GRID_2: _eg2,
    CurveForm.FG_SQUIRCULAR: _fgs,
}


def param_point(p: SquircleParams, form: CurveForm, t):
    """Point (x, y) on the curve at parameter ``t`` for the chosen form."""
    return _FORMS[CurveForm(form)](p.s, p.r, t)


def param_point_literal(p: SquircleParams, form: CurveForm, t):
    """Direct transcription of the unrationalised parametric forms (needs s > 0)."""
    s, r = p.s, p.r
    c, sn, c2t = np.cos(t), np.sin(t), np.cos(2.0 * t)
    form = CurveForm(form)
    if form is CurveForm.ELLIPTIC_GRID_1:
        k = 2.0 * s * SQRT2
        x = r / (2 * s) * (np.sqrt(2 + k * c + s * s * c2t) - np.sqrt(2 - k * c + s * s * c2t))
        y = r / (2 * s) * (np.sqrt(2 + k * sn - s * s * c2t) - np.sqrt(2 - k * sn - s * s * c2t))
    elif form is CurveForm.ELLIPTIC_GRID_2:
        bx, by = 2 + s * s * c2t, 2 - s * s * c2t
        x = r * _sgn(c) / (s * SQRT2) * np.sqrt(bx - np.sqrt(bx * bx - 8 * s * s * c * c))
        y = r * _sgn(sn) / (s * SQRT2) * np.sqrt(by - np.sqrt(by * by - 8 * s * s * sn * sn))
    else:
        root = np.sqrt(1 - np.sqrt(1 - s * s * np.sin(2 * t) ** 2))
        x = r * _sgn(c) / (s * SQRT2 * np.abs(sn)) * root
        y = r * _sgn(sn) / (s * SQRT2 * np.abs(c)) * root
    return x, y


def sample_curve(p: SquircleParams, form: CurveForm = CurveForm.ELLIPTIC_GRID_1, n: int = 360):
    """``n`` points at t = 2 pi i / n as an (n, 2) array, in loop order."""
    if n < 4:
        raise ValueError(f"need at least 4 samples, got {n}")
    t = 2.0 * math.pi * np.arange(n) / n
    x, y = param_point(p, form, t)
    return np.column_stack([x, y])
