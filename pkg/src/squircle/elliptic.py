"""Legendre elliptic integrals and the FG-squircle area.

F, E, K and E(k) are evaluated through Carlson's symmetric integrals R_F and
R_D (duplication algorithm), which converge geometrically for every modulus
in [0, 1].  The two area formulas are

    complete:    A = 4 r^2 / s^2 * [E(s) + (s^2 - 1) K(s)]
    incomplete:  A = 4 r^2 / s * E(asin s, 1/s)

and the second one needs a modulus above 1, so it is integrated directly.
"""
from __future__ import annotations

import math

import numpy as np

from .core import SquircleParams
from .errors import DivergenceError, DomainError
from .quadrature import integrate

_EPS = np.finfo(float).eps
HALF_PI = 0.5 * math.pi


def carlson_rf(x: float, y: float, z: float) -> float:
    """R_F(x, y, z) for nonnegative arguments, at most one of them zero."""
    if min(x, y, z) < 0.0:
        raise DomainError("R_F needs nonnegative arguments")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DivergenceError("R_F diverges when two arguments vanish")
    a0 = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    xm, ym, zm = x, y, z
    fac = 1.0
    while q * fac >= abs(a):
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * sy + sy * sz + sz * sx
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        a = 0.25 * (a + lam)
        fac *= 0.25
    X = (a0 - x) * fac / a
    Y = (a0 - y) * fac / a
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / math.sqrt(a)


def carlson_rd(x: float, y: float, z: float) -> float:
    """R_D(x, y, z) for x, y >= 0 (not both zero) and z > 0."""
    if min(x, y) < 0.0 or z <= 0.0:
        raise DomainError("R_D needs x, y >= 0 and z > 0")
    if x == 0.0 and y == 0.0:
        raise DivergenceError("R_D diverges when x = y = 0")
    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * _EPS) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    xm, ym, zm = x, y, z
    fac = 1.0
    acc = 0.0
    while q * fac >= abs(a):
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * sy + sy * sz + sz * sx
        acc += fac / (sz * (zm + lam))
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        a = 0.25 * (a + lam)
        fac *= 0.25
    X = (a0 - x) * fac / a
    Y = (a0 - y) * fac / a
    Z = -(X + Y) / 3.0
    xy = X * Y
    z2 = Z * Z
    e2 = xy - 6.0 * z2
    e3 = (3.0 * xy - 8.0 * z2) * Z
    e4 = 3.0 * (xy - z2) * z2
    e5 = xy * z2 * Z
    series = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
              - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return fac * series / (a * math.sqrt(a)) + 3.0 * acc


def _check_standard(phi, k):
    if not (0.0 <= phi <= HALF_PI):
        raise DomainError(f"amplitude must lie in [0, pi/2], got {phi}")
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"modulus must lie in [0, 1], got {k}")


def ellip_F(phi: float, k: float) -> float:
    """Incomplete integral of the first kind, F(phi, k)."""
    _check_standard(phi, k)
    if phi == 0.0:
        return 0.0
    sn = math.sin(phi)
    cn2 = math.cos(phi) ** 2
    if phi == HALF_PI:
        cn2 = 0.0
    delta2 = (1.0 - k * sn) * (1.0 + k * sn)
    if cn2 == 0.0 and delta2 == 0.0:
        raise DivergenceError("F(pi/2, 1) diverges")
    return sn * carlson_rf(cn2, delta2, 1.0)


def ellip_E_inc(phi: float, k: float) -> float:
    """Incomplete integral of the second kind, E(phi, k)."""
    _check_standard(phi, k)
    if phi == 0.0:
        return 0.0
    if k == 1.0:
        return math.sin(phi)
    sn = math.sin(phi)
    cn2 = 0.0 if phi == HALF_PI else math.cos(phi) ** 2
    delta2 = (1.0 - k * sn) * (1.0 + k * sn)
    return sn * carlson_rf(cn2, delta2, 1.0) - (k * k * sn ** 3 / 3.0) * carlson_rd(cn2, delta2, 1.0)


def ellip_K(k: float) -> float:
    """Complete integral of the first kind; diverges at k = 1."""
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"modulus must lie in [0, 1], got {k}")
    if k == 1.0:
        raise DivergenceError("K(1) diverges")
    return carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0)


def ellip_E(k: float) -> float:
    """Complete integral of the second kind; E(1) = 1."""
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"modulus must lie in [0, 1], got {k}")
    if k == 1.0:
        return 1.0
    kp2 = (1.0 - k) * (1.0 + k)
    return carlson_rf(0.0, kp2, 1.0) - (k * k / 3.0) * carlson_rd(0.0, kp2, 1.0)


def area_complete(p: SquircleParams) -> float:
    """Area enclosed by the FG-squircle, from complete integrals of modulus s."""
    s, r = p.s, p.r
    if s == 1.0:
        return 4.0 * r * r
    if s < 1e-8:
        # E(s) - (1 - s^2) K(s) = pi s^2 / 4 (1 + s^2 / 8 + ...)
        return math.pi * r * r * (1.0 + s * s / 8.0)
    # E(s) + (s^2 - 1) K(s) == s^2 (R_F - R_D / 3) at (0, 1 - s^2, 1); this form
    # avoids the cancellation between E and K for small s.
    kp2 = (1.0 - s) * (1.0 + s)
    bracket = s * s * (carlson_rf(0.0, kp2, 1.0) - carlson_rd(0.0, kp2, 1.0) / 3.0)
    return 4.0 * r * r / (s * s) * bracket


def _e_reciprocal(phi: float, q: float, tol: float) -> float:
    """E(phi, 1/q) = int_0^phi sqrt(1 - sin^2(theta) / q^2) d theta, by quadrature."""

    def integrand(theta):
        u = np.sin(theta) / q
        return np.sqrt(np.maximum((1.0 - u) * (1.0 + u), 0.0))

    return integrate(integrand, 0.0, phi, abs_tol=tol, rel_tol=tol)


def area_incomplete(p: SquircleParams) -> float:
    """Area from the non-standard (reciprocal) modulus form, integrated directly.

    4 r^2/s * int_0^s sqrt(1 - t^2/s^2) / sqrt(1 - t^2) dt, integrated after
    rescaling t = s w onto [0, 1].
    """
    s, r = p.s, p.r
    if s == 0.0:
        raise DomainError("the incomplete-form area is undefined at s = 0; use area_complete")

    def integrand(w):
        num = np.sqrt(np.maximum((1.0 - w) * (1.0 + w), 0.0))
        den = np.sqrt((1.0 - s * w) * (1.0 + s * w))
        return num / den

    val = integrate(integrand, 0.0, 1.0, abs_tol=1e-14, rel_tol=1e-13)
    return 4.0 * r * r * val


def reciprocal_modulus_check(phi: float, q: float, tol: float = 1e-13) -> tuple[float, float]:
    """Both sides of E(phi, 1/q) = (1/q) [E(beta, q) - (1 - q^2) F(beta, q)].

    ``beta = asin(sin(phi) / q)``.  The left side is integrated directly; the
    right side uses the standard-form routines.
    """
    if not (0.0 < q <= 1.0):
        raise DomainError(f"q must lie in (0, 1], got {q}")
    if not (0.0 <= phi <= HALF_PI):
        raise DomainError(f"amplitude must lie in [0, pi/2], got {phi}")
    ratio = math.sin(phi) / q
    if ratio > 1.0 + 1e-15:
        raise DomainError(f"sin(phi) = {math.sin(phi)} exceeds q = {q}; beta is not real")
    beta = HALF_PI if ratio >= 1.0 else math.asin(ratio)
    lhs = _e_reciprocal(phi, q, tol)
    if q == 1.0:
        rhs = ellip_E_inc(beta, 1.0)
    else:
        rhs = (ellip_E_inc(beta, q) - (1.0 - q * q) * ellip_F(beta, q)) / q
    return lhs, rhs
