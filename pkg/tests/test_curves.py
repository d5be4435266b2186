import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from squircle.core import SquircleParams, implicit_residual
from squircle.curves import (CurveForm, param_point, param_point_literal, polar_radius,
                             polar_radius_literal, sample_curve)

angles = st.floats(-10.0, 10.0)
squareness = st.floats(0.0, 1.0)


def test_polar_examples():
    assert polar_radius(SquircleParams(1.0), math.pi / 4) == pytest.approx(math.sqrt(2), abs=1e-15)
    for s in (0.0, 0.3, 0.9, 1.0):
        assert polar_radius(SquircleParams(s), 0.0) == 1.0
        assert polar_radius(SquircleParams(s), 1e-9) == pytest.approx(1.0, abs=1e-15)
    # mpmath root of the biquadratic, 40 digits
    p = SquircleParams(0.8)
    rho = polar_radius(p, 0.6)
    assert rho == pytest.approx(1.0955463140363990686, abs=1e-14)
    assert abs(implicit_residual(p, rho * math.cos(0.6), rho * math.sin(0.6))) < 1e-10


@given(squareness, st.floats(0.1, 5.0), angles)
def test_polar_point_on_curve(s, r, theta):
    p = SquircleParams(s, r)
    rho = polar_radius(p, theta)
    assert abs(implicit_residual(p, rho * np.cos(theta), rho * np.sin(theta))) < 1e-10 * r * r
    assert r * (1 - 1e-15) <= rho <= r * math.sqrt(2) * (1 + 1e-15)
    assert polar_radius(p, math.pi / 2 - theta) == pytest.approx(rho, rel=1e-12)
    assert polar_radius(p, theta + math.pi / 2) == pytest.approx(rho, rel=1e-12)


@given(st.floats(0.05, 1.0), st.floats(0.05, 1.5))
def test_polar_matches_literal_off_axis(s, theta):
    p = SquircleParams(s)
    assert polar_radius(p, theta) == pytest.approx(polar_radius_literal(p, theta), rel=1e-8)


def test_polar_increasing_in_s():
    theta = np.linspace(0.01, 1.5, 50)
    prev = polar_radius(SquircleParams(0.0), theta)
    for s in np.linspace(0.01, 1.0, 100):
        cur = polar_radius(SquircleParams(float(s)), theta)
        assert np.all(cur >= prev)
        prev = cur


def test_param_examples():
    x, y = param_point(SquircleParams(0.0), CurveForm.ELLIPTIC_GRID_1, math.pi / 3)
    assert (x, y) == pytest.approx((0.5, math.sqrt(3) / 2), abs=1e-15)
    x, y = param_point(SquircleParams(1.0), CurveForm.FG_SQUIRCULAR, math.pi / 4)
    assert (x, y) == pytest.approx((1.0, 1.0), abs=1e-15)
    p = SquircleParams(0.928)
    x, y = param_point(p, CurveForm.ELLIPTIC_GRID_2, 1.1)
    assert abs(implicit_residual(p, x, y)) < 1e-10


@pytest.mark.parametrize("form", list(CurveForm))
@given(s=squareness, t=angles)
def test_param_on_curve(form, s, t):
    p = SquircleParams(s, 2.0)
    x, y = param_point(p, form, t)
    assert abs(implicit_residual(p, x, y)) < 4e-10


@pytest.mark.parametrize("form", list(CurveForm))
@given(t=angles)
def test_square_specialisation(form, t):
    x, y = param_point(SquircleParams(1.0, 1.5), form, t)
    assert max(abs(x), abs(y)) == pytest.approx(1.5, abs=1e-10)


@pytest.mark.parametrize("form", list(CurveForm))
@given(t=angles)
def test_circle_limit(form, t):
    x, y = param_point(SquircleParams(0.0, 1.0), form, t)
    assert (x, y) == pytest.approx((math.cos(t), math.sin(t)), abs=1e-15)


def test_elliptic_grid_forms_agree():
    rng = np.random.default_rng(11)
    s = rng.uniform(0.0, 1.0, 1000)
    t = rng.uniform(-2 * math.pi, 2 * math.pi, 1000)
    for si, ti in zip(s, t):
        p = SquircleParams(float(si))
        a = param_point(p, CurveForm.ELLIPTIC_GRID_1, ti)
        b = param_point(p, CurveForm.ELLIPTIC_GRID_2, ti)
        assert a == pytest.approx(b, abs=1e-10)


@pytest.mark.parametrize("form", list(CurveForm))
def test_rewrites_match_literal_forms(form):
    # the literal forms lose digits to cancellation, hence the loose tolerance
    p = SquircleParams(0.7, 1.2)
    t = np.linspace(0.05, 6.2, 200)
    t = t[np.abs(np.sin(2 * t)) > 0.05]
    x, y = param_point(p, form, t)
    xl, yl = param_point_literal(p, form, t)
    assert np.allclose(x, xl, atol=1e-8) and np.allclose(y, yl, atol=1e-8)


def test_sample_curve():
    pts = sample_curve(SquircleParams(1.0), CurveForm.FG_SQUIRCULAR, 4)
    assert pts.shape == (4, 2)
    pts8 = sample_curve(SquircleParams(1.0), CurveForm.FG_SQUIRCULAR, 8)
    assert pts8[1] == pytest.approx((1.0, 1.0), abs=1e-15)
    assert pts8[3] == pytest.approx((-1.0, 1.0), abs=1e-15)
    p = SquircleParams(0.37, 1.0)
    for form in CurveForm:
        pts = sample_curve(p, form, 360)
        assert np.max(np.abs(implicit_residual(p, pts[:, 0], pts[:, 1]))) < 1e-10
    with pytest.raises(ValueError):
        sample_curve(p, CurveForm.FG_SQUIRCULAR, 3)
