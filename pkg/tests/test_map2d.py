import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from squircle.errors import DomainError
from squircle.map2d import (Direction, Mapping2D, disc_to_square, disc_to_square_eg_alt,
                            disc_to_square_literal, remap_grid, square_to_disc)

H = math.sqrt(2) / 2
sq = st.floats(-1.0, 1.0)


def disc_points(rng, n):
    r = np.sqrt(rng.uniform(0.0, 1.0, n))
    th = rng.uniform(0.0, 2 * math.pi, n)
    return np.column_stack([r * np.cos(th), r * np.sin(th)])


def test_corner_and_axis_examples():
    for m in Mapping2D:
        assert square_to_disc(m, 1.0, 1.0) == pytest.approx((H, H), abs=1e-15)
        assert square_to_disc(m, 0.0, 0.0) == (0.0, 0.0)
        assert disc_to_square(m, 0.3, 0.0) == (0.3, 0.0)
        assert disc_to_square(m, 0.0, -0.8) == (0.0, -0.8)
    assert square_to_disc(Mapping2D.FG_SQUIRCULAR, 1.0, 0.0) == (1.0, 0.0)
    assert disc_to_square(Mapping2D.FG_SQUIRCULAR, H, H) == pytest.approx((1.0, 1.0), abs=1e-15)


def test_elliptical_grid_inverse_frozen():
    # mpmath.findroot on the forward map, 40 digits
    x, y = disc_to_square(Mapping2D.ELLIPTICAL_GRID, 0.4, -0.2)
    assert (x, y) == pytest.approx((0.40442874126278560507, -0.20871657039967187016), abs=1e-15)
    assert square_to_disc(Mapping2D.ELLIPTICAL_GRID, x, y) == pytest.approx((0.4, -0.2), abs=1e-12)


@pytest.mark.parametrize("m", list(Mapping2D))
def test_round_trips(m):
    rng = np.random.default_rng(3)
    for x, y in rng.uniform(-1.0, 1.0, (10_000, 2)):
        X, Y = disc_to_square(m, *square_to_disc(m, x, y))
        assert abs(X - x) < 1e-10 and abs(Y - y) < 1e-10
    for u, v in disc_points(rng, 10_000):
        U, V = square_to_disc(m, *disc_to_square(m, u, v))
        assert abs(U - u) < 1e-10 and abs(V - v) < 1e-10


@given(sq, sq)
def test_fgs_radial_and_squircular(x, y):
    u, v = square_to_disc(Mapping2D.FG_SQUIRCULAR, x, y)
    assert abs(x * v - y * u) < 1e-12
    assert u * x >= 0 and v * y >= 0
    assert abs(u * u + v * v - (x * x + y * y - x * x * y * y)) < 1e-12


@pytest.mark.parametrize("m", list(Mapping2D))
@given(x=sq, y=sq)
def test_odd_symmetry(m, x, y):
    u, v = square_to_disc(m, x, y)
    assert square_to_disc(m, -x, y) == (-u, v)
    assert square_to_disc(m, x, -y) == (u, -v)
    assert math.hypot(u, v) <= 1.0 + 1e-12


def test_inverse_variants_agree():
    rng = np.random.default_rng(8)
    for u, v in disc_points(rng, 5000):
        if min(abs(u), abs(v)) < 1e-3:
            continue
        a = disc_to_square(Mapping2D.ELLIPTICAL_GRID, u, v)
        assert a == pytest.approx(disc_to_square_eg_alt(u, v), abs=1e-10)
        b = disc_to_square(Mapping2D.FG_SQUIRCULAR, u, v)
        assert b == pytest.approx(disc_to_square_literal(u, v), abs=1e-10)


def test_literal_sign_in_every_quadrant():
    # the literal sgn(uv)/v factor resolves to sgn(u) for x and sgn(v) for y
    for su in (1, -1):
        for sv in (1, -1):
            x, y = disc_to_square(Mapping2D.FG_SQUIRCULAR, 0.5 * su, 0.3 * sv)
            assert math.copysign(1, x) == su and math.copysign(1, y) == sv


def test_remap_grid():
    assert remap_grid(Mapping2D.FG_SQUIRCULAR, Direction.SQUARE_TO_DISC, []) == []
    out = remap_grid(Mapping2D.FG_SQUIRCULAR, "square2disc", [(1, 1), (-1, 1)])
    assert out == [pytest.approx((H, H)), pytest.approx((-H, H))]
    rng = np.random.default_rng(4)
    imgs = remap_grid(Mapping2D.ELLIPTICAL_GRID, "square2disc", rng.uniform(-1, 1, (10_000, 2)))
    assert max(math.hypot(*q) for q in imgs) <= 1.0 + 1e-12
    # tiny overshoot is clamped, larger overshoot reports the index
    assert remap_grid(Mapping2D.FG_SQUIRCULAR, "square2disc", [(1 + 1e-13, 0.5)])[0][0] <= 1.0
    with pytest.raises(DomainError) as info:
        remap_grid(Mapping2D.FG_SQUIRCULAR, "disc2square", [(0.1, 0.1), (0.9, 0.9)])
    assert info.value.index == 1
