import itertools
import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from squircle.errors import DomainError
from squircle.map2d import Mapping2D, disc_to_square, square_to_disc
from squircle.map3d import (CubicCoeffs, cube_to_sphere, solve_even_sextic, sphere_to_cube,
                            squircularity_gap)

D = 1 / math.sqrt(3)
cube = st.floats(-1.0, 1.0)


def test_forward_examples():
    assert cube_to_sphere(1.0, 1.0, 1.0) == pytest.approx((D, D, D), abs=1e-15)
    for t in (-1.0, -0.3, 0.0, 0.6, 1.0):
        assert cube_to_sphere(t, 0.0, 0.0) == (t, 0.0, 0.0)
    u, v, w = cube_to_sphere(0.5, 0.5, 0.0)
    assert (u, v) == pytest.approx(square_to_disc(Mapping2D.FG_SQUIRCULAR, 0.5, 0.5), abs=1e-15)
    assert w == 0.0


def test_inverse_examples():
    stats = Counter()
    assert sphere_to_cube(D, D, D, stats) == (1.0, 1.0, 1.0)
    assert stats["triple_root"] == 1
    assert sphere_to_cube(0.7, 0.0, 0.0) == (0.7, 0.0, 0.0)
    x, y, z = sphere_to_cube(0.4, 0.5, 0.0)
    assert (x, y) == pytest.approx(disc_to_square(Mapping2D.FG_SQUIRCULAR, 0.4, 0.5), abs=1e-15)
    assert z == 0.0
    assert sphere_to_cube(0.0, 0.0, 0.0) == (0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        sphere_to_cube(0.9, 0.9, 0.0)


def test_triple_root_solve():
    assert solve_even_sextic(CubicCoeffs(1.0, -3.0, 3.0, -1.0)) == 1.0


def test_generic_solve_residual():
    cf = CubicCoeffs.from_sphere_point(0.5, 0.3, 0.2)
    t = solve_even_sextic(cf)
    assert 0.0 <= t <= 1.0
    assert abs(cf(t)) < 1e-9 * cf.scale()
    x = math.sqrt(t)
    assert cube_to_sphere(x, 0.3 / 0.5 * x, 0.2 / 0.5 * x) == pytest.approx((0.5, 0.3, 0.2), abs=1e-12)


def test_de_moivre_branch_is_exercised():
    rng = np.random.default_rng(9)
    seen = 0
    for p in rng.uniform(-1, 1, (200, 3)):
        u, v, w = cube_to_sphere(*p)
        cf = CubicCoeffs.from_sphere_point(u, v, w)
        if cf.discriminant > 0:
            stats = Counter()
            t = solve_even_sextic(cf, stats)
            assert stats["de_moivre"] == 1
            assert abs(cf(t)) < 1e-9 * cf.scale()
            seen += 1
    assert seen > 0


def test_first_coordinate_pivot_agrees():
    # the cubic built on u (rather than the largest coordinate) has the same root
    rng = np.random.default_rng(10)
    for p in rng.uniform(-1, 1, (300, 3)):
        u, v, w = cube_to_sphere(*p)
        t = solve_even_sextic(CubicCoeffs.from_sphere_point(u, v, w))
        assert math.copysign(math.sqrt(t), u) == pytest.approx(p[0], abs=1e-9)


def test_round_trips():
    rng = np.random.default_rng(12)
    stats = Counter()
    for p in rng.uniform(-1, 1, (10_000, 3)):
        s = cube_to_sphere(*p)
        back = sphere_to_cube(*s, stats=stats)
        assert np.max(np.abs(np.subtract(back, p))) < 1e-9
        assert squircularity_gap(p, s) < 1e-10
    g = rng.normal(size=(10_000, 3))
    g *= (rng.uniform(0, 1, 10_000) ** (1 / 3) / np.linalg.norm(g, axis=1))[:, None]
    for s in g:
        c = sphere_to_cube(*s, stats=stats)
        assert max(abs(q) for q in c) <= 1.0
        assert np.max(np.abs(np.subtract(cube_to_sphere(*c), s))) < 1e-9
    assert stats["de_moivre"] > 0 and stats["cardano"] > 0


@given(cube, cube, cube)
def test_radial_and_norm_ordering(x, y, z):
    u, v, w = cube_to_sphere(x, y, z)
    for (a, b), (c, d) in itertools.combinations(zip((x, y, z), (u, v, w)), 2):
        assert abs(a * d - c * b) < 1e-12
    assert u * x >= 0 and v * y >= 0 and w * z >= 0
    assert math.sqrt(u * u + v * v + w * w) <= math.sqrt(x * x + y * y + z * z) + 1e-15


@given(cube, cube, cube)
def test_symmetry(x, y, z):
    u, v, w = cube_to_sphere(x, y, z)
    for perm in itertools.permutations(range(3)):
        pt = [(x, y, z)[i] for i in perm]
        img = cube_to_sphere(*pt)
        assert img == pytest.approx([(u, v, w)[i] for i in perm], abs=1e-15)
    assert cube_to_sphere(-x, y, -z) == pytest.approx((-u, v, -w), abs=1e-15)


def test_continuity_across_planes():
    # points just beyond the special-case band agree with the plane formula
    for eps in (1e-11, 1e-9, 1e-6):
        near = sphere_to_cube(0.4, 0.5, eps)
        on = sphere_to_cube(0.4, 0.5, 0.0)
        assert near[:2] == pytest.approx(on[:2], abs=10 * eps)
