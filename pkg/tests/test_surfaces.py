import io
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from squircle.core import RectellipseParams, SquircleParams, implicit_residual, rectellipse_residual
from squircle.surfaces import (NonUniformCone, NonUniformCylinder, Sphube, Sqellipsoid, Sqone,
                               Sqylinder, TriMesh, elementary_symmetric, export_obj, extract_mesh,
                               nd_residual, surface_residual)

coord = st.floats(-2.0, 2.0)
unit = st.floats(0.0, 1.0)


def fourd_literal(s, r, x, y, z, w):
    """Term-by-term transcription of the four-dimensional equation."""
    k, k2, k3 = s**2 / r**2, s**4 / r**4, s**6 / r**6
    return (x**2 + y**2 + z**2 + w**2
            - k * x**2 * y**2 - k * y**2 * z**2 - k * x**2 * z**2
            - k * x**2 * w**2 - k * y**2 * w**2 - k * z**2 * w**2
            + k2 * x**2 * y**2 * z**2 + k2 * x**2 * y**2 * w**2
            + k2 * x**2 * z**2 * w**2 + k2 * y**2 * z**2 * w**2
            - k3 * x**2 * y**2 * z**2 * w**2 - r**2)


def test_residual_examples():
    assert surface_residual(Sphube(1.0, 1.0), 1.0, 1.0, 1.0) == 0.0
    assert surface_residual(Sphube(0.0, 2.0), 2.0, 0.0, 0.0) == 0.0
    assert surface_residual(Sqellipsoid(0.0, 1.2, 1.0, 2.0), 0.0, 0.0, 2.0) == 0.0
    assert surface_residual(Sqone(0.5, 1.0, 1.0, 3.0), 0.0, 0.0, 0.0) == 0.0
    assert surface_residual(NonUniformCone(1.0, 1.0, 2.0), 1.0, 1.0, 2.0) == 0.0


@given(unit, coord, coord, coord)
def test_sphube_signed_permutations(s, x, y, z):
    spec = Sphube(s, 1.1)
    ref = surface_residual(spec, x, y, z)
    for perm in itertools.permutations((x, y, z)):
        for signs in itertools.product((1, -1), repeat=3):
            pt = [a * b for a, b in zip(perm, signs)]
            assert surface_residual(spec, *pt) == pytest.approx(ref, abs=1e-14 * max(1, abs(ref)) * 16)


@given(unit, coord, coord)
def test_sphube_slice_is_squircle(s, x, y):
    assert surface_residual(Sphube(s, 1.3), x, y, 0.0) == pytest.approx(
        implicit_residual(SquircleParams(s, 1.3), x, y), abs=1e-14)


@given(unit, st.floats(0.5, 2.0), coord, coord, coord)
def test_sqellipsoid_reduces_to_sphube(s, r, x, y, z):
    a = surface_residual(Sqellipsoid(s, r, r, r), x, y, z)
    b = surface_residual(Sphube(s, r), x, y, z) / (r * r)
    assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


@given(st.floats(0.0, 4.0), coord, coord)
def test_nonuniform_cylinder_slices(z, x, y):
    c = 4.0
    cyl = surface_residual(NonUniformCylinder(1.2, 0.8, c), x, y, z)
    ref = rectellipse_residual(RectellipseParams(1.2, 0.8, z / c), x, y)
    assert cyl == pytest.approx(ref, rel=1e-14, abs=1e-14)


def test_nd_residual():
    rng = np.random.default_rng(1)
    for x, y in rng.uniform(-1.5, 1.5, (100, 2)):
        s = float(rng.uniform())
        assert nd_residual(s, 1.0, [x, y]) == pytest.approx(
            implicit_residual(SquircleParams(s), x, y), abs=1e-14)
    assert nd_residual(1.0, 1.0, [1, 1, 1, 1]) == 0.0
    for pt in rng.uniform(-1, 1, (100, 4)):
        assert nd_residual(0.7, 1.0, pt) == pytest.approx(fourd_literal(0.7, 1.0, *pt), abs=1e-13)
    for pt in rng.uniform(-1, 1, (50, 3)):
        assert nd_residual(0.4, 1.2, pt) == pytest.approx(surface_residual(Sphube(0.4, 1.2), *pt), abs=1e-14)
    with pytest.raises(ValueError):
        nd_residual(0.5, 1.0, [0.0] * 9)


def test_elementary_symmetric():
    assert elementary_symmetric([1.0, 2.0, 3.0]) == [1.0, 6.0, 11.0, 6.0]


def test_sphube_meshes():
    m = extract_mesh(Sphube(0.0, 1.0), 32)
    assert np.max(np.abs(np.linalg.norm(m.vertices, axis=1) - 1.0)) < 1e-8
    m = extract_mesh(Sphube(1.0, 1.0), 32)
    assert np.max(np.abs(np.max(np.abs(m.vertices), axis=1) - 1.0)) < 1e-6
    assert m.triangles.min() >= 0 and m.triangles.max() < len(m.vertices)
    assert m.triangle_areas().min() > 1e-12


def test_ray_radius_grows_with_s():
    prev = None
    for s in np.linspace(0.0, 1.0, 11):
        v = extract_mesh(Sphube(float(s), 1.0), 8).vertices
        norms = np.linalg.norm(v, axis=1)
        if prev is not None:
            assert np.all(norms >= prev - 1e-12)
        prev = norms


@pytest.mark.parametrize("spec", [
    Sqellipsoid(0.8, 1.2, 1.0, 2.0),
    Sqylinder(0.7, 1.0, 1.0, 3.0),
    NonUniformCylinder(1.0, 1.0, 4.0),
    Sqone(0.9, 1.0, 1.0, 3.0),
    NonUniformCone(1.0, 1.0, 2.0),
])
def test_mesh_vertices_on_surface(spec):
    m = extract_mesh(spec, 64)
    assert np.max(np.abs(surface_residual(spec, *m.vertices.T))) < 1e-6
    assert m.triangle_areas().min() > 1e-12


def test_mesh_resolution_guard():
    with pytest.raises(ValueError):
        extract_mesh(Sphube(0.5), 7)


def test_obj_export():
    buf = io.BytesIO()
    export_obj(TriMesh(), buf)
    assert buf.getvalue() == b""
    buf = io.BytesIO()
    export_obj(TriMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [[0, 1, 2]]), buf)
    lines = buf.getvalue().decode().split("\n")
    assert lines[-1] == "" and len(lines) == 5
    assert lines[:3] == ["v 0 0 0", "v 1 0 0", "v 0 1 0"] and lines[3] == "f 1 2 3"


def test_obj_parse_back():
    mesh = extract_mesh(Sphube(0.6, 1.0), 16)
    buf = io.BytesIO()
    export_obj(mesh, buf)
    verts, faces = [], []
    for line in buf.getvalue().decode().splitlines():
        tag, *rest = line.split()
        if tag == "v":
            verts.append([float(q) for q in rest])
        elif tag == "f":
            faces.append([int(q) - 1 for q in rest])
    assert len(verts) == len(mesh.vertices)
    assert np.array_equal(np.array(faces), mesh.triangles)
    assert np.allclose(verts, mesh.vertices, rtol=1e-8, atol=1e-9)
