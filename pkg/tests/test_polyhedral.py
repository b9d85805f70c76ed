from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nashfan.polyhedral import (
    Cone,
    DegenerateConeError,
    cone,
    cone_from_constraints,
    determinant,
    dual_cone,
    facets,
    hilbert_basis,
    is_smooth,
    normalize_to_orthant,
    nullspace,
    orthant,
    relative_interior_point,
    transpose_apply,
)

from oracles import box, dot, hilbert_basis_brute, in_dual, is_smooth_det


def test_dual_examples():
    assert dual_cone(cone((0, 1), (4, -3))).rays == ((1, 0), (3, 4))
    assert dual_cone(cone((0, 1), (3, -2))).rays == ((1, 0), (2, 3))
    assert dual_cone(orthant(3)) == orthant(3)


def test_dual_rejects_lower_dimensional():
    with pytest.raises(DegenerateConeError):
        dual_cone(Cone.from_rays([(1, 0)], 2))


def test_not_pointed_rejected():
    with pytest.raises(ValueError):
        cone((1, 0), (-1, 0), (0, 1))


def test_hilbert_basis_examples():
    assert hilbert_basis(cone((1, 0), (3, 4))) == [(1, 0), (1, 1), (3, 4)]
    assert hilbert_basis(cone((1, 0), (2, 3))) == [(1, 0), (1, 1), (2, 3)]
    assert hilbert_basis(orthant(2)) == [(0, 1), (1, 0)]


def test_cone_from_constraints_example():
    sigma = cone((0, 1), (3, -2))
    c = cone_from_constraints([], [(0, 1), (1, 0), (-1, 3)], sigma)
    assert c.rays == ((0, 1), (3, 1))
    assert cone_from_constraints([], [], sigma) == sigma
    ray = cone_from_constraints([(1, 0)], [(0, 1)], orthant(2))
    assert ray.rays == ((0, 1),) and ray.dim == 1


def test_facet_normals_point_inward():
    c = cone((0, 1), (2, -1))
    normals = sorted(n for _, n in facets(c))
    assert normals == [(1, 0), (1, 2)]
    for f, n in facets(c):
        assert all(dot(n, r) == 0 for r in f.rays)
        assert all(dot(n, r) >= 0 for r in c.rays)


def test_smoothness():
    assert is_smooth(orthant(3))
    assert not is_smooth(cone((0, 1), (4, -3)))
    assert is_smooth(cone((0, 1), (1, -1)))


def test_normalize_moves_generators_to_orthant():
    U, imgs = normalize_to_orthant([(1, -1), (1, 1)])
    assert abs(determinant(U)) == 1
    assert all(x >= 0 for v in imgs for x in v)
    assert U == ((1, 0), (1, 1))
    ident, same = normalize_to_orthant([(1, 0), (1, 1)])
    assert ident == ((1, 0), (0, 1)) and same == [(1, 0), (1, 1)]


def test_transpose_round_trip_preserves_pairing():
    U, imgs = normalize_to_orthant([(2, -1), (1, 1)])
    for w in box(2, 3):
        for a, b in zip([(2, -1), (1, 1)], imgs):
            # <U a, w> = <a, U^T w>
            assert dot(b, w) == dot(a, transpose_apply(U, w))


def test_nullspace_is_kernel():
    rows = [(1, 2, 3), (2, 4, 7)]
    (k,) = nullspace(rows, 3)
    assert all(dot(r, k) == 0 for r in rows)


planar_ray = st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(
    lambda v: any(v) and gcd(*v) == 1)


@st.composite
def planar_cones(draw):
    r1 = draw(planar_ray)
    r2 = draw(planar_ray)
    if r1[0] * r2[1] - r1[1] * r2[0] == 0:
        r2 = (-r1[1], r1[0])
    return (r1, r2)


@settings(max_examples=60, deadline=None)
@given(planar_cones())
def test_dual_agrees_with_lattice_enumeration(rays):
    d = dual_cone(cone(*rays))
    for u in box(2, 7):
        assert d.contains(u) == in_dual(u, rays)


@settings(max_examples=60, deadline=None)
@given(planar_cones())
def test_double_dual(rays):
    c = cone(*rays)
    assert dual_cone(dual_cone(c)) == c


@settings(max_examples=40, deadline=None)
@given(planar_cones())
def test_hilbert_basis_matches_brute_force(rays):
    d = dual_cone(cone(*rays))
    # every Hilbert basis element lies in the parallelogram spanned by the dual rays
    bound = sum(abs(x) for r in d.rays for x in r)
    assert hilbert_basis(d) == hilbert_basis_brute(rays, bound)


@settings(max_examples=40, deadline=None)
@given(planar_cones())
def test_smooth_matches_determinant(rays):
    assert is_smooth(cone(*rays)) == is_smooth_det(rays)


@settings(max_examples=40, deadline=None)
@given(planar_cones())
def test_interior_point_is_strict(rays):
    c = cone(*rays)
    assert c.contains_strictly(relative_interior_point(c))


def test_hilbert_basis_3d_brute():
    rays = [(1, 0, 0), (0, 1, 0), (1, 1, 2)]
    d = dual_cone(cone(*rays))
    assert hilbert_basis(d) == hilbert_basis_brute(rays, 3)
    nonsimplicial = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, -1)]
    d = dual_cone(cone(*nonsimplicial))
    assert hilbert_basis(d) == hilbert_basis_brute(nonsimplicial, 3)


def test_3d_dual_by_enumeration():
    rays = [(1, 0, 0), (0, 1, 0), (1, 2, 3)]
    d = dual_cone(cone(*rays))
    for u in box(3, 3):
        assert d.contains(u) == in_dual(u, rays)
