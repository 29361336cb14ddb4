import pytest

from solvsol import damekricci as dr
from solvsol import heisenberg as hh
from solvsol import hypersurface as hs
from solvsol.lie import MetricLieAlgebra
from solvsol.linalg import Matrix, Q


def test_rejects_non_unit_normals():
    space = hh.build_named(1, 1)
    with pytest.raises(ValueError):
        hs.construct(space.base, (2, 0, 0))


def test_not_subalgebra_is_a_distinct_condition():
    space = hh.build_named(1, 1)
    with pytest.raises(hs.NotSubalgebraError):
        hs.construct(space.base, (0, 0, 1))


def test_trace_formulas():
    n = hh.build_named(2, 1)
    surf = hs.construct(n.base, hh.unit_xi_basis(n, 0))
    assert surf.mean_curvature() == 0
    an = dr.build_named(2, 1)
    xi = dr.sample_unit_normal(an, 3)
    surf = hs.construct(an.base, xi)
    assert surf.mean_curvature() == xi[0] * (Q(an.m) + Q(an.n, 2))


def test_jacobi_eigenvalue_on_the_center():
    n = hh.build_named(3, (1, 0))
    xi = hh.unit_xi_basis(n, 0)
    surf = hs.construct(n.base, xi)
    amb = surf.ambient_operator(surf.jacobi)
    for k in range(n.m):
        z = n.base.basis_vector(n.n + k)
        assert amb.apply(z) == tuple(Q(1, 4) * x for x in z)


def test_shape_and_jacobi_are_gram_self_adjoint():
    spaces = [hh.build_named(2, 1), dr.build_named(1, 2)]
    normals = [hh.unit_xi_random(spaces[0], 4), dr.sample_unit_normal(spaces[1], 4)]
    for space, xi in zip(spaces, normals):
        surf = hs.construct(space.base, xi)
        for op in (surf.shape, surf.jacobi):
            assert (surf.sub.gram @ op).is_symmetric()


def test_gauss_ricci_equals_intrinsic_ricci():
    for space, xi in [
        (hh.build_named(2, 1), None),
        (hh.build_named(5, 1), None),
        (dr.build_named(1, 1), None),
    ]:
        if xi is None:
            if hasattr(space, "htype"):
                xi = dr.sample_unit_normal(space, 9)
            else:
                xi = hh.unit_xi_random(space, 9)
        surf = hs.construct(space.base, xi)
        assert surf.gauss_ricci() == surf.sub.ricci()


def test_totally_geodesic_case_in_a_flat_ambient():
    flat = MetricLieAlgebra(3, [], Matrix.identity(3))
    surf = hs.construct(flat, (1, 0, 0))
    assert surf.shape.is_zero() and surf.jacobi.is_zero()
    assert surf.gauss_ricci().is_zero()
    assert surf.gauss_ricci() == surf.sub.ricci()


def test_inclusion_projection_round_trip():
    space = hh.build_named(2, 1)
    surf = hs.construct(space.base, hh.unit_xi_basis(space, 1))
    assert surf.projection @ surf.inclusion == Matrix.identity(surf.sub.dim)
    for j in range(surf.sub.dim):
        v = surf.sub.basis_vector(j)
        assert surf.to_sub(surf.to_ambient(v)) == v
