import pytest

from solvsol import heisenberg as hh
from solvsol import hypersurface as hs
from solvsol.linalg import Matrix, Q, is_zero_vec, vec_dot


def test_n11_is_the_heisenberg_algebra():
    algebra = hh.build_named(1, 1)
    assert algebra.base.dim == 3
    assert algebra.base.ricci() == Matrix.diagonal([Q(-1, 2), Q(-1, 2), Q(1, 2)])
    u = algebra.base.basis_vector(0)
    ju = algebra.j_image(0, u)
    assert algebra.base.bracket(u, ju) == (Q(0), Q(0), Q(1))


def test_n310_dimensions_and_ricci():
    algebra = hh.build_named(3, (1, 0))
    assert algebra.base.dim == 7
    expected = Matrix.diagonal([Q(-3, 2)] * 4 + [Q(1)] * 3)
    assert algebra.base.ricci() == expected


def test_n81_dimension():
    assert hh.build_named(8, 1).base.dim == 24


def test_center_bracket_structure():
    algebra = hh.build_named(2, 1)
    base = algebra.base
    for zk in range(algebra.n, base.dim):
        for j in range(base.dim):
            assert base.bracket_basis(zk, j) == {} or all(
                v == 0 for v in base.bracket_basis(zk, j).values()
            )


def test_xi_frame_dimensions():
    cases = [((1, 1), 0), ((2, 1), 1), ((4, 1), 3), ((6, 1), 1)]
    for (m, k), perp_dim in cases:
        algebra = hh.build_named(m, k)
        frame = hh.xi_frame(algebra, hh.unit_xi_basis(algebra, 0))
        assert len(frame.j_xi_basis) == algebra.m
        assert len(frame.perp_basis) == perp_dim
        # mutual orthogonality of the three v-pieces
        pieces = [frame.xi] + list(frame.j_xi_basis) + list(frame.perp_basis)
        for i, u in enumerate(pieces):
            for v in pieces[i + 1 :]:
                assert algebra.base.gram_ip(u, v) == 0


def test_xi_frame_rejects_bad_normals():
    algebra = hh.build_named(1, 1)
    with pytest.raises(ValueError):
        hh.xi_frame(algebra, algebra.base.basis_vector(2))  # in the center
    with pytest.raises(ValueError):
        hh.xi_frame(algebra, tuple(2 * x for x in algebra.base.basis_vector(0)))


def test_predicates_match_the_classification_patterns():
    n21 = hh.build_named(2, 1)
    f = hh.xi_frame(n21, hh.unit_xi_basis(n21, 0))
    j_ab, p_ab, cross = hh.predicates(n21, f)
    assert j_ab and p_ab and not cross

    n61 = hh.build_named(6, 1)
    f = hh.xi_frame(n61, hh.unit_xi_random(n61, 5))
    j_ab, p_ab, cross = hh.predicates(n61, f)
    assert not j_ab and not cross

    n41 = hh.build_named(4, 1)
    f = hh.xi_frame(n41, hh.unit_xi_half_spin(n41, "+", 2))
    j_ab, p_ab, _ = hh.predicates(n41, f)
    assert j_ab and p_ab


def test_half_spin_normals_are_unit_and_in_their_piece():
    algebra = hh.build_named(4, 1)
    split = hh.half_spin(algebra)
    xi = hh.unit_xi_half_spin(algebra, "+", 3)
    assert algebra.base.gram_ip(xi, xi) == 1
    v = algebra.v_part(xi)
    assert split.omega.apply(v) == v
    mixed = hh.unit_xi_mixed(algebra, 3, 4)
    assert algebra.base.gram_ip(mixed, mixed) == 1
    with pytest.raises(ValueError):
        hh.unit_xi_mixed(algebra, 1, 1)  # 2 is not a perfect square


def test_closed_form_ricci_equals_gauss_route():
    for m, mult in [(1, 1), (2, 1), (3, (1, 1)), (5, 1)]:
        algebra = hh.build_named(m, mult)
        for seed in (1, 2):
            xi = hh.unit_xi_random(algebra, seed)
            frame = hh.xi_frame(algebra, xi)
            closed = hh.hypersurface_ricci_closed_form(algebra, frame)
            surf = hs.construct(algebra.base, xi)
            assert surf.ambient_operator(surf.gauss_ricci()) == closed
            assert surf.gauss_ricci() == surf.sub.ricci()


def test_closed_form_blocks_n21():
    algebra = hh.build_named(2, 1)
    xi = hh.unit_xi_basis(algebra, 0)
    frame = hh.xi_frame(algebra, xi)
    closed = hh.hypersurface_ricci_closed_form(algebra, frame)
    for w in frame.perp_basis:
        assert closed.apply(w) == tuple(-x for x in w)
    for w in frame.j_xi_basis:
        assert closed.apply(w) == tuple(Q(-1, 2) * x for x in w)
    z = algebra.base.basis_vector(algebra.n)
    assert closed.apply(z) == tuple(Q(1, 2) * x for x in z)
    assert is_zero_vec(closed.apply(xi))


def test_subalgebra_iff_xi_in_v():
    algebra = hh.build_named(2, 1)
    assert algebra.base.orthogonal_complement_subalgebra(hh.unit_xi_basis(algebra, 1)) is not None
    z = algebra.base.basis_vector(algebra.n)
    assert algebra.base.orthogonal_complement_subalgebra(z) is None
