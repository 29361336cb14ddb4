from solvsol import damekricci as dr
from solvsol import heisenberg as hh
from solvsol import iwasawa as iw
from solvsol import soliton
from solvsol.lie import MetricLieAlgebra
from solvsol.linalg import Matrix, Q


def sub_for(space, xi):
    return space.base.orthogonal_complement_subalgebra(xi)[0]


def test_flat_abelian_hypersurface_is_einstein():
    space = hh.build_named(1, 1)
    verdict = soliton.decide(sub_for(space, hh.unit_xi_basis(space, 0)))
    assert verdict.is_soliton and verdict.einstein
    assert verdict.c == 0 and verdict.derivation.is_zero()


def test_n61_has_a_sound_witness():
    space = hh.build_named(6, 1)
    sub = sub_for(space, hh.unit_xi_basis(space, 0))
    verdict = soliton.decide(sub)
    assert not verdict.is_soliton
    assert verdict.witness
    assert soliton.verify_certificate(sub, verdict)


def test_lohnherr_certificate():
    space = dr.build_named(1, 1)
    sub = sub_for(space, space.embed(0, (1, 0), [0]))
    verdict = soliton.decide(sub)
    assert verdict.is_soliton and verdict.c == Q(-5, 4)
    assert soliton.verify_certificate(sub, verdict)


def test_decide_einstein_values():
    assert soliton.decide_einstein(dr.build_named(1, 1).base) == Q(-3, 2)
    assert soliton.decide_einstein(dr.build_named(3, (1, 0)).base) == Q(-4)
    k = soliton.decide_einstein(iw.build_named(3).base)
    assert k is not None and k < 0
    assert soliton.decide_einstein(hh.build_named(1, 1).base) is None


def test_certificates_frozen_from_the_case_analysis():
    # blockwise derivation constants pinned by the pair-type equations:
    # cross pairs force c = (4-4m-n)/4, perp pairs c = (2-4m-n)/4,
    # j-pairs c = (6-4m-n)/4; which one binds depends on the vanishing pattern
    expected = {
        (1, 2): Q(-3, 2),
        (2, 1): Q(-2),
        (3, (1, 0)): Q(-5, 2),
        (7, (1, 0)): Q(-15, 2),
    }
    for (m, mult), c in expected.items():
        space = hh.build_named(m, mult)
        verdict = soliton.decide(sub_for(space, hh.unit_xi_basis(space, 0)))
        assert verdict.is_soliton and verdict.c == c, (m, mult)


def test_half_spin_certificates():
    for m, c in ((4, Q(-5)), (8, Q(-11))):
        space = hh.build_named(m, 1)
        verdict = soliton.decide(sub_for(space, hh.unit_xi_half_spin(space, "+", 1)))
        assert verdict.is_soliton and verdict.c == c
        mixed = soliton.decide(sub_for(space, hh.unit_xi_mixed(space, 3, 4)))
        assert not mixed.is_soliton


def test_two_of_three_crosscheck():
    for m, mult in [(2, 1), (5, 1), (6, 1), (8, 1)]:
        space = hh.build_named(m, mult)
        xi = hh.unit_xi_random(space, 8)
        frame = hh.xi_frame(space, xi)
        assert soliton.theorem_predicate_crosscheck(space, frame)


def test_abelian_convention():
    flat = MetricLieAlgebra(3, [], Matrix.identity(3))
    verdict = soliton.decide(flat)
    assert verdict.is_soliton and verdict.einstein and verdict.c == 0


def test_verdict_json_shape():
    space = dr.build_named(1, 1)
    verdict = soliton.decide(sub_for(space, space.embed(0, (1, 0), [0])))
    doc = verdict.to_json_dict()
    assert doc["is_soliton"] is True
    assert doc["c"] == "-5/4"
    assert doc["D_eigenvalues"] == [["-1/4", 1], ["0", 1], ["1/2", 1]]
    assert doc["witness"] is None
    assert doc["completely_solvable"] is True
    assert "assumption" in doc
    negative = soliton.decide(sub_for(hh.build_named(6, 1), hh.unit_xi_basis(hh.build_named(6, 1), 0)))
    ndoc = negative.to_json_dict()
    assert ndoc["is_soliton"] is False and ndoc["c"] is None
    assert isinstance(ndoc["witness"], list) and len(ndoc["witness"]) == 2


def test_verdict_invariance_under_basis_change_and_scaling():
    space = hh.build_named(2, 1)
    sub = sub_for(space, hh.unit_xi_basis(space, 0))
    verdict = soliton.decide(sub)
    p = Matrix([[1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [2, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    moved = soliton.decide(sub.change_basis(p))
    assert moved.is_soliton == verdict.is_soliton and moved.c == verdict.c
    for t in (Q(2), Q(1, 3)):
        scaled = soliton.decide(sub.scaled_metric(t))
        assert scaled.is_soliton == verdict.is_soliton
        assert scaled.c == verdict.c / t
