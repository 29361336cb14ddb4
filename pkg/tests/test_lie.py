import json
import random

import pytest

from solvsol.lie import MetricLieAlgebra, char_poly, rational_eigen_summary
from solvsol.linalg import Matrix, Q, is_zero_vec, vec


def heisenberg3():
    return MetricLieAlgebra(3, [(0, 1, 2, 1)], Matrix.identity(3))


def hyperbolic_plane():
    # [B, X] = X on an orthonormal basis
    return MetricLieAlgebra(2, [(0, 1, 1, 1)], Matrix.identity(2))


def abelian(n=3):
    return MetricLieAlgebra(n, [], Matrix.identity(n))


def test_construction_rejects_jacobi_violation():
    # [e0,e1] = e2 and [e1,e2] = e1 leave [[e0,e1],e2] + cyclic = -e2 != 0
    with pytest.raises(ValueError):
        MetricLieAlgebra(3, [(0, 1, 2, 1), (1, 2, 1, 1)], Matrix.identity(3))


def test_construction_rejects_diagonal_bracket_and_bad_gram():
    with pytest.raises(ValueError):
        MetricLieAlgebra(2, [(0, 0, 1, 1)], Matrix.identity(2))
    with pytest.raises(ValueError):
        MetricLieAlgebra(2, [], Matrix([[1, 2], [2, 1]]))


def test_bracket_bilinear_and_antisymmetric():
    L = heisenberg3()
    assert L.bracket((1, 0, 0), (0, 1, 0)) == (Q(0), Q(0), Q(1))
    assert L.bracket((0, 1, 0), (1, 0, 0)) == (Q(0), Q(0), Q(-1))
    x = vec([Q(1, 2), Q(3), Q(-1)])
    assert is_zero_vec(L.bracket(x, x))
    assert is_zero_vec(abelian().bracket((1, 2, 3), (4, 5, 6)))


def test_levi_civita_abelian_vanishes():
    L = abelian()
    assert all(op.is_zero() for op in L.levi_civita())


def test_levi_civita_heisenberg_values():
    # with [U,V] = Z orthonormal: nabla_U V = Z/2, nabla_U Z = -V/2, nabla_Z U = -V/2
    L = heisenberg3()
    U, V, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert L.nabla_apply(U, V) == (Q(0), Q(0), Q(1, 2))
    assert L.nabla_apply(U, U) == (Q(0), Q(0), Q(0))
    assert L.nabla_apply(U, Z) == (Q(0), Q(-1, 2), Q(0))
    assert L.nabla_apply(Z, U) == (Q(0), Q(-1, 2), Q(0))


def test_levi_civita_torsion_free_and_metric_on_samples():
    algebras = [heisenberg3(), hyperbolic_plane(), abelian(4)]
    # non-orthonormal metric on the Heisenberg brackets as well
    algebras.append(
        MetricLieAlgebra(3, [(0, 1, 2, 1)], Matrix([[2, 1, 0], [1, 3, 0], [0, 0, 5]]))
    )
    for L in algebras:
        for i in range(L.dim):
            ei = L.basis_vector(i)
            for j in range(L.dim):
                ej = L.basis_vector(j)
                lhs = tuple(
                    a - b
                    for a, b in zip(L.nabla_apply(ei, ej), L.nabla_apply(ej, ei))
                )
                assert lhs == L.bracket(ei, ej)
                for k in range(L.dim):
                    ek = L.basis_vector(k)
                    total = L.gram_ip(L.nabla_apply(ei, ej), ek) + L.gram_ip(
                        ej, L.nabla_apply(ei, ek)
                    )
                    assert total == 0


def test_curvature_flat_and_constant_negative():
    L = abelian()
    assert is_zero_vec(L.curvature((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    H = hyperbolic_plane()
    B, X = (1, 0), (0, 1)
    assert H.gram_ip(H.curvature(B, X, X), B) == -1
    assert is_zero_vec(H.curvature(X, X, B))


def test_ricci_closed_values_and_self_adjointness():
    L = heisenberg3()
    assert L.ricci() == Matrix.diagonal([Q(-1, 2), Q(-1, 2), Q(1, 2)])
    assert abelian().ricci().is_zero()
    skewed = MetricLieAlgebra(
        3, [(0, 1, 2, 1)], Matrix([[2, 1, 0], [1, 3, 0], [0, 0, 5]])
    )
    ric = skewed.ricci()
    assert (skewed.gram @ ric).is_symmetric()


def test_leibniz_defect_zero_and_identity():
    L = heisenberg3()
    zero = Matrix.zeros(3, 3)
    assert all(is_zero_vec(d) for _, d in L.leibniz_defect(zero))
    pairs = dict(L.leibniz_defect(Matrix.identity(3)))
    assert pairs[(0, 1)] == (Q(0), Q(0), Q(-1))  # F(id)(x,y) = -[x,y]
    grading = Matrix.diagonal([1, 1, 2])
    assert L.is_derivation(grading)


def test_orthocomplement_subalgebra_cases():
    L = heisenberg3()
    sub, incl = L.orthogonal_complement_subalgebra((1, 0, 0))
    assert sub.dim == 2 and sub.is_abelian()
    assert incl.rows == 3 and incl.cols == 2
    assert L.orthogonal_complement_subalgebra((0, 0, 1)) is None
    with pytest.raises(ValueError):
        L.orthogonal_complement_subalgebra((0, 0, 0))


def test_structure_predicates():
    assert heisenberg3().is_nilpotent()
    assert heisenberg3().is_completely_solvable()
    H = hyperbolic_plane()
    assert H.is_solvable() and not H.is_nilpotent() and H.is_completely_solvable()
    A = abelian()
    assert A.is_abelian() and A.is_nilpotent() and A.is_solvable()
    # rotation action has non-real ad eigenvalues: solvable but not completely
    rot = MetricLieAlgebra(
        3, [(0, 1, 2, 1), (0, 2, 1, -1)], Matrix.identity(3)
    )
    assert rot.is_solvable() and not rot.is_completely_solvable()


def test_char_poly_and_eigen_summary():
    a = Matrix([[1, 1], [0, 2]])
    assert char_poly(a) == [Q(1), Q(-3), Q(2)]
    assert rational_eigen_summary(Matrix.diagonal([1, 1, 2])) == [(Q(1), 2), (Q(2), 1)]
    assert rational_eigen_summary(Matrix([[0, -1], [1, 0]])) is None
    # splits but is not diagonalizable: a Jordan block
    assert rational_eigen_summary(Matrix([[1, 1], [0, 1]])) is None


def test_json_roundtrip():
    L = MetricLieAlgebra(
        3,
        [(0, 1, 2, Q(1, 2))],
        Matrix.diagonal([1, 1, 4]),
        labels=["a", "b", "c"],
    )
    doc = json.loads(json.dumps(L.to_json_dict()))
    M = MetricLieAlgebra.from_json_dict(doc)
    assert M.dim == L.dim and M.gram == L.gram and M.labels == L.labels
    assert M.bracket_basis(0, 1) == L.bracket_basis(0, 1)
    assert M.to_json_dict() == L.to_json_dict()


def test_change_basis_and_metric_scaling():
    L = heisenberg3()
    p = Matrix([[1, 1, 0], [0, 1, 0], [0, 2, 1]])
    moved = L.change_basis(p)
    # spectra of the Ricci operator are basis-independent
    assert rational_eigen_summary(moved.ricci()) == rational_eigen_summary(L.ricci())
    scaled = L.scaled_metric(Q(3))
    assert scaled.ricci() == L.ricci().scale(Q(1, 3))


def test_derived_subalgebra_preserved_by_derivations():
    L = heisenberg3()
    d = Matrix.diagonal([1, 1, 2])
    derived = L.derived_subalgebra_basis()
    assert derived == [(Q(0), Q(0), Q(1))]
    image = d.apply(derived[0])
    assert image == (Q(0), Q(0), Q(2))
