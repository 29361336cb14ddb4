"""Generalized Heisenberg (H-type) algebras built from Clifford modules.

The algebra is n = v + z with orthonormal basis (v first, then z), center z,
and bracket defined through the module action by <J_Z U, V> = <[U, V], Z>.
The J-map identities make n two-step nilpotent with [v, v] = z.

For a unit normal xi in v the tangent space of the orthocomplement subgroup
splits as  J xi  +  (J xi)-perp  +  z, and the induced Ricci operator is
scalar on each piece: -m/2 on the perp block, (1-m)/2 on J xi, (n-2)/4 on z.
That closed form is exposed here as an ambient-coordinates operator so the
generic Gauss-equation route can be checked against it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import Q

from .clifford import CliffordModule, HalfSpinSplit, assemble, half_spin_split
from .lie import MetricLieAlgebra
from .linalg import (
    Matrix,
    Vector,
    gram_orthogonalize,
    is_zero_vec,
    nullspace,
    unit_sphere_rational_sample,
    unit_vector_in_span,
    vec,
    vec_add,
    vec_dot,
    vec_scale,
    vec_zero,
)


@dataclass
class HTypeAlgebra:
    base: MetricLieAlgebra
    module: CliffordModule
    v_range: range
    z_range: range

    @property
    def n(self) -> int:
        return self.module.n

    @property
    def m(self) -> int:
        return self.module.m

    def name(self) -> str:
        mult = self.module.multiplicity
        if isinstance(mult, tuple):
            return f"N({self.m},{mult[0]},{mult[1]})"
        return f"N({self.m},{mult})"

    def embed_v(self, u) -> Vector:
        u = vec(u)
        return tuple(u) + vec_zero(self.m)

    def embed_z(self, z) -> Vector:
        z = vec(z)
        return vec_zero(self.n) + tuple(z)

    def v_part(self, x) -> Vector:
        return tuple(vec(x)[i] for i in self.v_range)

    def z_part(self, x) -> Vector:
        return tuple(vec(x)[i] for i in self.z_range)

    def j_image(self, k: int, xi) -> Vector:
        """J_{Z_k} applied to the v-part of xi, embedded back into n."""
        return self.embed_v(self.module.generators[k].apply(self.v_part(xi)))


def build(module: CliffordModule) -> HTypeAlgebra:
    """H-type algebra of a Clifford module, on an orthonormal basis.

    Structure constants: [e_i, e_j] = sum_k <J_k e_i, e_j> Z_k for basis
    vectors of v.  The center z and [v,v] = z are verified exactly.
    """
    n, m = module.n, module.m
    dim = n + m
    triples = []
    for k, g in enumerate(module.generators):
        for j in range(n):
            row = g.data[j]
            for i in range(n):
                if row[i] != 0 and i < j:
                    # <J_k e_i, e_j> = (J_k)_{j i}
                    triples.append((i, j, n + k, row[i]))
    labels = [f"v{i}" for i in range(n)] + [f"z{k}" for k in range(m)]
    base = MetricLieAlgebra(dim, triples, Matrix.identity(dim), labels=labels)
    algebra = HTypeAlgebra(base=base, module=module, v_range=range(n), z_range=range(n, dim))
    # [v, v] must span z exactly
    span_rows = [
        list(base.bracket(base.basis_vector(i), base.basis_vector(j))[n:])
        for i in range(n)
        for j in range(i + 1, n)
    ]
    if not span_rows or nullspace(Matrix(span_rows)):
        raise AssertionError("[v, v] does not span the center")
    return algebra


_MODULE_CACHE: dict = {}


def build_named(m: int, multiplicity) -> HTypeAlgebra:
    key = (m, multiplicity)
    if key not in _MODULE_CACHE:
        _MODULE_CACHE[key] = build(assemble(m, multiplicity))
    return _MODULE_CACHE[key]


@dataclass
class XiFrame:
    """Orthogonal splitting v = R xi + J xi + (J xi)-perp attached to a unit xi."""

    xi: Vector
    j_xi_basis: tuple
    perp_basis: tuple


def xi_frame(algebra: HTypeAlgebra, xi) -> XiFrame:
    xi = vec(xi)
    base = algebra.base
    if base.gram_ip(xi, xi) != 1:
        raise ValueError("xi must be a unit vector")
    if not is_zero_vec(algebra.z_part(xi)):
        raise ValueError("xi must lie in v")
    j_basis = tuple(algebra.j_image(k, xi) for k in range(algebra.m))
    rows = [list(algebra.v_part(xi))] + [list(algebra.v_part(b)) for b in j_basis]
    perp = tuple(algebra.embed_v(v) for v in nullspace(Matrix(rows)))
    if len(perp) != algebra.n - algebra.m - 1:
        raise AssertionError("perp block has unexpected dimension")
    return XiFrame(xi=xi, j_xi_basis=j_basis, perp_basis=perp)


def predicates(algebra: HTypeAlgebra, frame: XiFrame) -> tuple[bool, bool, bool]:
    """(J xi abelian, perp abelian, [J xi, perp] = 0), each decided exactly."""
    base = algebra.base

    def all_zero(lhs, rhs):
        return all(
            is_zero_vec(base.bracket(u, v)) for u in lhs for v in rhs
        )

    j = frame.j_xi_basis
    p = frame.perp_basis
    j_abelian = all(
        is_zero_vec(base.bracket(j[a], j[b]))
        for a in range(len(j))
        for b in range(a + 1, len(j))
    )
    p_abelian = all(
        is_zero_vec(base.bracket(p[a], p[b]))
        for a in range(len(p))
        for b in range(a + 1, len(p))
    )
    cross_zero = all_zero(j, p)
    return j_abelian, p_abelian, cross_zero


def _projector(vectors, dim: int) -> Matrix:
    """Orthogonal projector onto the span, for an orthonormal ambient basis."""
    out = Matrix.zeros(dim, dim)
    for w in gram_orthogonalize([vec(v) for v in vectors], Matrix.identity(dim)):
        q = vec_dot(w, w)
        outer = Matrix([[wi * wj / q for wj in w] for wi in w])
        out = out + outer
    return out


def hypersurface_ricci_closed_form(algebra: HTypeAlgebra, frame: XiFrame) -> Matrix:
    """Induced Ricci operator of the xi-orthocomplement subgroup, closed form.

    Returned in ambient coordinates, acting as zero on xi itself: scalar
    blocks -m/2, (1-m)/2 and (n-2)/4 on (J xi)-perp, J xi and z.
    """
    n, m = algebra.n, algebra.m
    dim = n + m
    p_j = _projector(frame.j_xi_basis, dim)
    p_z = Matrix.diagonal([Q(i >= n) for i in range(dim)])
    p_xi = _projector([frame.xi], dim)
    p_v = Matrix.diagonal([Q(i < n) for i in range(dim)])
    p_perp = p_v - p_xi - p_j
    return (
        p_perp.scale(Q(-m, 2))
        + p_j.scale(Q(1 - m, 2))
        + p_z.scale(Q(n - 2, 4))
    )


# -- rational unit normals in v ------------------------------------------------


def unit_xi_random(algebra: HTypeAlgebra, seed: int) -> Vector:
    return algebra.embed_v(unit_sphere_rational_sample(algebra.n, seed))


def unit_xi_basis(algebra: HTypeAlgebra, index: int) -> Vector:
    if not 0 <= index < algebra.n:
        raise ValueError("basis index outside v")
    return algebra.base.basis_vector(index)


def half_spin(algebra: HTypeAlgebra) -> HalfSpinSplit:
    return half_spin_split(algebra.module)


def unit_xi_half_spin(algebra: HTypeAlgebra, sign: str, seed: int = 0) -> Vector:
    """Rational unit xi inside the half-spin submodule Delta_+ or Delta_-."""
    split = half_spin(algebra)
    basis = split.delta_plus if sign == "+" else split.delta_minus
    point = unit_vector_in_span(Matrix.identity(algebra.n), basis, seed=seed)
    return algebra.embed_v(point)


def unit_xi_mixed(algebra: HTypeAlgebra, p: int, q: int) -> Vector:
    """xi = (p u_+ + q u_-)/r with r^2 = p^2 + q^2 a perfect square.

    u_+ and u_- are deterministic unit vectors of the two half-spin pieces;
    they are orthogonal, so xi is exactly unit.
    """
    from math import isqrt

    r = isqrt(p * p + q * q)
    if r * r != p * p + q * q or r == 0:
        raise ValueError("p^2 + q^2 must be a nonzero perfect square")
    up = unit_xi_half_spin(algebra, "+", seed=0)
    um = unit_xi_half_spin(algebra, "-", seed=0)
    return vec_scale(
        Q(1, r), vec_add(vec_scale(p, up), vec_scale(q, um))
    )
