"""Damek-Ricci spaces: rank-one solvable extensions of H-type groups.

The algebra is a + v + z with unit A-direction B, [B, U] = U/2 on v and
[B, Z] = Z on z on top of the H-type bracket.  The metric extends the H-type
one orthogonally.  These spaces are Einstein with Ricci operator
-(m + n/4) id, which the generic curvature route must reproduce exactly.

Closed-form extrinsic geometry for a unit normal xi = a B + U (the only
admissible ones: a z-component obstructs the orthocomplement from closing):
shape, normal Jacobi and induced Ricci act on the frame

    R(|U|^2 B - a U)  +  (J U)-perp  +  J U  +  z

by the block formulas implemented in closed_form_hypersurface, with the
abbreviations mt = -m - n/4 and nt = m + n/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import Q

from .heisenberg import HTypeAlgebra, build_named
from .lie import MetricLieAlgebra
from .linalg import (
    Matrix,
    Vector,
    invert,
    is_zero_vec,
    nullspace,
    unit_sphere_rational_sample,
    vec,
    vec_dot,
    vec_zero,
)


@dataclass
class DamekRicciAlgebra:
    base: MetricLieAlgebra
    htype: HTypeAlgebra
    a_index: int  # position of B (always 0)

    @property
    def n(self) -> int:
        return self.htype.n

    @property
    def m(self) -> int:
        return self.htype.m

    def name(self) -> str:
        return "A" + self.htype.name()

    @property
    def mt(self):
        return Q(-self.m) - Q(self.n, 4)

    @property
    def nt(self):
        return Q(self.m) + Q(self.n, 2)

    def embed(self, a, u, z) -> Vector:
        """Ambient coordinates of a*B + U + Z from the three pieces."""
        u, z = vec(u), vec(z)
        return (Q(a),) + tuple(u) + tuple(z)

    def v_part(self, x) -> Vector:
        return tuple(vec(x)[1 : 1 + self.n])

    def z_part(self, x) -> Vector:
        return tuple(vec(x)[1 + self.n :])


def extend(htype: HTypeAlgebra) -> DamekRicciAlgebra:
    n, m = htype.n, htype.m
    dim = 1 + n + m
    triples = []
    for (i, j), comp in htype.base._bk.items():
        for k, val in comp.items():
            triples.append((i + 1, j + 1, k + 1, val))
    for i in range(n):
        triples.append((0, 1 + i, 1 + i, Q(1, 2)))
    for k in range(m):
        triples.append((0, 1 + n + k, 1 + n + k, Q(1)))
    labels = ["B"] + [f"v{i}" for i in range(n)] + [f"z{k}" for k in range(m)]
    base = MetricLieAlgebra(dim, triples, Matrix.identity(dim), labels=labels)
    return DamekRicciAlgebra(base=base, htype=htype, a_index=0)


_CACHE: dict = {}


def build_named(m: int, multiplicity) -> DamekRicciAlgebra:
    key = (m, multiplicity)
    if key not in _CACHE:
        from . import heisenberg

        _CACHE[key] = extend(heisenberg.build_named(m, multiplicity))
    return _CACHE[key]


def admissible_normal(space: DamekRicciAlgebra, xi) -> bool:
    """Whether the orthocomplement of xi closes under the bracket.

    Exactly the xi = a B + U (zero z-component) pass.
    """
    return space.base.orthogonal_complement_subalgebra(xi) is not None


def unit_normal(space: DamekRicciAlgebra, a, u) -> Vector:
    """Checked unit normal a*B + U."""
    xi = space.embed(a, u, vec_zero(space.m))
    if space.base.gram_ip(xi, xi) != 1:
        raise ValueError("a^2 + |U|^2 must equal 1 exactly")
    return xi


def sample_unit_normal(space: DamekRicciAlgebra, seed: int, require_mixed=False) -> Vector:
    """Rational unit a*B + U via a stereographic point on the (1+n)-sphere."""
    for probe in range(64):
        point = unit_sphere_rational_sample(1 + space.n, seed * 64 + probe)
        a, u = point[0], point[1:]
        if not require_mixed or (a != 0 and not is_zero_vec(u)):
            return space.embed(a, u, vec_zero(space.m))
    raise AssertionError("sampler failed to produce a mixed normal")


def closed_form_hypersurface(space: DamekRicciAlgebra, a, u):
    """(shape, trace, jacobi, ricci) for the unit normal xi = a B + U.

    All three operators are returned in ambient coordinates, extended by zero
    on xi.  trace is the mean curvature a (m + n/2).
    """
    a = Q(a)
    u = vec(u)
    n, m = space.n, space.m
    if len(u) != n:
        raise ValueError("U must be a v-vector")
    uu = vec_dot(u, u)
    if a * a + uu != 1:
        raise ValueError("a^2 + |U|^2 must equal 1 exactly")
    mt, nt = space.mt, space.nt
    xi = space.embed(a, u, vec_zero(m))
    zero = vec_zero(space.base.dim)

    frame: list[Vector] = []
    shape_img: list[Vector] = []
    jacobi_img: list[Vector] = []
    ricci_img: list[Vector] = []

    def add(v, sv, jv, rv):
        frame.append(v)
        shape_img.append(sv)
        jacobi_img.append(jv)
        ricci_img.append(rv)

    def lin(*pairs) -> Vector:
        out = list(zero)
        for c, v in pairs:
            if c == 0:
                continue
            for i, x in enumerate(v):
                if x != 0:
                    out[i] += c * x
        return tuple(out)

    ric_flat = (uu + 4 * mt + 2 * a * a * nt) / 4  # on R(|U|^2 B - aU) + (JU)-perp

    if is_zero_vec(u):
        # xi = +-B: the hypersurface is the H-type group itself
        v_block = [space.base.basis_vector(1 + i) for i in range(n)]
        for v in v_block:
            add(v, lin((a / 2, v)), lin((Q(-1, 4), v)), lin((ric_flat, v)))
    else:
        v0 = lin((uu, space.base.basis_vector(0)), (-a, space.embed(0, u, vec_zero(m))))
        add(v0, lin((a / 2, v0)), lin((Q(-1, 4), v0)), lin((ric_flat, v0)))
        gens = space.htype.module.generators
        ju = [space.embed(0, g.apply(u), vec_zero(m)) for g in gens]
        rows = [list(u)] + [list(space.v_part(w)) for w in ju]
        perp = [space.embed(0, w, vec_zero(m)) for w in nullspace(Matrix(rows))]
        for v in perp:
            add(v, lin((a / 2, v)), lin((Q(-1, 4), v)), lin((ric_flat, v)))
        zs = [space.base.basis_vector(1 + n + k) for k in range(m)]
        for k in range(m):
            add(
                ju[k],
                lin((a / 2, ju[k]), (uu / 2, zs[k])),
                lin((-(3 * uu + 1) / 4, ju[k]), (Q(-3, 4) * a * uu, zs[k])),
                lin(((3 * uu + 4 * mt + 2 * a * a * nt) / 4, ju[k]), (nt / 2 * a * uu, zs[k])),
            )
    zs = [space.base.basis_vector(1 + n + k) for k in range(m)]
    if is_zero_vec(u):
        for k in range(m):
            add(
                zs[k],
                lin((a, zs[k])),
                lin((-Q(1), zs[k])),
                lin((mt + a * a * nt, zs[k])),
            )
    else:
        gens = space.htype.module.generators
        ju = [space.embed(0, g.apply(u), vec_zero(m)) for g in gens]
        for k in range(m):
            add(
                zs[k],
                lin((Q(1, 2), ju[k]), (a, zs[k])),
                lin((Q(-3, 4) * a, ju[k]), (Q(3, 4) * uu - 1, zs[k])),
                lin((nt / 2 * a, ju[k]), (mt + a * a * nt, zs[k])),
            )

    frame_full = Matrix.from_columns(frame + [xi])
    finv = invert(frame_full)

    def assemble(images) -> Matrix:
        return Matrix.from_columns(images + [zero]) @ finv

    trace = a * (Q(m) + Q(n, 2))
    return assemble(shape_img), trace, assemble(jacobi_img), assemble(ricci_img)
