"""Codimension-one geometry of a metric Lie algebra.

Given an ambient algebra and a unit normal xi whose Gram-orthocomplement is a
subalgebra, this computes the induced algebra, the shape operator
S(x) = -nabla_x xi, the normal Jacobi operator x -> R(x, xi) xi, and the
Gauss-equation Ricci

    Ric = (ambient Ricci restricted)^T + tr(S) S - S^2 - R_xi.

The central consistency fact of the whole package is that this extrinsic
expression coincides exactly with the intrinsic Ricci operator of the induced
metric Lie algebra; tests enforce it on every instance they build.
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import Q

from .lie import MetricLieAlgebra
from .linalg import Matrix, Vector, vec


class NotSubalgebraError(ValueError):
    """The orthocomplement of xi is not closed under the bracket."""


@dataclass
class Hypersurface:
    ambient: MetricLieAlgebra
    xi: Vector
    sub: MetricLieAlgebra
    inclusion: Matrix  # ambient coords of the sub basis, column per basis vector
    projection: Matrix  # sub coords of ambient vectors (Gram-orthogonal)
    shape: Matrix
    jacobi: Matrix

    def to_sub(self, ambient_vector) -> Vector:
        return self.projection.apply(vec(ambient_vector))

    def to_ambient(self, sub_vector) -> Vector:
        return self.inclusion.apply(vec(sub_vector))

    def sub_operator(self, ambient_op: Matrix) -> Matrix:
        """Compress an ambient endomorphism to the hypersurface."""
        return self.projection @ ambient_op @ self.inclusion

    def ambient_operator(self, sub_op: Matrix) -> Matrix:
        """Extend a sub endomorphism by zero on xi."""
        return self.inclusion @ sub_op @ self.projection

    def mean_curvature(self):
        return self.shape.trace()

    def gauss_ricci(self) -> Matrix:
        """Induced Ricci via the Gauss equation, in sub coordinates."""
        restricted = self.sub_operator(self.ambient.ricci())
        s = self.shape
        return restricted + s.scale(s.trace()) - s @ s - self.jacobi


def construct(ambient: MetricLieAlgebra, xi) -> Hypersurface:
    """Build the hypersurface attached to a unit normal xi.

    Raises NotSubalgebraError when the orthocomplement fails to close (a
    meaningful verdict in its own right, distinct from any soliton answer)
    and ValueError when xi is not exactly unit.
    """
    xi = vec(xi)
    if ambient.gram_ip(xi, xi) != 1:
        raise ValueError("xi must be a unit vector")
    result = ambient.orthogonal_complement_subalgebra(xi)
    if result is None:
        raise NotSubalgebraError("the orthocomplement of xi is not a subalgebra")
    sub, inclusion = result
    d = ambient.dim
    cols = [inclusion.column(j) for j in range(sub.dim)]
    norms = [ambient.gram_ip(b, b) for b in cols]
    gcols = [ambient.gram.apply(b) for b in cols]
    projection = Matrix(
        [[gcols[k][i] / norms[k] for i in range(d)] for k in range(sub.dim)]
    )
    # nabla_x xi and R(x, xi) xi are linear in x, so everything reduces to
    # the basis images u_i = nabla_{e_i} xi and p_i = nabla_{e_i} nabla_xi xi
    ops = ambient.levi_civita()
    u = [ops[i].apply(xi) for i in range(d)]
    w = [Q(0)] * d
    for i, c in enumerate(xi):
        if c != 0:
            for r, x in enumerate(u[i]):
                if x != 0:
                    w[r] += c * x
    p = [ops[i].apply(tuple(w)) for i in range(d)]
    nabla_xi_op = ambient.nabla(xi)

    def combine(images, coeffs):
        out = [Q(0)] * d
        for i, c in enumerate(coeffs):
            if c != 0:
                img = images[i]
                for r in range(d):
                    if img[r] != 0:
                        out[r] += c * img[r]
        return tuple(out)

    shape_cols = []
    jacobi_cols = []
    for b in cols:
        grad = combine(u, b)  # nabla_b xi
        shape_cols.append(projection.apply(tuple(-x for x in grad)))
        jac = combine(p, b)  # nabla_b nabla_xi xi
        second = nabla_xi_op.apply(grad)
        third = combine(u, ambient.bracket(b, xi))
        jacobi_cols.append(
            projection.apply(tuple(a - s - t for a, s, t in zip(jac, second, third)))
        )
    return Hypersurface(
        ambient=ambient,
        xi=xi,
        sub=sub,
        inclusion=inclusion,
        projection=projection,
        shape=Matrix.from_columns(shape_cols),
        jacobi=Matrix.from_columns(jacobi_cols),
    )
