"""Metric Lie algebras over Q: brackets, connection, curvature, Ricci.

A MetricLieAlgebra is a basis-indexed Lie algebra with rational structure
constants together with a rational positive-definite Gram matrix.  The basis
is *not* assumed orthonormal; adjoints and traces are always taken against the
Gram matrix, which keeps every computation inside Q (orthonormalizing would
drag in square roots).

Operators on the algebra (Ricci, shape, derivations, ...) are plain matrices
acting on basis coordinates.

The Levi-Civita connection comes from the Koszul formula for left-invariant
fields,

    2 <nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>,

the curvature is R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z -
nabla_[x,y] z, and the Ricci operator is the Gram-raised trace
Ric(x,y) = tr(z -> R(z,x)y).  These generic routes double as the independent
oracle against every closed-form operator the space builders know.
"""

from __future__ import annotations

import random

from .linalg import (
    Q,
    Matrix,
    Rational,
    Vector,
    gram_orthogonalize,
    invert,
    is_positive_definite,
    is_zero_vec,
    nullspace,
    rat,
    rat_str,
    vec,
    vec_dot,
    vec_zero,
)

# An endomorphism of a MetricLieAlgebra is just a dim x dim Matrix acting on
# basis coordinates; no wrapper type is needed.
Endomorphism = Matrix


class MetricLieAlgebra:
    """Lie algebra with rational structure constants and inner product.

    brackets may be given as sparse triples [(i, j, k, value)] meaning
    [e_i, e_j] has component value along e_k, or as a mapping
    (i, j) -> {k: value}.  Antisymmetry is structural: only i < j is stored,
    and [e_i, e_i] != 0 is rejected.  Construction verifies the Jacobi
    identity on every basis triple and positive definiteness of the Gram
    matrix, both exactly.
    """

    def __init__(self, dim, brackets, gram, labels=None, check=True):
        self.dim = dim
        self.gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if self.gram.rows != dim or self.gram.cols != dim:
            raise ValueError("gram must be dim x dim")
        self.labels = list(labels) if labels else None
        self._bk: dict[tuple[int, int], dict[int, Rational]] = {}
        self._ingest(brackets)
        self._nabla = None
        self._nabla_nz = None
        self._ricci = None
        self._gram_inv = None
        self._adj = None
        self._gram_diag = None
        if all(
            self.gram.data[i][j] == 0
            for i in range(dim)
            for j in range(dim)
            if i != j
        ):
            self._gram_diag = [self.gram.data[i][i] for i in range(dim)]
        if check:
            self._validate()

    # -- construction -----------------------------------------------------

    def _ingest(self, brackets):
        if isinstance(brackets, dict):
            triples = [
                (i, j, k, v) for (i, j), comp in brackets.items() for k, v in comp.items()
            ]
        else:
            triples = list(brackets)
        for i, j, k, v in triples:
            v = rat(v)
            if v == 0:
                continue
            if not (0 <= i < self.dim and 0 <= j < self.dim and 0 <= k < self.dim):
                raise ValueError("bracket index out of range")
            if i == j:
                raise ValueError(f"[e_{i}, e_{i}] must vanish")
            if i > j:
                i, j, v = j, i, -v
            comp = self._bk.setdefault((i, j), {})
            if k in comp:
                raise ValueError(f"duplicate structure constant for ({i},{j},{k})")
            comp[k] = v

    def _validate(self):
        if not is_positive_definite(self.gram):
            raise ValueError("gram matrix is not symmetric positive definite")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bij = self._bk.get((i, j), {})
                for k in range(j + 1, self.dim):
                    acc: dict[int, Rational] = {}
                    self._acc_double(acc, bij, k, Q(1))
                    self._acc_double(acc, self._bk.get((j, k), {}), i, Q(1))
                    # [e_k, e_i] = -[e_i, e_k]
                    self._acc_double(acc, self._bk.get((i, k), {}), j, Q(-1))
                    if any(v != 0 for v in acc.values()):
                        raise ValueError(f"Jacobi identity fails on triple ({i},{j},{k})")

    def _acc_double(self, acc, comp, k, sign):
        # acc += sign * [sum_l comp[l] e_l, e_k]
        for l, c in comp.items():
            for m, w in self.bracket_basis(l, k).items():
                acc[m] = acc.get(m, Q(0)) + sign * c * w

    # -- bracket and metric ------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Rational]:
        if i == j:
            return {}
        if i < j:
            return self._bk.get((i, j), {})
        return {k: -v for k, v in self._bk.get((j, i), {}).items()}

    def bracket(self, x, y) -> Vector:
        x, y = vec(x), vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length != dim")
        out = [Q(0)] * self.dim
        for (i, j), comp in self._bk.items():
            coef = x[i] * y[j] - x[j] * y[i]
            if coef == 0:
                continue
            for k, v in comp.items():
                out[k] += coef * v
        return tuple(out)

    def _adjacency(self):
        # per basis index j: list of (i, k, value) with [e_i, e_j] = sum value e_k
        if self._adj is None:
            adj = [[] for _ in range(self.dim)]
            for (i, j), comp in self._bk.items():
                for k, v in comp.items():
                    adj[j].append((i, k, v))
                    adj[i].append((j, k, -v))
            self._adj = adj
        return self._adj

    def bracket_with_basis(self, x, j: int) -> Vector:
        """[x, e_j], linear in x; much cheaper than the general bracket."""
        x = vec(x)
        out = [Q(0)] * self.dim
        for i, k, v in self._adjacency()[j]:
            if x[i] != 0:
                out[k] += x[i] * v
        return tuple(out)

    def gram_ip(self, u, v) -> Rational:
        u, v = vec(u), vec(v)
        if self._gram_diag is not None:
            return sum(
                (a * g * b for a, g, b in zip(u, self._gram_diag, v) if a != 0 and b != 0),
                Q(0),
            )
        return vec_dot(u, self.gram.apply(v))

    def gram_inverse(self) -> Matrix:
        if self._gram_inv is None:
            self._gram_inv = invert(self.gram)
        return self._gram_inv

    def basis_vector(self, i: int) -> Vector:
        return tuple(Q(k == i) for k in range(self.dim))

    def ad(self, x) -> Matrix:
        x = vec(x)
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    # -- Levi-Civita connection and curvature ------------------------------

    def levi_civita(self) -> list[Matrix]:
        """Connection operators nabla_{e_i}, one matrix per basis direction.

        Metric compatibility and torsion-freeness hold exactly by the Koszul
        construction; the test suite re-verifies both identities.
        """
        if self._nabla is not None:
            return self._nabla
        d = self.dim
        g = self.gram.data
        diag = self._gram_diag
        ginv = None if diag is not None else self.gram_inverse()
        adj = self._adjacency()
        half = Q(1, 2)
        columns = [[None] * d for _ in range(d)]
        for i in range(d):
            adj_i = adj[i]
            for j in range(d):
                w = [Q(0)] * d
                # <[e_i, e_j], e_k>: bracket components against the Gram rows
                for l, v in self.bracket_basis(i, j).items():
                    if diag is not None:
                        w[l] += v * diag[l]
                    else:
                        grow = g[l]
                        for k in range(d):
                            if grow[k] != 0:
                                w[k] += v * grow[k]
                # -<[e_j, e_k], e_i> at k = a, from [e_a, e_j] = sum v e_l
                for a, l, v in adj[j]:
                    if g[l][i] != 0:
                        w[a] += v * g[l][i]
                # +<[e_k, e_i], e_j> at k = a, from [e_a, e_i] = sum v e_l
                for a, l, v in adj_i:
                    if g[l][j] != 0:
                        w[a] += v * g[l][j]
                if diag is not None:
                    columns[i][j] = tuple(
                        x * half / q if x != 0 else Q(0)
                        for x, q in zip(w, diag)
                    )
                else:
                    columns[i][j] = ginv.apply(tuple(x * half for x in w))
        nabla = [Matrix.from_columns(cols) for cols in columns]
        nz = []
        for op in nabla:
            data = op.data
            nz.append(
                [
                    (r, c, data[r][c])
                    for r in range(d)
                    for c in range(d)
                    if data[r][c] != 0
                ]
            )
        self._nabla = nabla
        self._nabla_nz = nz
        return nabla

    def nabla(self, x) -> Matrix:
        """nabla_x as a matrix, extended linearly in the direction x."""
        x = vec(x)
        self.levi_civita()
        out = [[Q(0)] * self.dim for _ in range(self.dim)]
        for i, coeff in enumerate(x):
            if coeff == 0:
                continue
            for r, c, v in self._nabla_nz[i]:
                out[r][c] += coeff * v
        return Matrix(out)

    def nabla_apply(self, x, v) -> Vector:
        """nabla_x v without materializing the operator matrix."""
        x, v = vec(x), vec(v)
        self.levi_civita()
        out = [Q(0)] * self.dim
        for i, coeff in enumerate(x):
            if coeff == 0:
                continue
            for r, c, val in self._nabla_nz[i]:
                if v[c] != 0:
                    out[r] += coeff * val * v[c]
        return tuple(out)

    def curvature(self, x, y, z) -> Vector:
        """R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z."""
        x, y, z = vec(x), vec(y), vec(z)
        first = self.nabla_apply(x, self.nabla_apply(y, z))
        second = self.nabla_apply(y, self.nabla_apply(x, z))
        third = self.nabla_apply(self.bracket(x, y), z)
        return tuple(a - b - c for a, b, c in zip(first, second, third))

    def ricci(self) -> Matrix:
        """Ricci operator: Gram-raised trace of z -> R(z,x)y.

        Exploits sparsity of the connection operators; exact.
        """
        if self._ricci is not None:
            return self._ricci
        d = self.dim
        nabla = self.levi_civita()
        # t_b = sum_a (nabla_a)_{ab}, the only dense precomputation needed
        t = [Q(0)] * d
        for a in range(d):
            row = nabla[a].data[a]
            for b in range(d):
                if row[b] != 0:
                    t[b] += row[b]
        # nonzero entries of each connection operator, whole and per row
        nz = self._nabla_nz
        rows_nz = []
        for j in range(d):
            data = nabla[j].data
            rows_nz.append(
                [[(k, row[k]) for k in range(d) if row[k] != 0] for row in data]
            )
        ric02 = [[Q(0)] * d for _ in range(d)]
        for j in range(d):
            out = ric02[j]
            # sum_a [nabla_a nabla_j e_k]_a  as the row  t . nabla_j
            for b, c, x in nz[j]:
                if t[b] != 0:
                    out[c] += t[b] * x
            # sum_a [nabla_j nabla_a e_k]_a : row c of nabla_r scaled by (nabla_j)_{rc}
            for r, c, v in nz[j]:
                for k, w in rows_nz[r][c]:
                    out[k] -= v * w
            # sum_a [nabla_{[e_a, e_j]} e_k]_a
            for a, l, c in self._adjacency()[j]:
                for k, w in rows_nz[l][a]:
                    out[k] -= c * w
        op = self.gram_inverse() @ Matrix(ric02)
        self._ricci = op
        return op

    # -- derivations --------------------------------------------------------

    def leibniz_defect(self, op: Matrix) -> list[tuple[tuple[int, int], Vector]]:
        """All F(op)(e_i, e_j) = op[e_i,e_j] - [op e_i, e_j] - [e_i, op e_j], i<j."""
        out = []
        cols = [op.column(j) for j in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                b = [Q(0)] * self.dim
                for k, v in self.bracket_basis(i, j).items():
                    col = cols[k]
                    for r in range(self.dim):
                        if col[r] != 0:
                            b[r] += v * col[r]
                # [op e_i, e_j] and [e_i, op e_j] = -[op e_j, e_i]
                defect = vec_sub3(
                    tuple(b),
                    self.bracket_with_basis(cols[i], j),
                    tuple(-x for x in self.bracket_with_basis(cols[j], i)),
                )
                out.append(((i, j), defect))
        return out

    def is_derivation(self, op: Matrix) -> bool:
        return all(is_zero_vec(dv) for _, dv in self.leibniz_defect(op))

    # -- structure predicates ------------------------------------------------

    def _span(self, vectors) -> list[Vector]:
        rows = [list(v) for v in vectors if not is_zero_vec(v)]
        if not rows:
            return []
        from .linalg import _echelon

        _echelon(rows)
        return [tuple(r) for r in rows if any(x != 0 for x in r)]

    def derived_subalgebra_basis(self) -> list[Vector]:
        vecs = []
        for (i, j), comp in self._bk.items():
            w = [Q(0)] * self.dim
            for k, v in comp.items():
                w[k] = v
            vecs.append(tuple(w))
        return self._span(vecs)

    def is_abelian(self) -> bool:
        return not self._bk

    def is_nilpotent(self) -> bool:
        """Lower central series reaches zero (exact span saturation)."""
        current = self.derived_subalgebra_basis()
        for _ in range(self.dim + 1):
            if not current:
                return True
            nxt = []
            for i in range(self.dim):
                ei = self.basis_vector(i)
                for v in current:
                    w = self.bracket(ei, v)
                    if not is_zero_vec(w):
                        nxt.append(w)
            nxt = self._span(nxt)
            if len(nxt) == len(current):
                return False
            current = nxt
        return not current

    def is_solvable(self) -> bool:
        current = self.derived_subalgebra_basis()
        for _ in range(self.dim + 1):
            if not current:
                return True
            nxt = []
            for a in range(len(current)):
                for b in range(a + 1, len(current)):
                    w = self.bracket(current[a], current[b])
                    if not is_zero_vec(w):
                        nxt.append(w)
            nxt = self._span(nxt)
            if len(nxt) == len(current):
                return False
            current = nxt
        return not current

    def is_completely_solvable(self, seed: int = 11, samples: int = 8) -> bool:
        """Solvable with every ad(x) having only rational eigenvalues.

        Semi-decision as specified: the characteristic polynomial of ad(x)
        must split over Q for all basis vectors and a seeded set of random
        rational vectors.  Nilpotent algebras short-circuit (all ad(x) are
        nilpotent, char poly t^dim).
        """
        if not self.is_solvable():
            return False
        if self.is_nilpotent():
            return True
        rng = random.Random(seed)
        probes = [self.basis_vector(i) for i in range(self.dim)]
        for _ in range(samples):
            probes.append(
                tuple(Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(self.dim))
            )
        return all(_splits_over_q(char_poly(self.ad(x))) for x in probes)

    # -- subalgebras ----------------------------------------------------------

    def orthogonal_complement_subalgebra(self, xi):
        """Induced metric Lie algebra on the Gram-orthocomplement of xi.

        Returns (sub, inclusion) where inclusion columns are the chosen
        (Gram-orthogonalized, primitive integer) basis of xi-perp, or None
        when xi-perp is not closed under the bracket.  Raises on xi = 0.
        """
        xi = vec(xi)
        if is_zero_vec(xi):
            raise ValueError("xi must be nonzero")
        gxi = self.gram.apply(xi)
        basis = nullspace(Matrix([list(gxi)]))
        basis = gram_orthogonalize(basis, self.gram)
        r = len(basis)
        brackets_sparse = {}
        for p in range(r):
            for q in range(p + 1, r):
                w = self.bracket(basis[p], basis[q])
                support = [(l, x) for l, x in enumerate(w) if x != 0]
                if sum((x * gxi[l] for l, x in support), Q(0)) != 0:
                    return None
                if support:
                    brackets_sparse[(p, q)] = support
        norms = [self.gram_ip(b, b) for b in basis]
        gb = [self.gram.apply(b) for b in basis]
        triples = []
        for (p, q), support in brackets_sparse.items():
            for k in range(r):
                gbk = gb[k]
                coord = sum((x * gbk[l] for l, x in support), Q(0)) / norms[k]
                if coord != 0:
                    triples.append((p, q, k, coord))
        sub = MetricLieAlgebra(r, triples, Matrix.diagonal(norms))
        return sub, Matrix.from_columns(basis)

    # -- transforms -------------------------------------------------------------

    def scaled_metric(self, t) -> "MetricLieAlgebra":
        """Same brackets, Gram scaled by t > 0."""
        t = rat(t)
        if t <= 0:
            raise ValueError("metric scale must be positive")
        return MetricLieAlgebra(self.dim, dict(self._bk), self.gram.scale(t), self.labels, check=False)

    def change_basis(self, p: Matrix) -> "MetricLieAlgebra":
        """Pull everything through the basis change e'_j = sum_i p_ij e_i."""
        pinv = invert(p)
        cols = [p.column(j) for j in range(self.dim)]
        triples = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = pinv.apply(self.bracket(cols[i], cols[j]))
                for k, v in enumerate(w):
                    if v != 0:
                        triples.append((i, j, k, v))
        gram = p.transpose() @ self.gram @ p
        return MetricLieAlgebra(self.dim, triples, gram, check=False)

    # -- serialization ("mla-v1") -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "schema": "mla-v1",
            "dim": self.dim,
            "labels": self.labels,
            "gram": [[rat_str(x) for x in row] for row in self.gram.data],
            "brackets": sorted(
                [i, j, k, rat_str(v)]
                for (i, j), comp in self._bk.items()
                for k, v in comp.items()
            ),
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "MetricLieAlgebra":
        if doc.get("schema") != "mla-v1":
            raise ValueError("not an mla-v1 document")
        triples = [(i, j, k, Q(v)) for i, j, k, v in doc["brackets"]]
        gram = Matrix([[Q(x) for x in row] for row in doc["gram"]])
        return cls(doc["dim"], triples, gram, labels=doc.get("labels"))


def vec_sub3(a: Vector, b: Vector, c: Vector) -> Vector:
    return tuple(x - y - z for x, y, z in zip(a, b, c))


def char_poly(a: Matrix) -> list[Rational]:
    """Characteristic polynomial coefficients [1, c1, ..., cn] of t^n + c1 t^(n-1) + ...

    Faddeev-LeVerrier over Q.
    """
    n = a.rows
    coeffs = [Q(1)]
    m = Matrix.identity(n)
    for k in range(1, n + 1):
        m = a @ m
        c = -m.trace() / k
        coeffs.append(c)
        m = m + Matrix.identity(n).scale(c)
    return coeffs


def _factor_linear(coeffs: list[Rational]):
    """(fully_splits, rational_roots) of a polynomial given in descending powers.

    Factorization over Q is delegated to sympy; only the linear factors'
    roots are extracted, exactly.
    """
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(
        [sympy.Rational(int(c.numerator), int(c.denominator)) for c in coeffs],
        x,
        domain="QQ",
    )
    splits = True
    roots = []
    for factor, _mult in poly.factor_list()[1]:
        if factor.degree() > 1:
            splits = False
            continue
        a, b = factor.all_coeffs() if factor.degree() == 1 else (None, None)
        if a is not None:
            r = sympy.Rational(-b, a)
            roots.append(Q(int(r.p), int(r.q)))
    return splits, sorted(set(roots))


def _splits_over_q(coeffs: list[Rational]) -> bool:
    """Whether a rational polynomial factors into linear terms over Q."""
    return _factor_linear(coeffs)[0]


def rational_eigen_summary(op: Matrix) -> list[tuple[Rational, int]] | None:
    """(eigenvalue, multiplicity) pairs when op is Q-diagonalizable, else None.

    Multiplicities are geometric; diagonalizability is certified by their sum
    reaching the dimension.
    """
    n = op.rows
    splits, roots = _factor_linear(char_poly(op))
    if not splits:
        return None
    remaining = n
    summary = []
    for r in roots:
        shifted = op - Matrix.identity(n).scale(r)
        mult = len(nullspace(shifted))
        if mult:
            summary.append((r, mult))
            remaining -= mult
    if remaining != 0:
        return None
    return summary
