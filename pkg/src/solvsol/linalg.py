"""Exact rational scalars, vectors and matrices.

Everything downstream (structure constants, Gram matrices, connection and
curvature operators, soliton certificates) lives in Q, so this module is the
only arithmetic kernel: dense matrices of ``fractions.Fraction`` with exact
Gaussian elimination.  There is deliberately no floating-point mode.

Vectors are plain tuples of Fractions; helper functions operate on them.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd, isqrt, lcm

try:
    from gmpy2 import mpq as Q  # much faster exact rationals
except ImportError:  # pragma: no cover
    Q = Fraction

Rational = type(Q(0))

Vector = tuple  # tuple of Rational


def rat(x) -> Rational:
    """Coerce ints, strings like '3/4', or Fraction/mpq values to a Rational."""
    if type(x) is Rational:
        return x
    if isinstance(x, (int, str, Fraction, Rational)):
        return Q(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def rat_str(q: Rational) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(entries) -> Vector:
    return tuple(rat(x) for x in entries)


def vec_zero(n: int) -> Vector:
    return (Q(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = rat(c)
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Rational:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q(0))


def is_zero_vec(v: Vector) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Vector) -> Vector:
    """Scale a rational vector to coprime integer entries, first nonzero > 0."""
    nz = [a for a in v if a != 0]
    if not nz:
        return v
    den = lcm(*(a.denominator for a in nz))
    ints = [a * den for a in nz]
    g = gcd(*(abs(int(a)) for a in ints))
    scale = Q(den, g)
    if next(a for a in v if a != 0) < 0:
        scale = -scale
    return tuple(a * scale for a in v)


class Matrix:
    """Dense matrix over Q.  Treated as immutable after construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [[rat(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(row) != self.cols for row in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Q(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[Q(0)] * c for _ in range(r)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = [rat(x) for x in entries]
        n = len(entries)
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = entries[i]
        return m

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        columns = [vec(c) for c in columns]
        rows = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return tuple(self.data[i])

    def column(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        out = [[Q(0)] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(row):
                if a == 0:
                    continue
                brow = odata[k]
                for j, b in enumerate(brow):
                    if b != 0:
                        orow[j] += a * b
        return Matrix(out)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if self.cols != len(v):
            raise ValueError("dimension mismatch in apply")
        out = []
        for row in self.data:
            s = Q(0)
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Rational:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Q(0))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.data for a in row)

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def _echelon(rows):
    """In-place row echelon form; returns list of pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_linear(a: Matrix, b) -> Vector | None:
    """Solve A x = b exactly.

    Returns None when the system is inconsistent.  Underdetermined systems get
    the particular solution with all free variables set to zero, so results
    are deterministic.
    """
    b = vec(b)
    if a.rows != len(b):
        raise ValueError("dimension mismatch: rows(A) != len(b)")
    aug = [list(a.data[i]) + [b[i]] for i in range(a.rows)]
    pivots = _echelon(aug)
    if a.cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Q(0)] * a.cols
    for r, c in enumerate(pivots):
        x[c] = aug[r][-1]
    return tuple(x)


def nullspace(a: Matrix) -> list[Vector]:
    """Exact basis of ker(A); empty list for a trivial kernel."""
    rows = [list(r) for r in a.data]
    pivots = _echelon(rows)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * a.cols
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def invert(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ValueError("inverse of non-square matrix")
    n = a.rows
    aug = [list(a.data[i]) + [Q(i == j) for j in range(n)] for i in range(n)]
    pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in aug])


def ldlt_pivots(g: Matrix) -> list[Rational] | None:
    """Pivot sequence of the LDL^T decomposition without row exchanges.

    For a symmetric matrix the pivots are all positive exactly when the matrix
    is positive definite (they are ratios of consecutive leading principal
    minors).  Returns None when a zero pivot blocks the factorization.
    """
    n = g.rows
    a = [list(row) for row in g.data]
    pivots = []
    for k in range(n):
        p = a[k][k]
        if p == 0:
            return None
        pivots.append(p)
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f == 0:
                continue
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return pivots


def is_positive_definite(g: Matrix) -> bool:
    if not g.is_symmetric():
        return False
    pivots = ldlt_pivots(g)
    return pivots is not None and all(p > 0 for p in pivots)


def common_ratio(pairs) -> Rational | None:
    """Single scalar r with u = r*v across all pairs (u, v).

    Pairs with u = v = 0 are skipped; a pair with v = 0 but u != 0 admits no
    ratio at all.  If every pair is (0, 0) the conventional answer is 0.
    """
    ratio = None
    for u, v in pairs:
        if len(u) != len(v):
            raise ValueError("pair length mismatch")
        if is_zero_vec(v):
            if not is_zero_vec(u):
                return None
            continue
        k = next(i for i, x in enumerate(v) if x != 0)
        r = u[k] / v[k]
        if any(a != r * b for a, b in zip(u, v)):
            return None
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ratio if ratio is not None else Q(0)


def stereographic_point(ts) -> Vector:
    """Rational point on the unit sphere from parameters in Q^(d-1).

    t maps to (2t, 1 - |t|^2) / (1 + |t|^2), so the output has exact unit norm.
    """
    ts = vec(ts)
    s = vec_dot(ts, ts)
    d = 1 + s
    return tuple(2 * t / d for t in ts) + ((1 - s) / d,)


def unit_sphere_rational_sample(dim: int, seed: int) -> Vector:
    """Deterministic rational unit vector via stereographic projection."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = random.Random(seed)
    if dim == 1:
        return (Q(1 if rng.randrange(2) == 0 else -1),)
    ts = [Q(rng.randint(-12, 12), rng.randint(1, 12)) for _ in range(dim - 1)]
    return stereographic_point(ts)


def gram_dot(g: Matrix, u: Vector, v: Vector) -> Rational:
    return vec_dot(u, g.apply(v))


def gram_orthogonalize(vectors, g: Matrix) -> list[Vector]:
    """Gram-Schmidt without normalization, primitive-integer scaled.

    Dependent inputs are dropped.  Output vectors are pairwise g-orthogonal
    with coprime integer entries, giving a diagonal induced Gram matrix.
    """
    out = []
    norms = []
    for v in vectors:
        w = vec(v)
        for u, q in zip(out, norms):
            c = gram_dot(g, w, u)
            if c != 0:
                w = vec_sub(w, vec_scale(c / q, u))
        if is_zero_vec(w):
            continue
        w = primitive(w)
        out.append(w)
        norms.append(gram_dot(g, w, w))
    return out


def _rational_sqrt(q: Rational) -> Rational | None:
    if q < 0:
        return None
    pn = isqrt(q.numerator)
    pd = isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Q(pn, pd)
    return None


def quadric_reflect(g: Matrix, p: Vector, d: Vector) -> Vector:
    """Reflect p across the g-orthogonal hyperplane of d; preserves g-norm."""
    dd = gram_dot(g, d, d)
    if dd == 0:
        return p
    return vec_sub(p, vec_scale(2 * gram_dot(g, p, d) / dd, d))


def unit_vector_in_span(g: Matrix, basis, seed: int = 0, reflections: int = 4) -> Vector:
    """Rational vector of exact g-norm 1 inside span(basis).

    Strategy: orthogonalize the basis, search small integer combinations with
    a perfect-square norm to get one rational point, then apply seeded
    g-reflections (which keep the norm) for variety.
    """
    basis = gram_orthogonalize([vec(b) for b in basis], g)
    if not basis:
        raise ValueError("empty span")
    norms = [gram_dot(g, b, b) for b in basis]
    point = None
    for count in (1, 2, 3, 4):
        if count > len(basis) or point is not None:
            break
        for idxs in itertools.combinations(range(len(basis)), count):
            for coeffs in itertools.product((1, 2, 3), repeat=count):
                q = sum((norms[i] * c * c for i, c in zip(idxs, coeffs)), Q(0))
                root = _rational_sqrt(q)
                if root is None:
                    continue
                w = vec_zero(len(basis[0]))
                for i, c in zip(idxs, coeffs):
                    w = vec_add(w, vec_scale(c, basis[i]))
                point = vec_scale(1 / root, w)
                break
            if point is not None:
                break
    if point is None:
        raise ValueError("no rational unit vector found in span")
    rng = random.Random(seed)
    for _ in range(reflections):
        coeffs = [Q(rng.randint(-5, 5)) for _ in basis]
        d = vec_zero(len(basis[0]))
        for c, b in zip(coeffs, basis):
            d = vec_add(d, vec_scale(c, b))
        if not is_zero_vec(d):
            point = quadric_reflect(g, point, d)
    return point
