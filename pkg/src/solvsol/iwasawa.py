"""Solvable Iwasawa algebra of the split symmetric space SL(n,R)/SO(n).

Ambient data: g = sl(n,R) with Cartan involution theta(X) = -X^T, the
invariant trace form  B(X,Y) = kappa tr(XY)  and the positive definite pairing
<X,Y>_Btheta = -B(theta X, Y) = kappa tr(X^T Y).  The solvable part is
a + n, with a = traceless diagonals and n = strictly upper triangular
matrices (root spaces R E_ij, i < j, for the roots L_i - L_j).  The metric
carried over from the symmetric space is

    <X, Y> = <X_a, Y_a>_Btheta + (1/2) <X_n, Y_n>_Btheta ,

which is Einstein.  The trace-form scale is a homothety degree of freedom;
kappa = 2 makes every root vector E_ij and every root element
H_lam = (E_ii - E_jj)/2 a unit vector with |lam|^2 = 1, so unit normals
a H_alpha + b X_alpha live on the rational circle a^2 + b^2 = 1 and all
closed-form coefficients stay in Q.  (Cartan integers do not depend on
kappa.)

The connection in this picture has a Cartan-involution form,

    <nabla_X Y, Z> = (1/4) <[X,Y] + [theta X, Y] - [X, theta Y], Z>_Btheta ,

evaluated here at the matrix level; it is an independent route to be checked
against the structure-constant Koszul machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lie import MetricLieAlgebra
from .linalg import (
    Matrix,
    Q,
    Vector,
    gram_orthogonalize,
    is_zero_vec,
    unit_vector_in_span,
    vec,
    vec_zero,
)

KILLING_SCALE = 2  # kappa in B(X,Y) = kappa tr(XY); a homothety choice

Root = tuple  # (i, j) with i < j encodes the functional L_i - L_j


def root_add(lam: Root, mu: Root) -> Root | None:
    """lam + mu when it is again a root of A_{n-1}, else None."""
    (a, b), (c, d) = lam, mu
    if b == c and a != d:
        return (a, d)
    if d == a and c != b:
        return (c, b)
    return None


def root_sub_is_root(lam: Root, mu: Root) -> bool:
    """Whether lam - mu is a (positive or negative) root."""
    (a, b), (c, d) = lam, mu
    if lam == mu:
        return False
    # lam - mu = L_a - L_b - L_c + L_d
    if a == c:
        return True  # +-(L_d - L_b)
    if b == d:
        return True  # +-(L_a - L_c)
    return False


@dataclass
class RootDatum:
    rank: int
    positive_roots: list
    simple_roots: list
    root_space_index: dict  # root -> basis index of its line
    h_coords: dict  # root -> coordinates of H_lam in the algebra basis
    h_mats: dict  # root -> H_lam as a matrix

    def cartan_integer(self, alpha: Root, lam: Root) -> int:
        (a, b), (c, d) = alpha, lam
        return (
            (1 if a == c else 0)
            - (1 if a == d else 0)
            - (1 if b == c else 0)
            + (1 if b == d else 0)
        )


@dataclass
class IwasawaAlgebra:
    n: int
    base: MetricLieAlgebra
    datum: RootDatum
    basis_mats: list  # matrix realization of each basis vector
    killing_scale: int

    @property
    def a_dim(self) -> int:
        return self.n - 1

    def name(self) -> str:
        return f"SL({self.n})"

    # -- matrix <-> coordinate plumbing ------------------------------------

    def mat_of(self, coords) -> Matrix:
        coords = vec(coords)
        out = [[Q(0)] * self.n for _ in range(self.n)]
        for c, mat in zip(coords, self.basis_mats):
            if c != 0:
                for i in range(self.n):
                    row = mat.data[i]
                    for j in range(self.n):
                        if row[j] != 0:
                            out[i][j] += c * row[j]
        return Matrix(out)

    def coords_of(self, mat: Matrix) -> Vector:
        for i in range(self.n):
            for j in range(i):
                if mat.data[i][j] != 0:
                    raise ValueError("matrix is not in a + n")
        if sum((mat.data[i][i] for i in range(self.n)), Q(0)) != 0:
            raise ValueError("diagonal part is not traceless")
        diag = [mat.data[i][i] for i in range(self.n)]
        coords = []
        for k in range(self.a_dim):
            bd = [self.basis_mats[k].data[i][i] for i in range(self.n)]
            num = sum((x * y for x, y in zip(diag, bd)), Q(0))
            den = sum((y * y for y in bd), Q(0))
            coords.append(num / den)
            diag = [x - coords[-1] * y for x, y in zip(diag, bd)]
        if any(x != 0 for x in diag):
            raise ValueError("diagonal part outside the Cartan subspace")
        for lam in self.datum.positive_roots:
            i, j = lam
            coords.append(mat.data[i][j])
        return tuple(coords)

    # -- ambient bilinear data ----------------------------------------------

    def theta(self, mat: Matrix) -> Matrix:
        return Matrix([[-mat.data[j][i] for j in range(self.n)] for i in range(self.n)])

    def bform(self, x: Matrix, y: Matrix) -> object:
        """B(X,Y) = kappa tr(XY)."""
        acc = Q(0)
        for i in range(self.n):
            xrow = x.data[i]
            for k in range(self.n):
                if xrow[k] != 0 and y.data[k][i] != 0:
                    acc += xrow[k] * y.data[k][i]
        return self.killing_scale * acc

    def btheta(self, x: Matrix, y: Matrix) -> object:
        """<X,Y>_Btheta = kappa tr(X^T Y)."""
        acc = Q(0)
        for i in range(self.n):
            for j in range(self.n):
                if x.data[i][j] != 0 and y.data[i][j] != 0:
                    acc += x.data[i][j] * y.data[i][j]
        return self.killing_scale * acc

    def x_alpha(self, alpha: Root) -> Vector:
        """The unit root vector of g_alpha as algebra coordinates."""
        return self.base.basis_vector(self.datum.root_space_index[alpha])

    def h_alpha(self, alpha: Root) -> Vector:
        return self.datum.h_coords[alpha]

    def xi_line(self, alpha: Root, a, b) -> Vector:
        """xi = a H_alpha + b X_alpha as coordinates (unit iff a^2 + b^2 = 1)."""
        a, b = Q(a), Q(b)
        h = self.h_alpha(alpha)
        x = self.x_alpha(alpha)
        return tuple(a * p + b * q for p, q in zip(h, x))


def _commutator(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


def build_sl(n: int) -> IwasawaAlgebra:
    """a + n of sl(n,R) on an exact rational basis.

    Basis: Gram-orthogonalized simple-root elements H_{alpha_i} spanning a,
    then the root vectors E_ij ordered lexicographically.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    kappa = KILLING_SCALE
    half = Q(1, 2)
    # a: orthogonalize the simple-root diagonals under kappa * sum d_i d'_i
    simple_diags = []
    for i in range(n - 1):
        d = [Q(0)] * n
        d[i], d[i + 1] = half, -half
        simple_diags.append(tuple(d))
    ortho = gram_orthogonalize(simple_diags, Matrix.identity(n).scale(kappa))
    a_mats = [Matrix.diagonal(d) for d in ortho]
    positive_roots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    positive_roots.sort()
    simple_roots = [(i, i + 1) for i in range(n - 1)]
    n_mats = []
    for i, j in positive_roots:
        e = [[Q(0)] * n for _ in range(n)]
        e[i][j] = Q(1)
        n_mats.append(Matrix(e))
    basis_mats = a_mats + n_mats
    gram_diag = [
        kappa * sum((x * x for x in d), Q(0)) for d in ortho
    ] + [Q(1)] * len(positive_roots)

    dim = len(basis_mats)
    # structure constants from matrix commutators
    proto = IwasawaAlgebra(
        n=n,
        base=None,  # placeholder until the coordinate algebra exists
        datum=RootDatum(
            rank=n - 1,
            positive_roots=positive_roots,
            simple_roots=simple_roots,
            root_space_index={lam: n - 1 + k for k, lam in enumerate(positive_roots)},
            h_coords={},
            h_mats={},
        ),
        basis_mats=basis_mats,
        killing_scale=kappa,
    )
    triples = []
    for p in range(dim):
        for q in range(p + 1, dim):
            w = proto.coords_of(_commutator(basis_mats[p], basis_mats[q]))
            for k, v in enumerate(w):
                if v != 0:
                    triples.append((p, q, k, v))
    labels = [f"a{i}" for i in range(n - 1)] + [f"x{i}{j}" for i, j in positive_roots]
    base = MetricLieAlgebra(dim, triples, Matrix.diagonal(gram_diag), labels=labels)
    proto.base = base
    # H_lam via B(H_lam, H) = lam(H): explicitly (E_ii - E_jj)/kappa
    for lam in positive_roots:
        i, j = lam
        d = [Q(0)] * n
        d[i], d[j] = Q(1, kappa), Q(-1, kappa)
        h_mat = Matrix.diagonal(d)
        proto.datum.h_mats[lam] = h_mat
        proto.datum.h_coords[lam] = proto.coords_of(h_mat)
        # defining property of H_lam, exact, against every a-basis vector
        for amat in a_mats:
            if proto.bform(h_mat, amat) != amat.data[i][i] - amat.data[j][j]:
                raise AssertionError("H_lam fails its defining trace identity")
    # root space bracket relations [g_lam, g_mu] in g_{lam+mu}
    for lam in positive_roots:
        for mu in positive_roots:
            c = _commutator(
                basis_mats[proto.datum.root_space_index[lam]],
                basis_mats[proto.datum.root_space_index[mu]],
            )
            s = root_add(lam, mu)
            if s is None:
                if not c.is_zero():
                    raise AssertionError("bracket escapes the root grading")
            else:
                for i in range(n):
                    for j in range(n):
                        if c.data[i][j] != 0 and (i, j) != s:
                            raise AssertionError("bracket escapes the root grading")
    return proto


_CACHE: dict = {}


def build_named(n: int) -> IwasawaAlgebra:
    if n not in _CACHE:
        _CACHE[n] = build_sl(n)
    return _CACHE[n]


# -- metric relation and the Cartan-involution connection -----------------------


def metric_relation_holds(space: IwasawaAlgebra) -> bool:
    """<X,Y> == <X_a,Y_a>_Btheta + (1/2) <X_n,Y_n>_Btheta on all basis pairs."""
    dim = space.base.dim
    for p in range(dim):
        for q in range(dim):
            xp, xq = space.basis_mats[p], space.basis_mats[q]
            a_part = space.btheta(_diag_part(xp), _diag_part(xq))
            n_part = space.btheta(_upper_part(xp), _upper_part(xq))
            if space.base.gram.data[p][q] != a_part + Q(1, 2) * n_part:
                return False
    return True


def _diag_part(mat: Matrix) -> Matrix:
    n = mat.rows
    return Matrix.diagonal([mat.data[i][i] for i in range(n)])


def _upper_part(mat: Matrix) -> Matrix:
    n = mat.rows
    return Matrix(
        [[mat.data[i][j] if i < j else Q(0) for j in range(n)] for i in range(n)]
    )


def koszul_via_bt(space: IwasawaAlgebra, x, y) -> Vector:
    """nabla_x y from the Cartan-involution formula, as coordinates."""
    xm, ym = space.mat_of(x), space.mat_of(y)
    c = (
        _commutator(xm, ym)
        + _commutator(space.theta(xm), ym)
        - _commutator(xm, space.theta(ym))
    )
    coords = []
    for k, bmat in enumerate(space.basis_mats):
        w = Q(1, 4) * space.btheta(c, bmat)
        coords.append(w / space.base.gram.data[k][k])
    return tuple(coords)


# -- normals of the form a H_alpha + b X_alpha ----------------------------------


def pythagorean_pair(t) -> tuple:
    """Rational point (a, b) on a^2 + b^2 = 1 through the parameter of (0, 1)."""
    t = Q(t)
    d = 1 + t * t
    return (2 * t / d, (1 - t * t) / d)


def subalgebra_normal_check(space: IwasawaAlgebra, xi) -> bool:
    """Whether the orthocomplement of xi closes under the bracket."""
    return space.base.orthogonal_complement_subalgebra(xi) is not None


def normal_characterization(space: IwasawaAlgebra, xi) -> bool:
    """xi in a, or xi in R H_alpha + g_alpha for a simple alpha.

    This is the classification of admissible unit normals that the closure
    check must reproduce exactly.
    """
    xi = vec(xi)
    if is_zero_vec(xi):
        raise ValueError("xi must be nonzero")
    a_dim = space.a_dim
    support = [
        lam
        for lam in space.datum.positive_roots
        if xi[space.datum.root_space_index[lam]] != 0
    ]
    if not support:
        return True
    if len(support) > 1:
        return False
    lam = support[0]
    if lam not in space.datum.simple_roots:
        return False
    h = space.datum.h_coords[lam]
    # a-part of xi must be proportional to H_lam
    for p in range(a_dim):
        for q in range(a_dim):
            if xi[p] * h[q] != xi[q] * h[p]:
                return False
    return True


def unit_in_a(space: IwasawaAlgebra, seed: int) -> Vector:
    basis = [space.base.basis_vector(i) for i in range(space.a_dim)]
    return unit_vector_in_span(space.base.gram, basis, seed=seed)


# -- closed-form extrinsic geometry along xi = a H_alpha + b X_alpha ------------


def closed_form_shape(space: IwasawaAlgebra, alpha: Root, a, b, lam: Root, y) -> Vector:
    """Shape operator image of Y in g_lam (lam != alpha), closed form.

    S_xi Y = (a/2)|alpha|^2 A_{alpha,lam} Y - (b/2)[Y, X_alpha]
             + (b/2)[Y, theta X_alpha],  with |alpha|^2 = 1 here.
    """
    if lam == alpha:
        raise ValueError("the formula needs lam != alpha")
    a, b = Q(a), Q(b)
    if a * a + b * b != 1:
        raise ValueError("normal must satisfy a^2 + b^2 = 1 exactly")
    ym = space.mat_of(vec(y))
    xa = space.basis_mats[space.datum.root_space_index[alpha]]
    acoef = Q(space.datum.cartan_integer(alpha, lam)) * a / 2
    out = ym.scale(acoef)
    out = out - _commutator(ym, xa).scale(b / 2)
    out = out + _commutator(ym, space.theta(xa)).scale(b / 2)
    return space.coords_of(out)


def raising_partner(space: IwasawaAlgebra, lam: Root, alpha: Root, y) -> Vector:
    """Unit vector Y_{lam+alpha} = [Y_lam, X_alpha] / (|alpha| sqrt(-A_{alpha,lam})).

    Requires lam + alpha to be a root while lam - alpha is not; on A_{n-1}
    the Cartan integer is then -1, so the normalizer is 1 and the result is
    rational.
    """
    if root_add(lam, alpha) is None or root_sub_is_root(lam, alpha):
        raise ValueError("need lam + alpha a root and lam - alpha not a root")
    if space.datum.cartan_integer(alpha, lam) != -1:
        raise AssertionError("unexpected Cartan integer on a simply-laced system")
    ym = space.mat_of(vec(y))
    xa = space.basis_mats[space.datum.root_space_index[alpha]]
    return space.coords_of(_commutator(ym, xa))


def closed_form_trace(space: IwasawaAlgebra, alpha: Root, a) -> object:
    """tr S_xi: (a/2)|alpha|^2 sum_{lam != alpha} A_{alpha,lam} + a|alpha|^2."""
    a = Q(a)
    total = sum(
        space.datum.cartan_integer(alpha, lam)
        for lam in space.datum.positive_roots
        if lam != alpha
    )
    return a / 2 * total + a


def closed_form_d_blocks(space: IwasawaAlgebra, alpha: Root, a, b, c):
    """Predicted action of D = tr(S)S - (R_xi + S^2) + c id on three blocks.

    Returns {"a_perp": [...], "root_pair": [...], "u_line": [...]} of
    (vector, image) pairs in ambient coordinates: DH = cH on a - R H_alpha,
    the two-step ladder on g_beta + g_{beta+alpha} for an adjacent simple
    root beta, and DU = (tr(S) a |alpha|^2 + b^2 |alpha|^2 + c) U on the
    in-line complement U = b H_alpha - a X_alpha.
    """
    a, b, c = Q(a), Q(b), Q(c)
    if a * a + b * b != 1:
        raise ValueError("normal must satisfy a^2 + b^2 = 1 exactly")
    if space.a_dim < 2:
        raise ValueError("blocks need rank >= 2")
    tr_s = closed_form_trace(space, alpha, a)
    out = {"a_perp": [], "root_pair": [], "u_line": []}
    # a - R H_alpha: orthocomplement of H_alpha inside a
    h = space.datum.h_coords[alpha]
    a_basis = []
    for i in range(space.a_dim):
        e = space.base.basis_vector(i)
        coef = space.base.gram_ip(e, h)
        norm = space.base.gram_ip(h, h)
        cand = tuple(x - coef / norm * y for x, y in zip(e, h))
        if not is_zero_vec(cand):
            a_basis.append(cand)
    for v in gram_orthogonalize(a_basis, space.base.gram):
        out["a_perp"].append((v, tuple(c * x for x in v)))
    # adjacent simple root beta: beta + alpha a root, beta - alpha not
    beta = next(
        m
        for m in space.datum.simple_roots
        if m != alpha and root_add(m, alpha) is not None
    )
    y_b = space.x_alpha(beta)
    y_ba = raising_partner(space, beta, alpha, y_b)
    a_bb = Q(space.datum.cartan_integer(alpha, beta))
    a_ba = Q(space.datum.cartan_integer(alpha, root_add(beta, alpha)))
    img_b = tuple(
        tr_s * (a / 2 * a_bb * p - b / 2 * q) + c * p for p, q in zip(y_b, y_ba)
    )
    y_b2a_mat = _commutator(
        space.mat_of(y_ba), space.basis_mats[space.datum.root_space_index[alpha]]
    ).scale(-b / 2)
    y_b2a = space.coords_of(y_b2a_mat)
    img_ba = tuple(
        tr_s * (a / 2 * a_ba * p + r - b / 2 * q) + c * p
        for p, q, r in zip(y_ba, y_b, y_b2a)
    )
    out["root_pair"] = [(y_b, img_b), (y_ba, img_ba)]
    # U = b H_alpha - a X_alpha (unit, orthogonal to xi)
    u = tuple(
        b * p - a * q for p, q in zip(space.h_alpha(alpha), space.x_alpha(alpha))
    )
    factor = tr_s * a + b * b + c
    out["u_line"] = [(u, tuple(factor * x for x in u))]
    return out
