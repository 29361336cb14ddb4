"""Clifford modules with negative definite form, as explicit integer matrices.

A module over Cl(m) here is a tuple of m anticommuting orthogonal complex
structures J_1..J_m on R^n (J_i^2 = -I, J_i J_j = -J_j J_i), so that
J_Z = sum z_i J_i satisfies J_Z^2 = -|Z|^2 I for every Z.  All generators are
signed permutation matrices, which keeps every downstream structure constant
an integer.

Construction ladder (deterministic):
  m = 1        rotation by pi/2 on R^2
  m = 2, 3     quaternion left multiplications on R^4
  m = 4..7     octonion left multiplications on R^8
  m = 8, 9     doubling [[0, A], [A, 0]] plus [[0, -I], [I, 0]]
  m > 9        tensor extension by the m = 8 module (mod-8 periodicity)

For m = 3 mod 4 there are two irreducible classes told apart by the volume
element omega = J_1 ... J_m = +I or -I; the builder normalizes signs so the
returned module is the omega = +I class, and the other class is obtained by
negating the last generator.  For m = 0 mod 4, omega squares to +I without
being central, and its (+1)/(-1) eigenspaces are the two half-spin
submodules, swapped by every J_Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import Q

from .linalg import Matrix, nullspace, vec


def _cayley_dickson_table(dim: int) -> list[list[tuple[int, int]]]:
    """Multiplication table of the dim-dimensional Cayley-Dickson algebra.

    table[i][j] = (sign, k) meaning e_i * e_j = sign * e_k.  dim must be a
    power of two (1: reals, 2: complexes, 4: quaternions, 8: octonions).
    """
    if dim == 1:
        return [[(1, 0)]]
    half = dim // 2
    low = _cayley_dickson_table(half)
    table = []
    for i in range(dim):
        row = []
        a, a_hi = i % half, i >= half
        for j in range(dim):
            c, c_hi = j % half, j >= half
            # (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
            # and conj(e_c) = sc * e_c with sc = +1 iff c == 0.
            sc = 1 if c == 0 else -1
            if not a_hi and not c_hi:
                s, k = low[a][c]
                row.append((s, k))
            elif not a_hi and c_hi:
                s, k = low[c][a]  # d a
                row.append((s, k + half))
            elif a_hi and not c_hi:
                s, k = low[a][c]  # b conj(c)
                row.append((sc * s, k + half))
            else:
                s, k = low[c][a]  # -conj(d) b
                row.append((-sc * s, k))
        table.append(row)
    return table


def _left_mult_matrix(table, a: int) -> Matrix:
    dim = len(table)
    m = [[0] * dim for _ in range(dim)]
    for j in range(dim):
        s, k = table[a][j]
        m[k][j] = s
    return Matrix(m)


def _check_generators(gens: list[Matrix]):
    n = gens[0].rows
    eye = Matrix.identity(n)
    for i, a in enumerate(gens):
        if a.transpose() @ a != eye:
            raise AssertionError(f"generator {i} is not orthogonal")
        if a @ a != eye.scale(-1):
            raise AssertionError(f"generator {i} does not square to -I")
        for j in range(i + 1, len(gens)):
            b = gens[j]
            if not (a @ b + b @ a).is_zero():
                raise AssertionError(f"generators {i},{j} do not anticommute")


def volume_element(gens: list[Matrix]) -> Matrix:
    omega = Matrix.identity(gens[0].rows)
    for g in gens:
        omega = omega @ g
    return omega


_IRREDUCIBLE_DIM = {1: 2, 2: 4, 3: 4, 4: 8, 5: 8, 6: 8, 7: 8, 8: 16}


def irreducible_dim(m: int) -> int:
    """Real dimension of an irreducible Cl(m)-module, mod-8 periodic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m <= 8:
        return _IRREDUCIBLE_DIM[m]
    return 16 * irreducible_dim(m - 8)


def _double(gens: list[Matrix]) -> list[Matrix]:
    """m generators on R^d -> m+1 generators on R^2d."""
    d = gens[0].rows
    out = []
    for a in gens:
        rows = []
        for i in range(d):
            rows.append([0] * d + list(a.data[i]))
        for i in range(d):
            rows.append(list(a.data[i]) + [0] * d)
        out.append(Matrix(rows))
    last = [[0] * d + [-(i == j) for j in range(d)] for i in range(d)]
    last += [[(i == j) for j in range(d)] + [0] * d for i in range(d)]
    out.append(Matrix(last))
    return out


def _kron(a: Matrix, b: Matrix) -> Matrix:
    out = [
        [
            a.data[i][j] * b.data[k][l]
            for j in range(a.cols)
            for l in range(b.cols)
        ]
        for i in range(a.rows)
        for k in range(b.rows)
    ]
    return Matrix(out)


def build_generators(m: int) -> list[Matrix]:
    """Generators of one irreducible Cl(m)-module (+I volume class for m = 3 mod 4)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        gens = [Matrix([[0, -1], [1, 0]])]
    elif m in (2, 3):
        quat = _cayley_dickson_table(4)
        gens = [_left_mult_matrix(quat, a) for a in range(1, m + 1)]
    elif m <= 7:
        octo = _cayley_dickson_table(8)
        gens = [_left_mult_matrix(octo, a) for a in range(1, m + 1)]
    elif m == 8:
        gens = _double(build_generators(7))
    elif m == 9:
        gens = _double(build_generators(8))
    else:
        base = build_generators(m - 8)
        eight = build_generators(8)
        omega8 = volume_element(eight)
        eye = Matrix.identity(base[0].rows)
        gens = [_kron(a, omega8) for a in base] + [_kron(eye, b) for b in eight]
    if m % 4 == 3:
        omega = volume_element(gens)
        if omega == Matrix.identity(gens[0].rows).scale(-1):
            gens[-1] = gens[-1].scale(-1)
        elif omega != Matrix.identity(gens[0].rows):
            raise AssertionError("volume element is not +-I for m = 3 mod 4")
    _check_generators(gens)
    if gens[0].rows != irreducible_dim(m):
        raise AssertionError("irreducible module dimension disagrees with the table")
    return gens


@dataclass(frozen=True)
class CliffordModule:
    """m anticommuting orthogonal complex structures on R^n."""

    m: int
    n: int
    generators: tuple
    multiplicity: object  # int k, or (k_plus, k_minus) when m = 3 mod 4

    @property
    def k(self) -> int:
        if isinstance(self.multiplicity, tuple):
            return sum(self.multiplicity)
        return self.multiplicity

    def j_of(self, z) -> Matrix:
        """J_Z for a coefficient vector z in R^m."""
        z = vec(z)
        if len(z) != self.m:
            raise ValueError("z must have length m")
        out = Matrix.zeros(self.n, self.n)
        for c, g in zip(z, self.generators):
            if c != 0:
                out = out + g.scale(c)
        return out

    def to_json_dict(self) -> dict:
        return {
            "schema": "cliff-v1",
            "m": self.m,
            "n": self.n,
            "k": list(self.multiplicity) if isinstance(self.multiplicity, tuple) else self.multiplicity,
            "generators": [[[int(x) for x in row] for row in g.data] for g in self.generators],
        }


def _block_diag(blocks: list[Matrix]) -> Matrix:
    total = sum(b.rows for b in blocks)
    out = [[Q(0)] * total for _ in range(total)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            row = out[off + i]
            for j in range(b.cols):
                row[off + j] = b.data[i][j]
        off += b.rows
    return Matrix(out)


def assemble(m: int, multiplicity) -> CliffordModule:
    """Direct sum of irreducible modules as block-diagonal generators.

    multiplicity is a plain count k unless m = 3 mod 4, where the two
    irreducible classes require the pair (k_plus, k_minus).
    """
    pair_case = m % 4 == 3
    if pair_case:
        if not (isinstance(multiplicity, tuple) and len(multiplicity) == 2):
            raise ValueError(f"m = {m} needs multiplicities (k_plus, k_minus)")
        kp, km = multiplicity
        if kp < 0 or km < 0 or kp + km < 1:
            raise ValueError("k_plus + k_minus must be >= 1")
    else:
        if isinstance(multiplicity, tuple):
            raise ValueError(f"m = {m} takes a single multiplicity k")
        if multiplicity < 1:
            raise ValueError("k must be >= 1")
    plus = build_generators(m)
    if pair_case:
        minus = list(plus)
        minus[-1] = minus[-1].scale(-1)
        copies = [plus] * kp + [minus] * km
    else:
        copies = [plus] * multiplicity
    gens = tuple(
        _block_diag([copy[i] for copy in copies]) for i in range(m)
    )
    n = gens[0].rows
    if n != irreducible_dim(m) * (kp + km if pair_case else multiplicity):
        raise AssertionError("assembled dimension disagrees with the table")
    return CliffordModule(m=m, n=n, generators=gens, multiplicity=multiplicity)


@dataclass(frozen=True)
class HalfSpinSplit:
    """(+1)/(-1) eigenspace decomposition of the volume element."""

    omega: Matrix
    delta_plus: tuple
    delta_minus: tuple


def half_spin_split(module: CliffordModule) -> HalfSpinSplit:
    """Half-spin decomposition for m = 0 mod 4.

    The volume element omega = J_1 ... J_m satisfies omega^2 = I and
    anticommutes with every generator, so each J_Z swaps the two eigenspaces;
    both facts are re-verified exactly here.
    """
    if module.m % 4 != 0:
        raise ValueError("half-spin split needs m = 0 mod 4")
    omega = volume_element(list(module.generators))
    eye = Matrix.identity(module.n)
    if omega @ omega != eye:
        raise ValueError("volume element does not square to the identity")
    plus = nullspace(omega - eye)
    minus = nullspace(omega + eye)
    if len(plus) + len(minus) != module.n:
        raise AssertionError("eigenspaces do not fill the module")
    for g in module.generators:
        for v in plus:
            w = g.apply(v)
            if vec(omega.apply(w)) != tuple(-x for x in w):
                raise AssertionError("a generator fails to swap the half-spin pieces")
        for v in minus:
            w = g.apply(v)
            if vec(omega.apply(w)) != tuple(w):
                raise AssertionError("a generator fails to swap the half-spin pieces")
    return HalfSpinSplit(omega=omega, delta_plus=tuple(plus), delta_minus=tuple(minus))
