"""Exact decision of the algebraic Ricci soliton condition Ric = c id + D.

If D = Ric - c id is to be a derivation, linearity of the Leibniz defect
F(D)(x, y) = D[x, y] - [Dx, y] - [x, Dy] together with F(id)(x, y) = -[x, y]
pins the whole question to a single scalar: the condition is exactly

    F(Ric)(e_i, e_j) = -c [e_i, e_j]   for all basis pairs i < j.

So the decision is one common-ratio computation over basis pairs.  Positive
verdicts carry the certificate (c, D), re-verified from scratch; negative
verdicts carry a witness: either one pair with a zero bracket but a nonzero
defect, a pair whose defect is not parallel to its bracket, or two pairs
with conflicting ratios.

The geometric equivalence between algebraic Ricci solitons and Ricci
solitons needs complete solvability of the group; the verdict records that
hypothesis alongside the algebraic answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import Q

from .lie import MetricLieAlgebra, rational_eigen_summary
from .linalg import Matrix, Rational, Vector, is_zero_vec, rat_str

EQUIVALENCE_ASSUMPTION = (
    "algebraic Ricci soliton <=> Ricci soliton assumes a completely solvable group"
)


@dataclass
class SolitonVerdict:
    is_soliton: bool
    c: Rational | None
    derivation: Matrix | None
    einstein: bool
    eigenvalue_summary: list[tuple[Rational, int]] | None
    witness: list[tuple[tuple[int, int], Vector]] | None
    completely_solvable: bool

    def to_json_dict(self) -> dict:
        eig = None
        if self.eigenvalue_summary is not None:
            eig = [[rat_str(v), mult] for v, mult in self.eigenvalue_summary]
        return {
            "is_soliton": self.is_soliton,
            "c": rat_str(self.c) if self.c is not None else None,
            "einstein": self.einstein,
            "D_eigenvalues": eig,
            "witness": list(self.witness[0][0]) if self.witness else None,
            "completely_solvable": self.completely_solvable,
            "assumption": EQUIVALENCE_ASSUMPTION,
        }


def _witness_pairs(algebra, defects):
    """Pairs certifying that no c makes Ric - c id a derivation."""
    ratios = []
    for (i, j), defect in defects:
        bracket = algebra.bracket_basis(i, j)
        neg_bracket = [Q(0)] * algebra.dim
        for k, v in bracket.items():
            neg_bracket[k] = -v
        if is_zero_vec(neg_bracket):
            if not is_zero_vec(defect):
                return [((i, j), defect)]
            continue
        k = next(idx for idx, x in enumerate(neg_bracket) if x != 0)
        r = defect[k] / neg_bracket[k]
        if any(a != r * b for a, b in zip(defect, neg_bracket)):
            return [((i, j), defect)]
        ratios.append((r, (i, j), defect))
    for r0, pair0, d0 in ratios:
        for r1, pair1, d1 in ratios:
            if r0 != r1:
                return [(pair0, d0), (pair1, d1)]
    raise AssertionError("witness requested for a consistent system")


def decide(algebra: MetricLieAlgebra) -> SolitonVerdict:
    """Exact algebraic Ricci soliton verdict with certificate or witness."""
    ric = algebra.ricci()
    defects = algebra.leibniz_defect(ric)
    pairs = []
    for (i, j), defect in defects:
        neg_bracket = [Q(0)] * algebra.dim
        for k, v in algebra.bracket_basis(i, j).items():
            neg_bracket[k] = -v
        pairs.append((defect, tuple(neg_bracket)))
    from .linalg import common_ratio

    c = common_ratio(pairs)
    completely_solvable = algebra.is_completely_solvable()
    if c is None:
        return SolitonVerdict(
            is_soliton=False,
            c=None,
            derivation=None,
            einstein=False,
            eigenvalue_summary=None,
            witness=_witness_pairs(algebra, defects),
            completely_solvable=completely_solvable,
        )
    derivation = ric - Matrix.identity(algebra.dim).scale(c)
    if not algebra.is_derivation(derivation):
        raise AssertionError("certificate failed re-verification")
    return SolitonVerdict(
        is_soliton=True,
        c=c,
        derivation=derivation,
        einstein=derivation.is_zero(),
        eigenvalue_summary=rational_eigen_summary(derivation),
        witness=None,
        completely_solvable=completely_solvable,
    )


def decide_einstein(algebra: MetricLieAlgebra) -> Rational | None:
    """The constant k when Ric = k id exactly, else None."""
    ric = algebra.ricci()
    k = ric.data[0][0]
    if ric == Matrix.identity(algebra.dim).scale(k):
        return k
    return None


def verify_certificate(algebra: MetricLieAlgebra, verdict: SolitonVerdict) -> bool:
    """Independent soundness re-check of a verdict, either sign.

    Positive: D is a derivation and Ric - c id = D, both exactly.  Negative:
    the stored witness genuinely rules out every c.
    """
    ric = algebra.ricci()
    if verdict.is_soliton:
        d = verdict.derivation
        if d is None or verdict.c is None:
            return False
        if ric - Matrix.identity(algebra.dim).scale(verdict.c) != d:
            return False
        return algebra.is_derivation(d)
    if not verdict.witness:
        return False
    checks = []
    for (i, j), stored_defect in verdict.witness:
        defect = None
        for (a, b), dv in algebra.leibniz_defect(ric):
            if (a, b) == (i, j):
                defect = dv
        if defect is None or tuple(defect) != tuple(stored_defect):
            return False
        neg_bracket = [Q(0)] * algebra.dim
        for k, v in algebra.bracket_basis(i, j).items():
            neg_bracket[k] = -v
        checks.append((tuple(defect), tuple(neg_bracket)))
    if len(checks) == 1:
        defect, nb = checks[0]
        if is_zero_vec(nb):
            return not is_zero_vec(defect)
        k = next(idx for idx, x in enumerate(nb) if x != 0)
        r = defect[k] / nb[k]
        return any(a != r * b for a, b in zip(defect, nb))
    (d0, n0), (d1, n1) = checks
    if is_zero_vec(n0) or is_zero_vec(n1):
        return False
    k0 = next(idx for idx, x in enumerate(n0) if x != 0)
    k1 = next(idx for idx, x in enumerate(n1) if x != 0)
    return d0[k0] / n0[k0] != d1[k1] / n1[k1]


def theorem_predicate_crosscheck(htype_algebra, frame) -> bool:
    """Soliton verdict on the xi-orthocomplement == two-of-three bracket test."""
    from . import heisenberg

    result = htype_algebra.base.orthogonal_complement_subalgebra(frame.xi)
    if result is None:
        raise ValueError("xi-orthocomplement is not a subalgebra")
    sub, _ = result
    verdict = decide(sub)
    flags = heisenberg.predicates(htype_algebra, frame)
    return verdict.is_soliton == (sum(flags) >= 2)
