"""Exact-arithmetic soliton verdicts for codimension-one subgroups.

Builds the metric Lie algebras of generalized Heisenberg groups, Damek-Ricci
spaces and the Iwasawa groups of SL(n,R)/SO(n); computes the extrinsic and
intrinsic geometry of their codimension-one subgroups over Q; and decides the
algebraic Ricci soliton condition with certificates or refutation witnesses.
"""

__version__ = "1.0.0"

from .lie import MetricLieAlgebra
from .linalg import Matrix, Q, Rational
from .soliton import SolitonVerdict, decide, decide_einstein

__all__ = [
    "MetricLieAlgebra",
    "Matrix",
    "Q",
    "Rational",
    "SolitonVerdict",
    "decide",
    "decide_einstein",
    "__version__",
]
