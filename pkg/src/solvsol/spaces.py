"""Constructor grammar for spaces and unit normals.

Spaces:   N(m,k)   N(m,k+,k-)   AN(m,k)   AN(m,k+,k-)   SL(n)
Normals:
    v:rand:SEED      random rational unit vector in v (stereographic)
    v:basis:IDX      basis vector of v
    v:delta+:SEED    rational unit vector in the +1 half-spin piece (m = 0 mod 4, k = 1)
    v:delta-:SEED    same for the -1 piece
    v:mix:P/Q        (P u_+ + Q u_-)/r with r^2 = P^2 + Q^2 a perfect square
    a:rand:SEED      rational unit vector in the abelian part
    av:rand:SEED     mixed unit normal a B + U with a != 0 != U (solvable extensions)
    aHX:t=P/Q        a H_alpha + b X_alpha on the first simple root, via the
                     rational circle parameter t -> (2t, 1-t^2)/(1+t^2)
    aHX:a=P/Q        literal a when 1 - a^2 is a rational square, else the
                     value is read as the circle parameter t
    aHX:alpha=I:t=P/Q   same with the I-th simple root
    raw:[p/q,...]    explicit coordinates (must be exactly unit)

Every normal produced here has exact unit norm; grammar violations raise
GrammarError.
"""

from __future__ import annotations

import re

from . import damekricci, heisenberg, iwasawa
from .damekricci import DamekRicciAlgebra
from .heisenberg import HTypeAlgebra
from .iwasawa import IwasawaAlgebra
from .linalg import Q, Vector, is_zero_vec, unit_vector_in_span, vec, vec_zero


class GrammarError(ValueError):
    pass


_SPACE_RE = re.compile(r"^(AN|N|SL)\((\d+)(?:,(\d+))?(?:,(\d+))?\)$")


def parse_space(spec: str):
    """Build (with caching) the space named by the grammar string."""
    m = _SPACE_RE.match(spec.replace(" ", ""))
    if not m:
        raise GrammarError(f"unrecognized space spec: {spec!r}")
    head, first, second, third = m.group(1), m.group(2), m.group(3), m.group(4)
    try:
        if head == "SL":
            if second is not None or third is not None:
                raise GrammarError(f"SL takes one argument: {spec!r}")
            return iwasawa.build_named(int(first))
        mm = int(first)
        if second is None:
            raise GrammarError(f"missing multiplicity: {spec!r}")
        if third is None:
            if mm % 4 == 3:
                raise GrammarError(
                    f"m = {mm} needs multiplicities (k+,k-): {spec!r}"
                )
            mult = int(second)
        else:
            if mm % 4 != 3:
                raise GrammarError(f"m = {mm} takes a single multiplicity: {spec!r}")
            mult = (int(second), int(third))
        if head == "N":
            return heisenberg.build_named(mm, mult)
        return damekricci.build_named(mm, mult)
    except GrammarError:
        raise
    except ValueError as exc:
        raise GrammarError(str(exc)) from exc


def base_of(space):
    return space.base


def space_name(space) -> str:
    return space.name()


def _htype_of(space) -> HTypeAlgebra:
    if isinstance(space, HTypeAlgebra):
        return space
    if isinstance(space, DamekRicciAlgebra):
        return space.htype
    raise GrammarError("this normal kind needs an H-type or Damek-Ricci space")


def _embed_v(space, v_vector) -> Vector:
    if isinstance(space, HTypeAlgebra):
        return space.embed_v(v_vector)
    return space.embed(0, v_vector, vec_zero(space.m))


def _parse_fraction(text: str):
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise GrammarError(f"bad rational {text!r}") from exc


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise GrammarError(f"bad integer {text!r}") from exc


def xi_from_spec(space, spec: str) -> Vector:
    """Exact unit normal from a grammar string, for the given space."""
    parts = spec.split(":")
    kind = parts[0]
    if kind == "v":
        htype = _htype_of(space)
        if len(parts) != 3:
            raise GrammarError(f"malformed v normal: {spec!r}")
        if parts[1] == "rand":
            from .linalg import unit_sphere_rational_sample

            return _embed_v(space, unit_sphere_rational_sample(htype.n, _parse_int(parts[2])))
        if parts[1] == "basis":
            idx = _parse_int(parts[2])
            if not 0 <= idx < htype.n:
                raise GrammarError(f"v basis index out of range: {spec!r}")
            unit = [Q(0)] * htype.n
            unit[idx] = Q(1)
            return _embed_v(space, tuple(unit))
        if parts[1] in ("delta+", "delta-"):
            if htype.m % 4 != 0 or htype.module.k != 1:
                raise GrammarError("half-spin normals need m = 0 mod 4 and k = 1")
            sign = "+" if parts[1] == "delta+" else "-"
            v = heisenberg.unit_xi_half_spin(htype, sign, _parse_int(parts[2]))
            return _embed_v(space, htype.v_part(v))
        if parts[1] == "mix":
            nums = parts[2].split("/")
            if len(nums) != 2:
                raise GrammarError(f"mix needs P/Q: {spec!r}")
            p, q = _parse_int(nums[0]), _parse_int(nums[1])
            if htype.m % 4 != 0 or htype.module.k != 1:
                raise GrammarError("half-spin normals need m = 0 mod 4 and k = 1")
            try:
                v = heisenberg.unit_xi_mixed(htype, p, q)
            except ValueError as exc:
                raise GrammarError(str(exc)) from exc
            return _embed_v(space, htype.v_part(v))
        raise GrammarError(f"unknown v normal kind: {spec!r}")
    if kind == "a":
        if len(parts) != 3 or parts[1] != "rand":
            raise GrammarError(f"malformed a normal: {spec!r}")
        seed = _parse_int(parts[2])
        if isinstance(space, DamekRicciAlgebra):
            return space.base.basis_vector(0)
        if isinstance(space, IwasawaAlgebra):
            return iwasawa.unit_in_a(space, seed)
        raise GrammarError("a normals need a solvable space")
    if kind == "av":
        if len(parts) != 3 or parts[1] != "rand":
            raise GrammarError(f"malformed av normal: {spec!r}")
        if not isinstance(space, DamekRicciAlgebra):
            raise GrammarError("av normals need a Damek-Ricci space")
        return damekricci.sample_unit_normal(space, _parse_int(parts[2]), require_mixed=True)
    if kind == "aHX":
        if not isinstance(space, IwasawaAlgebra):
            raise GrammarError("aHX normals need an SL(n) space")
        alpha_idx = 0
        rest = parts[1:]
        if rest and rest[0].startswith("alpha="):
            alpha_idx = _parse_int(rest[0][len("alpha="):])
            rest = rest[1:]
        if len(rest) != 1 or "=" not in rest[0]:
            raise GrammarError(f"malformed aHX normal: {spec!r}")
        key, _, value = rest[0].partition("=")
        val = _parse_fraction(value)
        if not 0 <= alpha_idx < len(space.datum.simple_roots):
            raise GrammarError(f"no simple root with index {alpha_idx}")
        alpha = space.datum.simple_roots[alpha_idx]
        if key == "t":
            a, b = iwasawa.pythagorean_pair(val)
        elif key == "a":
            from .linalg import _rational_sqrt

            b = _rational_sqrt(1 - val * val)
            if b is not None:
                a = val
            else:
                a, b = iwasawa.pythagorean_pair(val)
        else:
            raise GrammarError(f"aHX takes t= or a=: {spec!r}")
        return space.xi_line(alpha, a, b)
    if kind == "full":
        if len(parts) != 3 or parts[1] != "rand":
            raise GrammarError(f"malformed full normal: {spec!r}")
        basis = [space.base.basis_vector(i) for i in range(space.base.dim)]
        return unit_vector_in_span(space.base.gram, basis, seed=_parse_int(parts[2]))
    if kind == "raw":
        body = spec[len("raw:"):].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise GrammarError(f"raw needs a bracketed list: {spec!r}")
        entries = [t for t in body[1:-1].split(",") if t.strip()]
        xi = vec([_parse_fraction(t.strip()) for t in entries])
        if len(xi) != space.base.dim:
            raise GrammarError(
                f"raw normal has length {len(xi)}, space has dim {space.base.dim}"
            )
        if space.base.gram_ip(xi, xi) != 1:
            raise GrammarError("raw normal is not exactly unit")
        if is_zero_vec(xi):
            raise GrammarError("raw normal is zero")
        return xi
    raise GrammarError(f"unknown normal kind: {spec!r}")
