"""Recovering the common outer function ``H`` with ``F = H o C``, ``G = H o D``.

``H`` is pinned down only on the image of ``C``; for polynomial and rational
inputs that image is cofinite, so the exact quotient found here is the unique
representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .decomp import left_divide
from .errors import NotARelation, NotComposable
from .linalg import nullspace
from .poly import Polynomial, RationalFunction, chebyshev, compose, compose_rational
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "RelationWitness",
    "factor_through",
    "lemma_factor",
    "rational_left_divide",
    "relation_from_rational",
]


def factor_through(F: Polynomial, G: Polynomial, C: Polynomial, D: Polynomial) -> Polynomial:
    """``H`` with ``F == H o C`` and ``G == H o D``; raises NotComposable otherwise."""
    if C.is_constant() or D.is_constant():
        raise ValueError("factor_through needs nonconstant C and D")
    H = left_divide(F, C)
    if compose(H, D) != G:
        raise NotComposable(f"G is not ({H}) o ({D})")
    return H


def lemma_factor(case: str, d1: int, d2: int, U: Polynomial, V: Polynomial, R: Polynomial | None = None, c: int | None = None) -> Polynomial:
    """Build ``H`` for the two coprime-degree identities.

    ``case="power"`` expects ``U o z^d1 == V o z^c R(z^d1)`` and returns ``H``
    with ``V = H o z^d1`` and ``U = H o z^c R(z)^d1``. Over Q(i) the quotient
    by ``z^d1`` exists exactly when every exponent in ``V`` is a multiple of
    ``d1``.

    ``case="chebyshev"`` expects ``U o T_d1 == V o T_d2`` and returns ``H``
    with ``V = H o T_d1`` and ``U = H o T_d2``.

    The hypothesis is checked first; a failing hypothesis, division or
    cross-check raises NotComposable. Inconsistent degree data raises
    ValueError.
    """
    if d1 < 1 or d2 < 1 or gcd(d1, d2) != 1:
        raise ValueError(f"d1={d1} and d2={d2} must be coprime positive integers")
    if case == "power":
        if R is None or c is None:
            raise ValueError("power case needs R and c")
        if c < 0 or gcd(c, d1) != 1 or R.is_zero() or c + d1 * R.degree != d2:
            raise ValueError("power case needs gcd(c, d1) = 1 and c + d1*deg R = d2")
        zd1 = Polynomial.monomial(d1)
        inner = Polynomial.monomial(c) * compose(R, zd1)
        if compose(U, zd1) != compose(V, inner):
            raise NotComposable("U o z^d1 != V o z^c R(z^d1)")
        H = left_divide(V, zd1)
        outer = Polynomial.monomial(c) * R**d1
    elif case == "chebyshev":
        if compose(U, chebyshev(d1)) != compose(V, chebyshev(d2)):
            raise NotComposable("U o T_d1 != V o T_d2")
        H = left_divide(V, chebyshev(d1))
        outer = chebyshev(d2)
    else:
        raise ValueError(f"unknown case {case!r}")
    if compose(H, outer) != U:
        raise NotComposable("U does not factor through H")
    return H


def rational_left_divide(f: RationalFunction, g: Polynomial) -> RationalFunction | None:
    """Rational ``H`` with ``f == H o g``, or None.

    Writing ``H = p/q`` with ``deg p, deg q <= K``, where
    ``K = max(deg num f, deg den f) // deg g``, the condition
    ``num(f) * q(g) - den(f) * p(g) == 0`` is linear in the coefficients of
    ``p`` and ``q``. Every nonzero kernel vector reduces to the same ``H``,
    since ``H o g`` determines ``H`` for nonconstant ``g``.
    """
    if g.is_constant():
        raise ValueError("rational_left_divide needs a nonconstant g")
    f = RationalFunction.of(f)
    K = int(max(f.num.degree, f.den.degree, 0)) // g.degree
    g_pows = [Polynomial.constant(1)]
    for _ in range(K):
        g_pows.append(g_pows[-1] * g)
    cols = [f.num * gp for gp in g_pows] + [-(f.den * gp) for gp in g_pows]
    top = max(col.degree for col in cols if not col.is_zero())
    rows = [[col[j] for col in cols] for j in range(int(top) + 1)]
    basis = nullspace(rows, len(cols))
    candidates = []
    for vec in basis:
        q = Polynomial(vec[: K + 1])
        p = Polynomial(vec[K + 1 :])
        if q.is_zero():
            continue
        H = RationalFunction(p, q)
        if compose_rational(H, RationalFunction(g)) == f:
            candidates.append(H)
    if not candidates:
        return None
    return min(candidates, key=lambda h: (h.num.degree + h.den.degree, h.num.sort_key(), h.den.sort_key()))


@dataclass(frozen=True)
class RelationWitness:
    """``C = F_1`` and ``D = scale * G_1`` with ``C o A == D o B``."""

    C: Polynomial
    D: Polynomial
    scale: GaussianRational


def relation_from_rational(F: RationalFunction, G: RationalFunction, A: Polynomial, B: Polynomial) -> RelationWitness:
    """Turn a rational identity ``F o A == G o B`` into a polynomial one.

    Numerators and denominators of ``F``, ``G`` stay coprime after
    substituting a polynomial, so ``F_1 o A`` and ``G_1 o B`` are both the
    numerator of the common reduced function, up to a constant.
    """
    if A.is_constant() or B.is_constant():
        raise ValueError("relation_from_rational needs nonconstant A and B")
    F, G = RationalFunction.of(F), RationalFunction.of(G)
    if compose_rational(F, RationalFunction(A)) != compose_rational(G, RationalFunction(B)):
        raise NotARelation("F o A != G o B")
    left = compose(F.num, A)
    right = compose(G.num, B)
    if right.is_zero():
        if not left.is_zero():
            raise NotARelation("numerators are not proportional")
        return RelationWitness(F.num, G.num, ONE)
    scale = left.lc / right.lc
    if left != right.scale(scale):
        raise NotARelation("numerators are not proportional")
    return RelationWitness(F.num, G.num.scale(scale), scale)
