"""Solving ``C o A = D o B`` for polynomial ``A``, ``B``.

The solver first looks for the cheap structure (``A`` a right factor of
``B``), then strips the maximal common right factor ``W`` and matches the
coprime-degree quotients against the two Ritt normal forms::

    power:      z^d1 o z^c R(z^d1)  ==  z^c R(z)^d1 o z^d1
    Chebyshev:  T_d1 o T_d2         ==  T_d2 o T_d1

A linear-algebra existence check at the minimal degrees ``(b/w, a/w)`` backs
up the classifier and is what finally decides ``NoSolution``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from .decomp import canonical_right_factor, left_divide, max_common_right_factor
from .errors import NotComposable
from .linalg import nullspace
from .poly import LinearMap, Polynomial, chebyshev, compose, linear_invert
from .scalars import ONE, ZERO, GaussianRational, QuadraticExtensionScalar, as_scalar, sqrt_gaussian

__all__ = [
    "Case",
    "SolveCase",
    "recognize_power",
    "recognize_chebyshev",
    "existence_oracle",
    "solve",
    "random_polynomial",
    "random_linear",
    "random_instance",
]

Z = Polynomial.z()


class Case(str, enum.Enum):
    DIVIDES = "Divides"
    POWER = "Power"
    CHEBYSHEV = "Chebyshev"
    NO_SOLUTION = "NoSolution"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SolveCase:
    """Outcome of :func:`solve`, always in the caller's orientation.

    ``a``/``b`` are the degrees of the ``A``/``B`` that were passed in and
    ``C o A == D o B``. ``d1 = a/w`` and ``d2 = b/w``; in the Power case the
    ``z^d``-shaped side is the one with the smaller of the two, and
    ``c + min(d1, d2) * deg R == max(d1, d2)``.

    ``mu_A``/``mu_B`` are the left linears of ``A_tilde``/``B_tilde`` once
    ``W`` has absorbed the shared right linear. They are absent when the
    witness came from the existence oracle rather than a template
    (``via_oracle``), e.g. when the Chebyshev scale lies outside Q(i).
    """

    tag: Case
    a: int
    b: int
    w: int
    d1: int
    d2: int
    W: Polynomial
    C: Polynomial | None = None
    D: Polynomial | None = None
    c: int | None = None
    R: Polynomial | None = None
    mu_A: LinearMap | None = None
    mu_B: LinearMap | None = None
    swapped: bool = False
    via_oracle: bool = False

    @property
    def solvable(self) -> bool:
        return self.tag is not Case.NO_SOLUTION

    def verify(self, A: Polynomial, B: Polynomial) -> bool:
        if not self.solvable:
            return False
        return compose(self.C, A) == compose(self.D, B)

    def flipped(self) -> "SolveCase":
        return replace(
            self,
            a=self.b,
            b=self.a,
            d1=self.d2,
            d2=self.d1,
            C=self.D,
            D=self.C,
            mu_A=self.mu_B,
            mu_B=self.mu_A,
            swapped=not self.swapped,
        )


# -- recognizers ----------------------------------------------------------


def recognize_power(P: Polynomial):
    """Match ``P = mu o z^d o lambda`` with monic ``lambda = z - z0``.

    Such a ``P`` has a single critical point ``z0``, which can be read off
    the top two coefficients; the match is then confirmed by expansion.
    Returns ``(mu, d, lambda)`` or None.
    """
    d = P.degree
    if d < 2:
        raise ValueError("recognize_power needs deg P >= 2")
    z0 = -P[d - 1] / (P.lc * d)
    alpha = P.lc
    beta = P(z0)
    shifted = Polynomial((-z0, ONE))
    if P != (shifted**d).scale(alpha) + beta:
        return None
    return LinearMap(alpha, beta), d, LinearMap(ONE, -z0)


def _depress(P: Polynomial):
    """Return ``(Q, z_star)`` with ``Q(y) = P(y + z_star)`` free of ``y^(n-1)``."""
    n = P.degree
    z_star = -P[n - 1] / (P.lc * n)
    return compose(P, Polynomial((z_star, ONE))), z_star


def recognize_chebyshev(P: Polynomial):
    """Match ``P = mu o T_n o lambda``; returns ``(mu, n, lambda)`` or None.

    With ``lambda = u*z + v``, depression forces ``v = -u*z_star``; then the
    ratio of the ``y^(n-2)`` and ``y^n`` coefficients gives ``u^2``, and
    ``mu`` follows from the leading and constant terms. When ``u^2`` has no
    square root in Q(i), ``mu`` and ``lambda`` carry
    ``QuadraticExtensionScalar`` coefficients. ``lambda`` is normalized so
    its leading coefficient is the canonical sign choice (``T_n(-z) =
    (-1)^n T_n(z)`` makes both signs valid). For ``n = 2`` every quadratic
    matches and ``u = 1`` is taken.
    """
    n = P.degree
    if n < 2:
        raise ValueError("recognize_chebyshev needs deg P >= 2")
    Q, z_star = _depress(P)
    tn = chebyshev(n)
    if n == 2:
        u = ONE
    else:
        if not Q[n - 2]:
            return None
        u_sq = -(Q[n] * n) / (Q[n - 2] * 4)
        u = sqrt_gaussian(u_sq)
        if u is None:
            u = QuadraticExtensionScalar.surd(u_sq)
    alpha = Q.lc / (tn.lc * u**n)
    beta = Q[0] - alpha * tn[0]
    u_pow = ONE
    for k in range(1, n + 1):
        u_pow = u_pow * u
        term = alpha * tn[k] * u_pow
        if term != Q[k]:
            return None
    return LinearMap(alpha, beta), n, LinearMap(u, -u * z_star)


def _chebyshev_left_linear(P: Polynomial, n: int) -> LinearMap | None:
    """``mu`` with ``P == mu o T_n``, if any."""
    tn = chebyshev(n)
    if P.degree != n:
        return None
    alpha = P.lc / tn.lc
    beta = P[0] - alpha * tn[0]
    if P != tn.scale(alpha) + beta:
        return None
    return LinearMap(alpha, beta)


# -- existence oracle -----------------------------------------------------


def _power_table(P: Polynomial, k: int) -> list[Polynomial]:
    out = [Polynomial.constant(1)]
    for _ in range(k):
        out.append(out[-1] * P)
    return out


def _kernel_witness(a_pows, b_pows, nC: int, nD: int):
    top = max(nC * a_pows[1].degree, nD * b_pows[1].degree)
    ncols = nC + nD
    rows = []
    for j in range(1, top + 1):
        row = [a_pows[k][j] for k in range(1, nC + 1)]
        row.extend(-b_pows[k][j] for k in range(1, nD + 1))
        rows.append(row)
    basis = nullspace(rows, ncols)
    if not basis:
        return None
    vec = basis[0]
    C = Polynomial([ZERO] + vec[:nC])
    D = Polynomial([ZERO] + vec[nC:])
    if D.is_constant() or C.is_constant():
        return None
    inv = ONE / D.lc
    return C.scale(inv), D.scale(inv)


def _match_constants(C, D, A, B):
    """Shift ``C`` so the constant terms of ``C o A`` and ``D o B`` agree."""
    return C + (D(B[0]) - C(A[0])), D


def existence_oracle(A: Polynomial, B: Polynomial, nC: int, nD: int):
    """Decide whether nonconstant ``C``, ``D`` with ``deg <= (nC, nD)`` solve ``C o A = D o B``.

    Constant terms only ever shift ``C o A - D o B`` by a constant, so they
    are left out of the linear system along with the degree-0 equation; the
    remaining coefficient equations are linear in ``(C_1..C_nC, D_1..D_nD)``
    and a nonzero kernel vector is automatically nonconstant. Degree pairs
    are tried from the smallest ``deg D`` up, so the returned pair has
    minimal degrees. It is normalized to ``D`` monic with ``D(0) = 0``, and
    ``C(0)`` is then whatever makes the constants agree. Returns None when
    only constant solutions exist.
    """
    if A.is_constant() or B.is_constant():
        raise ValueError("existence_oracle needs nonconstant A and B")
    if nC < 1 or nD < 1:
        raise ValueError("degree bounds must be positive")
    a, b = A.degree, B.degree
    a_pows = _power_table(A, nC)
    b_pows = _power_table(B, nD)
    for e in range(1, nD + 1):
        if (e * b) % a:
            continue
        f = e * b // a
        if f > nC:
            break
        found = _kernel_witness(a_pows[: f + 1], b_pows[: e + 1], f, e)
        if found is not None:
            C, D = _match_constants(*found, A, B)
            if compose(C, A) != compose(D, B):
                raise AssertionError("oracle kernel vector failed to recompose")
            return C, D
    return None


# -- solver ---------------------------------------------------------------


def solve(A: Polynomial, B: Polynomial) -> SolveCase:
    """Find minimal-degree ``C``, ``D`` with ``C o A == D o B``, or report none exist.

    Inputs with ``deg A > deg B`` are solved swapped and flipped back, so the
    returned witness always fits the arguments as given.
    """
    if A.degree < 1 or B.degree < 1:
        raise ValueError("solve needs nonconstant A and B")
    if A.degree > B.degree:
        return _solve_oriented(B, A).flipped()
    return _solve_oriented(A, B)


def _finish(case: SolveCase, A: Polynomial, B: Polynomial) -> SolveCase | None:
    if compose(case.C, A) != compose(case.D, B):
        return None
    if case.C.degree != case.d2 or case.D.degree != case.d1:
        return None
    return case


def _solve_oriented(A: Polynomial, B: Polynomial) -> SolveCase:
    a, b = A.degree, B.degree
    w = gcd(a, b)
    d1, d2 = a // w, b // w
    base = dict(a=a, b=b, w=w, d1=d1, d2=d2)

    if b % a == 0:
        try:
            C = left_divide(B, A)
        except NotComposable:
            pass
        else:
            return SolveCase(Case.DIVIDES, W=A, C=C, D=Z, **base)

    crf = max_common_right_factor(A, B)
    if crf.W.degree == w and d1 >= 2:
        for attempt in (_try_chebyshev, _try_power):
            case = attempt(crf.W, crf.A_tilde, crf.B_tilde, base)
            if case is not None:
                case = _finish(case, A, B)
                if case is not None:
                    return case

    found = existence_oracle(A, B, d2, d1)
    if found is None:
        return SolveCase(Case.NO_SOLUTION, W=crf.W, **base)
    C, D = found
    if d1 == 1:
        tag = Case.DIVIDES
    elif recognize_power(D) is not None:
        tag = Case.POWER
    else:
        tag = Case.CHEBYSHEV
    return SolveCase(tag, W=crf.W, C=C, D=D, via_oracle=True, **base)


def _try_power(W, At, Bt, base) -> SolveCase | None:
    d1, d2 = base["d1"], base["d2"]
    found = recognize_power(At)
    if found is None:
        return None
    mu_A, _, lam = found
    lam_inv = linear_invert(lam).as_poly()
    W2 = compose(lam.as_poly(), W)
    Bt2 = compose(Bt, lam_inv)
    shift = Bt2[0]
    rest = Bt2 - shift
    exps = rest.support()
    if not exps or any((e - d2) % d1 for e in exps):
        return None
    c = exps[0]
    R = Polynomial(rest[c + d1 * k] for k in range((d2 - c) // d1 + 1))
    mu_B = LinearMap(ONE, shift)
    C = compose(Polynomial.monomial(c) * R**d1, linear_invert(mu_A).as_poly())
    D = compose(Polynomial.monomial(d1), linear_invert(mu_B).as_poly())
    return SolveCase(Case.POWER, W=W2, C=C, D=D, c=c, R=R, mu_A=mu_A, mu_B=mu_B, **base)


def _try_chebyshev(W, At, Bt, base) -> SolveCase | None:
    d1, d2 = base["d1"], base["d2"]
    found = recognize_chebyshev(Bt)
    if found is None:
        return None
    mu_B, _, lam = found
    if not (lam.is_base_field() and mu_B.is_base_field()):
        # scale outside Q(i): leave it to the oracle
        return None
    At2 = compose(At, linear_invert(lam).as_poly())
    mu_A = _chebyshev_left_linear(At2, d1)
    if mu_A is None:
        return None
    W2 = compose(lam.as_poly(), W)
    C = compose(chebyshev(d2), linear_invert(mu_A).as_poly())
    D = compose(chebyshev(d1), linear_invert(mu_B).as_poly())
    return SolveCase(Case.CHEBYSHEV, W=W2, C=C, D=D, mu_A=mu_A, mu_B=mu_B, **base)


# -- random instances -----------------------------------------------------


def _random_scalar(rng: random.Random, bound: int = 5, *, nonzero: bool = False, gaussian: float = 0.2, fraction: float = 0.2):
    while True:
        re = Fraction(rng.randint(-bound, bound))
        if rng.random() < fraction:
            re /= rng.randint(1, bound)
        im = Fraction(0)
        if rng.random() < gaussian:
            im = Fraction(rng.randint(-bound, bound))
        c = GaussianRational(re, im)
        if c or not nonzero:
            return c


def random_polynomial(rng: random.Random, degree: int, bound: int = 5, **kw) -> Polynomial:
    """Random polynomial of exactly ``degree``."""
    coeffs = [_random_scalar(rng, bound, **kw) for _ in range(degree)]
    coeffs.append(_random_scalar(rng, bound, nonzero=True, **kw))
    return Polynomial(coeffs)


def random_linear(rng: random.Random, bound: int = 4, **kw) -> LinearMap:
    return LinearMap(_random_scalar(rng, bound, nonzero=True, **kw), _random_scalar(rng, bound, **kw))


def _coprime_pair(rng: random.Random, max_d: int) -> tuple[int, int]:
    while True:
        d1, d2 = rng.randint(2, max_d), rng.randint(2, max_d)
        if d1 != d2 and gcd(d1, d2) == 1:
            return d1, d2


@dataclass
class Instance:
    """A solvable pair built from a normal-form template, with its ingredients."""

    A: Polynomial
    B: Polynomial
    kind: Case
    d1: int
    d2: int
    W: Polynomial
    extras: dict = field(default_factory=dict)


def random_instance(rng: random.Random, kind: Case | None = None, max_d: int = 6, max_w: int = 3, bound: int = 4) -> Instance:
    """``A = A_tilde o W``, ``B = B_tilde o W`` with coprime template degrees.

    ``d1`` is the degree of the ``z^d1`` (or ``T_d1``) side and may exceed
    ``d2``; random linears are applied on both sides of the template.
    """
    if kind is None:
        kind = rng.choice([Case.POWER, Case.CHEBYSHEV])
    d1, d2 = _coprime_pair(rng, max_d)
    lam = random_linear(rng, bound).as_poly()
    mu_a = random_linear(rng, bound).as_poly()
    mu_b = random_linear(rng, bound).as_poly()
    extras = {}
    if kind is Case.POWER:
        if d2 < d1:
            c, R = d2, Polynomial.constant(_random_scalar(rng, bound, nonzero=True))
        else:
            c = d2 % d1
            if c + d1 <= d2 and rng.random() < 0.3:
                c += d1
            R = random_polynomial(rng, (d2 - c) // d1, bound)
        extras.update(c=c, R=R)
        inner_a = Polynomial.monomial(d1)
        inner_b = Polynomial.monomial(c) * compose(R, Polynomial.monomial(d1))
    elif kind is Case.CHEBYSHEV:
        inner_a, inner_b = chebyshev(d1), chebyshev(d2)
    else:
        raise ValueError(f"no template for {kind}")
    At = compose(compose(mu_a, inner_a), lam)
    Bt = compose(compose(mu_b, inner_b), lam)
    W = random_polynomial(rng, rng.randint(1, max_w), bound)
    return Instance(compose(At, W), compose(Bt, W), kind, d1, d2, W, extras)
