"""Functional decomposition: left division, right factors, full chains."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from gmpy2 import mpq

from .errors import NotComposable
from .poly import Polynomial, compose
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "DecompositionChain",
    "CommonRightFactorResult",
    "left_divide",
    "right_factor",
    "canonical_right_factor",
    "full_decompose",
    "is_indecomposable",
    "max_common_right_factor",
    "divisors",
]

Z = Polynomial.z()


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def left_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return the unique ``h`` with ``f == h o g``.

    Works top-down: the coefficient of ``z^(k*deg g)`` in what remains of
    ``f`` fixes ``h_k``, then ``h_k * g^k`` is subtracted. Any leftover
    coefficient the elimination cannot reach means ``f`` does not factor
    through ``g``.

    Raises:
        ValueError: ``g`` is constant.
        NotComposable: no such ``h`` exists.
    """
    if g.is_constant():
        raise ValueError("left_divide needs a nonconstant right factor")
    if f.is_zero():
        return f
    n, d = f.degree, g.degree
    if n % d:
        raise NotComposable(f"deg {n} is not a multiple of deg {d}")
    m = n // d
    powers = [Polynomial.constant(1)]
    for _ in range(m):
        powers.append(powers[-1] * g)
    rem = list(f.coeffs)
    h = [ZERO] * (m + 1)
    for k in range(m, -1, -1):
        top = k * d
        for j in range(top + 1, min(top + d, len(rem))):
            if rem[j]:
                raise NotComposable(f"({f}) has no left quotient by ({g})")
        c = rem[top]
        if not c:
            continue
        c = c / powers[k].lc
        h[k] = c
        for j, x in enumerate(powers[k].coeffs):
            if x:
                rem[j] = rem[j] - c * x
    if any(rem):
        raise NotComposable(f"({f}) has no left quotient by ({g})")
    return Polynomial(h)


def canonical_right_factor(w: Polynomial) -> Polynomial:
    """Monic, zero-constant representative of ``{sigma o w : sigma linear}``."""
    if w.is_constant():
        raise ValueError("constants are not right factors")
    return (w - w[0]).monic()


def right_factor(f: Polynomial, d: int) -> Polynomial | None:
    """Canonical degree-``d`` right factor of ``f``, or None.

    With ``m = deg f / d``, the top ``d`` coefficients of monic ``f`` agree
    with those of ``W^m``; reversing both turns that into an m-th root of a
    power series with constant term 1, truncated at order ``d``. The candidate
    is then confirmed with :func:`left_divide`.
    """
    n = f.degree
    if f.is_constant():
        raise ValueError("right_factor needs a nonconstant polynomial")
    if d < 1 or d > n or n % d:
        return None
    if d == 1:
        return Z
    if d == n:
        return canonical_right_factor(f)
    m = n // d
    inv_lc = ONE / f.lc
    rev = [f[n - j] * inv_lc for j in range(d)]
    alpha = GaussianRational(mpq(1, m))
    root = [ONE] + [ZERO] * (d - 1)
    for k in range(1, d):
        acc = ZERO
        for j in range(1, k + 1):
            if rev[j]:
                acc = acc + (alpha * j - (k - j)) * rev[j] * root[k - j]
        root[k] = acc / k
    w = Polynomial([ZERO] + root[:0:-1] + [ONE])
    try:
        left_divide(f, w)
    except NotComposable:
        return None
    return w


def is_indecomposable(f: Polynomial) -> bool:
    n = f.degree
    return all(right_factor(f, d) is None for d in divisors(n) if 1 < d < n)


@dataclass(frozen=True)
class DecompositionChain:
    """Factors listed outermost first: ``f = factors[0] o ... o factors[-1]``."""

    factors: tuple[Polynomial, ...]

    def compose(self) -> Polynomial:
        return reduce(compose, self.factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.factors)

    def __len__(self):
        return len(self.factors)


def full_decompose(f: Polynomial) -> DecompositionChain:
    """Split ``f`` into indecomposables, peeling the smallest right factor first.

    A right factor of given degree is unique up to a left linear map, so the
    canonical one is the only candidate per degree. The smallest nontrivial
    right factor is itself indecomposable; only the left quotient recurses.
    """
    if f.degree < 1:
        raise ValueError("full_decompose needs deg f >= 1")
    factors = []
    cur = f
    while True:
        n = cur.degree
        for d in divisors(n):
            if not 1 < d < n:
                continue
            w = right_factor(cur, d)
            if w is not None:
                factors.append(w)
                cur = left_divide(cur, w)
                break
        else:
            factors.append(cur)
            break
    return DecompositionChain(tuple(reversed(factors)))


@dataclass(frozen=True)
class CommonRightFactorResult:
    W: Polynomial
    A_tilde: Polynomial
    B_tilde: Polynomial


def max_common_right_factor(A: Polynomial, B: Polynomial) -> CommonRightFactorResult:
    """Largest-degree ``W`` with ``A = A_tilde o W`` and ``B = B_tilde o W``.

    ``W`` is canonical (monic, ``W(0) = 0``), so candidate factors of the
    two inputs can be compared by equality. ``W = z`` is always a common
    factor and is returned when nothing larger exists.
    """
    if A.is_constant() or B.is_constant():
        raise ValueError("max_common_right_factor needs nonconstant inputs")
    a, b = A.degree, B.degree
    if a > 1 and b > 1:
        for d in reversed(divisors(gcd(a, b))):
            if d == 1:
                break
            wa = right_factor(A, d)
            if wa is None:
                continue
            wb = right_factor(B, d)
            if wb is not None and wa == wb:
                return CommonRightFactorResult(wa, left_divide(A, wa), left_divide(B, wa))
    return CommonRightFactorResult(Z, A, B)
