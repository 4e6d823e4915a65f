"""Dense univariate polynomials, rational functions and linear maps over Q(i).

All values are immutable. The zero polynomial is stored as an empty
coefficient tuple and has degree ``DEG_ZERO`` (negative infinity), so degree
comparisons such as ``deg < 1`` behave, while ``range(deg + 1)`` fails loudly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import DegenerateComposition
from .scalars import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "DEG_ZERO",
    "Polynomial",
    "RationalFunction",
    "LinearMap",
    "compose",
    "compose_rational",
    "chebyshev",
    "linear_invert",
    "evaluate",
    "format_scalar",
]

DEG_ZERO = float("-inf")


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Polynomial in ``z`` with Gaussian-rational coefficients, ascending order."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([as_scalar(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _from_trimmed(cls, coeffs: tuple) -> "Polynomial":
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _from_list(cls, coeffs: list) -> "Polynomial":
        return cls._from_trimmed(_trim(coeffs))

    @classmethod
    def z(cls) -> "Polynomial":
        return _Z

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([ZERO] * k + [as_scalar(c)])

    # -- structure --------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self.scale(ONE / self.lc)

    def scale(self, c) -> "Polynomial":
        c = as_scalar(c)
        if not c:
            return _ZERO_POLY
        return Polynomial._from_trimmed(tuple(x * c for x in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial._from_list([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def in_real_rationals(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial._from_list(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return _mul(self, other)
        if isinstance(other, RationalFunction):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = _ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial"):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        inv = ONE / other.lc
        if len(rem) - 1 < dg:
            return _ZERO_POLY, self
        quo = [ZERO] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - dg] = q
            for j, g in enumerate(other.coeffs):
                rem[k - dg + j] = rem[k - dg + j] - q * g
        return Polynomial._from_list(quo), Polynomial._from_list(rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, (Polynomial, RationalFunction)):
            return RationalFunction.of(self) / other
        return self.scale(ONE / as_scalar(other))

    def __rtruediv__(self, other):
        return RationalFunction.of(other) / self

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return compose(self, x)
        if isinstance(x, RationalFunction):
            return compose_rational(RationalFunction.of(self), x)
        return evaluate(self, x)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RationalFunction):
            return other == self
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == ((c,) if c else ())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def sort_key(self):
        """Lexicographic key over (re, im) pairs, leading coefficient first."""
        return (len(self.coeffs), tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)


_MPQ_ZERO = mpq(0)
_ZERO_POLY = Polynomial._from_trimmed(())
_ONE_POLY = Polynomial._from_trimmed((ONE,))
_Z = Polynomial._from_trimmed((ZERO, ONE))


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, RationalFunction):
        return NotImplemented
    try:
        c = as_scalar(value)
    except TypeError:
        return NotImplemented
    return Polynomial._from_trimmed((c,) if c else ())


def _mul(f: Polynomial, g: Polynomial) -> Polynomial:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return _ZERO_POLY
    if len(a) < len(b):
        a, b = b, a
    # schoolbook product on the mpq parts, with a real-only fast path
    ar, br = [x.re for x in a], [y.re for y in b]
    ai, bi = [x.im for x in a], [y.im for y in b]
    n = len(a) + len(b) - 1
    out_re = [_MPQ_ZERO] * n
    if not any(ai) and not any(bi):
        for j, y in enumerate(br):
            if y:
                for i, x in enumerate(ar):
                    out_re[i + j] += x * y
        return Polynomial._from_list([GaussianRational._raw(r, _MPQ_ZERO) for r in out_re])
    out_im = [_MPQ_ZERO] * n
    for j in range(len(b)):
        yr, yi = br[j], bi[j]
        if not (yr or yi):
            continue
        for i in range(len(a)):
            xr, xi = ar[i], ai[i]
            out_re[i + j] += xr * yr - xi * yi
            out_im[i + j] += xr * yi + xi * yr
    return Polynomial._from_list([GaussianRational._raw(r, m) for r, m in zip(out_re, out_im)])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (zero only when both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def compose(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return ``f(g(z))`` by Horner's rule."""
    if not f.coeffs:
        return _ZERO_POLY
    result = Polynomial._from_trimmed((f.coeffs[-1],))
    for c in reversed(f.coeffs[:-1]):
        result = result * g + c
    return result


def evaluate(f: Polynomial, x) -> GaussianRational:
    x = as_scalar(x) if not hasattr(x, "surd_square") else x
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def chebyshev(n: int) -> Polynomial:
    """``T_n`` from ``T_0 = 1``, ``T_1 = z``, ``T_{n+1} = 2z T_n - T_{n-1}``."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev, cur = _ONE_POLY, _Z
    if n == 0:
        return prev
    two_z = _Z.scale(2)
    for _ in range(n - 1):
        prev, cur = cur, two_z * cur - prev
    return cur


class RationalFunction:
    """Reduced ``num / den``: coprime, with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        num = _as_poly(num)
        den = _ONE_POLY if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO_POLY, _ONE_POLY
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num // g, den // g
        lead = den.lc
        if lead != ONE:
            inv = ONE / lead
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def of(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(_as_poly(value))

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def reduce(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    @property
    def degree(self):
        """Maximum of numerator and denominator degrees."""
        return max(self.num.degree, self.den.degree)

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rational(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __call__(self, x):
        if isinstance(x, (Polynomial, RationalFunction)):
            return compose_rational(self, RationalFunction.of(x))
        d = evaluate(self.den, x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return evaluate(self.num, x) / d

    def __eq__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == _ONE_POLY:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.is_polynomial():
            return format_poly(self.num)
        return f"{_wrap(self.num)} / {_wrap(self.den)}"


def _wrap(p: Polynomial) -> str:
    text = format_poly(p)
    return text if re.fullmatch(r"\d+|z(\^\d+)?", text) else f"({text})"


def _as_rational(value):
    if isinstance(value, RationalFunction):
        return value
    p = _as_poly(value)
    if p is NotImplemented:
        return NotImplemented
    return RationalFunction(p)


def compose_rational(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """Return the reduced form of ``f(g(z))``.

    The numerator and denominator of ``f`` are homogenized to a common degree
    ``M`` so that ``f(r/s) = sum p_k r^k s^(M-k) / sum q_k r^k s^(M-k)``.
    """
    f = RationalFunction.of(f)
    g = RationalFunction.of(g)
    r, s = g.num, g.den
    m = max(f.num.degree, f.den.degree)
    if m == DEG_ZERO:
        return f
    m = int(m)
    r_pows = [_ONE_POLY]
    s_pows = [_ONE_POLY]
    for _ in range(m):
        r_pows.append(r_pows[-1] * r)
        s_pows.append(s_pows[-1] * s)
    num = _ZERO_POLY
    den = _ZERO_POLY
    for k in range(m + 1):
        term = r_pows[k] * s_pows[m - k]
        if f.num[k]:
            num = num + term.scale(f.num[k])
        if f.den[k]:
            den = den + term.scale(f.den[k])
    if den.is_zero():
        raise DegenerateComposition(f"denominator of ({f}) o ({g}) vanishes identically")
    return RationalFunction(num, den)


class LinearMap:
    """``alpha*z + beta`` with ``alpha != 0``.

    ``alpha`` and ``beta`` may be any exact field scalars; the Chebyshev
    recognizer uses this with quadratic-extension scalars.
    """

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha=1, beta=0):
        if not hasattr(alpha, "surd_square"):
            alpha = as_scalar(alpha)
        if not hasattr(beta, "surd_square"):
            beta = as_scalar(beta)
        if not alpha:
            raise ValueError("LinearMap requires alpha != 0")
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls(ONE, ZERO)

    def is_base_field(self) -> bool:
        return isinstance(self.alpha, GaussianRational) and isinstance(self.beta, GaussianRational)

    def as_poly(self) -> Polynomial:
        if not self.is_base_field():
            raise ValueError("linear map has coefficients outside Q(i)")
        return Polynomial((self.beta, self.alpha))

    def then(self, other: "LinearMap") -> "LinearMap":
        """``other o self``."""
        return LinearMap(other.alpha * self.alpha, other.alpha * self.beta + other.beta)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return x.scale(self.alpha) + self.beta
        return self.alpha * x + self.beta

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"LinearMap({self.alpha!s}, {self.beta!s})"

    def __str__(self):
        if self.is_base_field():
            return format_poly(self.as_poly())
        return f"({self.alpha})z + ({self.beta})"


def linear_invert(m: LinearMap) -> LinearMap:
    inv = 1 / m.alpha
    return LinearMap(inv, -m.beta * inv)


# -- canonical text rendering ---------------------------------------------


def _frac_text(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _unsigned_real(q, monomial: str) -> str:
    q = Fraction(q)
    if q == 1 and monomial:
        return monomial
    if q.denominator == 1:
        return f"{q.numerator}{monomial}"
    return f"({q.numerator}/{q.denominator}){monomial}" if monomial else f"{q.numerator}/{q.denominator}"


def _unsigned_imag(q, monomial: str) -> str:
    q = Fraction(q)
    if q == 1:
        return f"i{monomial}"
    if q.denominator == 1:
        return f"{q.numerator}i{monomial}"
    return f"({q.numerator}/{q.denominator})i{monomial}"


def _terms(c: GaussianRational, monomial: str) -> list[tuple[str, str]]:
    """Signed pieces for ``c * monomial``; '+'/'-' plus unsigned text."""
    re, im = c.re, c.im
    if not im:
        return [("-" if re < 0 else "+", _unsigned_real(abs(re), monomial))]
    if not re:
        return [("-" if im < 0 else "+", _unsigned_imag(abs(im), monomial))]
    if not monomial:
        return _terms(GaussianRational(re), "") + _terms(GaussianRational(0, im), "")
    inner_re = _frac_text(re)
    inner_im = _unsigned_imag(abs(im), "")
    op = "-" if im < 0 else "+"
    return [("+", f"({inner_re} {op} {inner_im}){monomial}")]


def format_poly(p: Polynomial) -> str:
    """Expanded, descending-degree text that the expression parser reads back."""
    if p.is_zero():
        return "0"
    pieces: list[tuple[str, str]] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        monomial = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        pieces.extend(_terms(c, monomial))
    sign, body = pieces[0]
    out = [f"-{body}" if sign == "-" else body]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)


def format_scalar(c: GaussianRational) -> str:
    return format_poly(Polynomial((c,)))
