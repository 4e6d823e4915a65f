"""Exact scalars: Gaussian rationals and a quadratic extension over them."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import is_square, isqrt, mpq, mpz

__all__ = ["GaussianRational", "QuadraticExtensionScalar", "ZERO", "ONE", "I", "as_scalar", "sqrt_gaussian"]

_MPQ_ZERO = mpq(0)


def _to_mpq(value) -> mpq:
    if isinstance(value, type(_MPQ_ZERO)):
        return value
    if isinstance(value, (int, Rational)):
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value))
    raise TypeError(f"cannot build a rational from {value!r}")


class GaussianRational:
    """``re + im*i`` with exact rational parts.

    Both parts are ``gmpy2.mpq`` values, which are always kept in lowest
    terms with a positive denominator, so equality of two instances is plain
    structural equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (Fraction(self.re), Fraction(self.im))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _MPQ_ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(1 / self.re, _MPQ_ZERO)
        n = self.norm()
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({Fraction(self.re)!s}, {Fraction(self.im)!s})"

    def __str__(self):
        re, im = Fraction(self.re), Fraction(self.im)
        if not im:
            return str(re)
        if not re:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Rational)) or type(value) is type(_MPQ_ZERO):
        return GaussianRational._raw(_to_mpq(value), _MPQ_ZERO)
    if isinstance(value, complex):
        raise TypeError("floating-point complex values are not exact scalars")
    return NotImplemented


def as_scalar(value) -> GaussianRational:
    """Coerce ints, Fractions and mpq values to ``GaussianRational``."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"not an exact scalar: {value!r}")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _rational_sqrt(q: mpq) -> mpq | None:
    if q < 0:
        return None
    num, den = mpz(q.numerator), mpz(q.denominator)
    if not (is_square(num) and is_square(den)):
        return None
    return mpq(isqrt(num), isqrt(den))


def sqrt_gaussian(s: GaussianRational) -> GaussianRational | None:
    """Exact square root in Q(i), or None when ``s`` is not a square there.

    Of the two roots, the one with positive real part is returned (positive
    imaginary part when the real part vanishes).
    """
    if not s:
        return ZERO
    a, b = s.re, s.im
    r = _rational_sqrt(a * a + b * b)
    if r is None:
        return None
    x = _rational_sqrt((a + r) / 2)
    y = _rational_sqrt((r - a) / 2)
    if x is None or y is None:
        return None
    if b < 0:
        y = -y
    root = GaussianRational._raw(x, y)
    if root * root != s:
        return None
    return normalize_sign(root)


def prefers_positive(z: GaussianRational) -> bool:
    """True when ``z`` is the canonical member of the pair ``(z, -z)``."""
    return z.re > 0 or (z.re == 0 and z.im >= 0)


def normalize_sign(z: GaussianRational) -> GaussianRational:
    return z if prefers_positive(z) else -z


class QuadraticExtensionScalar:
    """``base + surd_coeff * sqrt(surd_square)`` over Q(i).

    Operands must share the same ``surd_square``; Gaussian rationals and ints
    are embedded with a zero surd coefficient.
    """

    __slots__ = ("base", "surd_coeff", "surd_square")

    def __init__(self, base, surd_coeff, surd_square):
        self.base = as_scalar(base)
        self.surd_coeff = as_scalar(surd_coeff)
        self.surd_square = as_scalar(surd_square)

    @classmethod
    def surd(cls, s: GaussianRational) -> "QuadraticExtensionScalar":
        return cls(ZERO, ONE, s)

    def _lift(self, other):
        if isinstance(other, QuadraticExtensionScalar):
            if other.surd_square != self.surd_square:
                raise ValueError("mixing scalars from different quadratic extensions")
            return other
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticExtensionScalar(other, ZERO, self.surd_square)

    def in_base_field(self) -> bool:
        return not self.surd_coeff

    def to_base(self) -> GaussianRational:
        if self.surd_coeff:
            raise ValueError(f"{self} does not lie in Q(i)")
        return self.base

    def __bool__(self):
        return bool(self.base) or bool(self.surd_coeff)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticExtensionScalar(self.base + other.base, self.surd_coeff + other.surd_coeff, self.surd_square)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticExtensionScalar(-self.base, -self.surd_coeff, self.surd_square)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        x, y, s = self.base, self.surd_coeff, self.surd_square
        u, v = other.base, other.surd_coeff
        return QuadraticExtensionScalar(x * u + y * v * s, x * v + y * u, s)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticExtensionScalar":
        return QuadraticExtensionScalar(self.base, -self.surd_coeff, self.surd_square)

    def inverse(self) -> "QuadraticExtensionScalar":
        # (x + y r)(x - y r) = x^2 - y^2 s, nonzero because s is not a square
        n = self.base * self.base - self.surd_coeff * self.surd_coeff * self.surd_square
        if not n:
            raise ZeroDivisionError("QuadraticExtensionScalar division by zero")
        return QuadraticExtensionScalar(self.base / n, -self.surd_coeff / n, self.surd_square)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticExtensionScalar(ONE, ZERO, self.surd_square)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.base == other.base and self.surd_coeff == other.surd_coeff

    def __hash__(self):
        if not self.surd_coeff:
            return hash(self.base)
        return hash((self.base, self.surd_coeff, self.surd_square))

    def __repr__(self):
        return f"QuadraticExtensionScalar({self.base}, {self.surd_coeff}, {self.surd_square})"

    def __str__(self):
        return f"{self.base} + ({self.surd_coeff})*sqrt({self.surd_square})"
