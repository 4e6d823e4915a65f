import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from rittsolve.errors import DegenerateComposition
from rittsolve.poly import (
    DEG_ZERO,
    LinearMap,
    Polynomial,
    RationalFunction,
    chebyshev,
    compose,
    compose_rational,
    evaluate,
    linear_invert,
)
from rittsolve.scalars import I, GaussianRational

z = Polynomial.z()


def chebyshev_closed_form(n: int) -> Polynomial:
    """T_n from the explicit sum, independent of the recurrence."""
    if n == 0:
        return Polynomial([1])
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = Fraction((-1) ** k * n * math.comb(n - k, k) * 2 ** (n - 2 * k), 2 * (n - k))
    return Polynomial(coeffs)


def test_zero_polynomial_encoding():
    zero = Polynomial([0, 0, 0])
    assert zero.coeffs == ()
    assert zero.degree == DEG_ZERO
    assert Polynomial() == zero == 0
    assert Polynomial([1, 2, 0]).degree == 1


def test_compose_examples():
    assert compose(z**2 + 1, z**3) == z**6 + 1
    f = 3 * z**4 - z + 7
    assert compose(f, z) == f
    assert compose(2 * z**2 - 1, 4 * z**3 - 3 * z) == Polynomial([-1, 0, 18, 0, -48, 0, 32])


def test_compose_constants():
    assert compose(Polynomial([5]), z**3 + 1) == 5
    assert compose(z**2 + z, Polynomial([2])) == 6


@pytest.mark.parametrize("n", range(0, 21))
def test_chebyshev_matches_closed_form(n):
    assert chebyshev(n) == chebyshev_closed_form(n)


def test_chebyshev_examples():
    assert chebyshev(0) == 1
    assert chebyshev(1) == z
    assert chebyshev(3) == 4 * z**3 - 3 * z
    assert chebyshev(6) == 32 * z**6 - 48 * z**4 + 18 * z**2 - 1


@pytest.mark.parametrize("n", [2, 5, 9])
def test_chebyshev_cosine(n):
    coeffs = [float(c.re) for c in chebyshev(n).coeffs]
    for theta in (0.1, 0.7, 2.3):
        value = sum(c * math.cos(theta) ** k for k, c in enumerate(coeffs))
        assert value == pytest.approx(math.cos(n * theta), abs=1e-9)


def test_evaluate_examples():
    assert evaluate(z**2 + 1, I) == 0
    assert evaluate(4 * z**3 - 3 * z, 1) == 1
    assert evaluate(Polynomial(), GaussianRational(3, 4)) == 0


def test_linear_invert_examples():
    assert linear_invert(LinearMap(1, 1)) == LinearMap(1, -1)
    assert linear_invert(LinearMap(2, 0)) == LinearMap(Fraction(1, 2), 0)
    assert linear_invert(LinearMap(2, 3)) == LinearMap(Fraction(1, 2), Fraction(-3, 2))


def test_linear_map_rejects_zero_slope():
    with pytest.raises(ValueError):
        LinearMap(0, 1)


@given(st.builds(LinearMap, st.integers(1, 9), st.integers(-9, 9)))
def test_linear_invert_left_inverse(m):
    inv = linear_invert(m)
    assert compose(inv.as_poly(), m.as_poly()) == z
    assert compose(m.as_poly(), inv.as_poly()) == z


def test_compose_rational_examples():
    assert compose_rational(RationalFunction(1, z), RationalFunction(z**3)) == RationalFunction(1, z**3)
    f = RationalFunction(z**3, z**3 + 1)
    assert compose_rational(f, RationalFunction(z**2)) == RationalFunction(z**6, z**6 + 1)
    jouk = RationalFunction(z**2 + 1, 2 * z)
    assert compose_rational(RationalFunction(2 * z**2 - 1), jouk) == RationalFunction(z**4 + 1, 2 * z**2)


def test_compose_rational_degenerate():
    # a constant inner function can hit a pole of the outer one
    with pytest.raises(DegenerateComposition):
        compose_rational(RationalFunction(1, z), RationalFunction(Polynomial([0])))


def test_rational_reduction():
    r = RationalFunction((z - 1) * (z + 2), 3 * (z - 1) * z)
    assert r.den == z
    assert r.num == (z + 2).scale(Fraction(1, 3))
    assert r.den.lc == 1


@given(polys(0, 4), polys(0, 4))
def test_rational_reduction_idempotent(p, q):
    r = RationalFunction(p, q)
    assert r.reduce() == r
    assert r.den.lc == 1


@given(polys(1, 4), polys(1, 4))
def test_degree_multiplicative(f, g):
    assert compose(f, g).degree == f.degree * g.degree


@given(polys(1, 12, bound=3, gaussian=False), polys(1, 12, bound=3, gaussian=False))
def test_degree_multiplicative_to_twelve(f, g):
    assert compose(f, g).degree == f.degree * g.degree


@given(polys(0, 5, bound=4), polys(0, 5, bound=4), polys(0, 5, bound=4))
def test_associativity(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_chebyshev_semigroup_small():
    for m in range(1, 8):
        for n in range(1, 8):
            assert compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n)


def test_divmod():
    q, r = divmod(z**5 + 3 * z + 1, z**2 + 1)
    assert q * (z**2 + 1) + r == z**5 + 3 * z + 1
    assert r.degree < 2


def test_call_dispatch():
    assert (z**2)(z + 1) == z**2 + 2 * z + 1
    assert (z**2)(3) == 9
