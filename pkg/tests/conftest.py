from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rittsolve.poly import Polynomial
from rittsolve.scalars import GaussianRational

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

Z = Polynomial.z()


def rationals(bound: int = 9):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


@st.composite
def scalars(draw, bound: int = 9, gaussian: bool = True):
    re = draw(rationals(bound))
    im = draw(rationals(bound)) if gaussian and draw(st.booleans()) else Fraction(0)
    return GaussianRational(re, im)


@st.composite
def polys(draw, min_degree: int = 0, max_degree: int = 5, bound: int = 9, gaussian: bool = True):
    deg = draw(st.integers(min_degree, max_degree))
    coeffs = [draw(scalars(bound, gaussian)) for _ in range(deg)]
    lead = draw(scalars(bound, gaussian).filter(bool))
    return Polynomial(coeffs + [lead])


# acceptance results, printed in the terminal summary
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n} [{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture
def z():
    return Z
