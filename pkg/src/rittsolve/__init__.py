"""Exact solver for the polynomial composition equation C(A(z)) = D(B(z))."""

from .decomp import (
    CommonRightFactorResult,
    DecompositionChain,
    full_decompose,
    left_divide,
    max_common_right_factor,
    right_factor,
)
from .errors import DegenerateComposition, NotARelation, NotComposable, ParseError
from .hfactor import RelationWitness, factor_through, lemma_factor, rational_left_divide, relation_from_rational
from .poly import LinearMap, Polynomial, RationalFunction, chebyshev, compose, compose_rational, evaluate, linear_invert
from .ritt import Case, SolveCase, existence_oracle, recognize_chebyshev, recognize_power, solve
from .scalars import GaussianRational, QuadraticExtensionScalar

__version__ = "0.1.0"
