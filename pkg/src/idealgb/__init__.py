"""Reduced Groebner bases for ideal interpolation by least-monomial elimination."""

from .errors import (DimensionMismatch, DInvarianceViolation, DuplicatePoints, InvalidProblem,
                     LinearDependence, MalformedConditions, PolynomialSyntaxError, UnknownVariable)
from .functional import ConditionSpace, InterpolationProblem, apply_functional, shift_conditions
from .gbuilder import GroebnerResult, groebner_hermite, groebner_lagrange, interpolate
from .oracle import Certificate, bm_vanishing_ideal, certify, is_reduced_groebner
from .polyring import MonomialOrdering, Polynomial, format_poly, parse_poly
from .rcrb import ReverseReducedBasis, reverse_reduce

__version__ = "0.1.0"
