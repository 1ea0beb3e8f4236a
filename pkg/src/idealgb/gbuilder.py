"""Reduced Groebner bases of vanishing ideals of interpolation conditions.

Pipeline: move every condition to the origin (truncated exponential
shift), eliminate least monomials, read off the quotient basis as the set of
least monomials, take its corners as leading monomials, then write each
basis element down in closed form from the reduced conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DuplicatePoints
from .functional import (InterpolationProblem, make_point, shift_conditions,
                         t_matrix, validate_d_invariance)
from .polyring import Monomial, MonomialOrdering, Polynomial, mono_factorial
from .rcrb import ReverseReducedBasis, reverse_reduce
from .staircase import corners, quotient_basis


@dataclass
class GroebnerResult:
    """Output of the pipeline (or of the oracle).

    ``quotient_basis`` and ``leading_monomials`` are sorted ascending under
    ``ordering``; ``basis[i]`` has leading monomial ``leading_monomials[i]``.
    """

    ordering: MonomialOrdering
    quotient_basis: list[Monomial]
    leading_monomials: list[Monomial]
    basis: list[Polynomial]
    problem: InterpolationProblem | None = None
    certificate: object = None
    reduced: ReverseReducedBasis | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.quotient_basis)

    def same_basis(self, other: GroebnerResult) -> bool:
        return (self.quotient_basis == other.quotient_basis
                and self.leading_monomials == other.leading_monomials
                and self.basis == other.basis)


def basis_element(alpha: Monomial, reduced: ReverseReducedBasis) -> Polynomial:
    """X^alpha - sum_j (alpha! P_j[alpha]) / (beta_j! P_j[beta_j]) X^beta_j."""
    d = len(alpha)
    afact = mono_factorial(alpha)
    terms: dict[Monomial, Fraction] = {alpha: Fraction(1)}
    for p, beta in zip(reduced.polys, reduced.least_monomials):
        c = p.coeff(alpha)
        if not c:
            continue
        coef = Fraction(afact) * c / (mono_factorial(beta) * p.coeff(beta))
        terms[beta] = terms.get(beta, 0) - coef
    g = Polynomial(terms, d)
    assert g.coeff(alpha) == 1, "basis element is not monic"
    return g


def groebner_from_conditions(shifted: Sequence[Polynomial], ordering: MonomialOrdering,
                             problem: InterpolationProblem | None = None) -> GroebnerResult:
    """Pipeline on conditions already expressed at the origin."""
    reduced = reverse_reduce(shifted, ordering)
    qb = quotient_basis(reduced)
    lms = ordering.sorted(corners(qb))
    basis = [basis_element(a, reduced) for a in lms]
    return GroebnerResult(ordering, ordering.sorted(qb), lms, basis, problem, reduced=reduced)


def groebner_hermite(problem: InterpolationProblem, check_d_invariance: bool = True) -> GroebnerResult:
    """Reduced Groebner basis for the conditions of ``problem``."""
    if check_d_invariance:
        for cs in problem.conditions:
            validate_d_invariance(cs, problem.variables)
    return groebner_from_conditions(shift_conditions(problem), problem.ordering, problem)


def groebner_lagrange(points: Sequence[Sequence], ordering: MonomialOrdering,
                      variables: Sequence[str] = ()) -> GroebnerResult:
    """Reduced Groebner basis of the ideal of polynomials vanishing at ``points``."""
    pts = [make_point(p) for p in points]
    seen = set()
    for p in pts:
        if p in seen:
            raise DuplicatePoints(p)
        seen.add(p)
    problem = InterpolationProblem.lagrange(pts, ordering, variables)
    return groebner_from_conditions(shift_conditions(problem), ordering, problem)


def interpolate(problem: InterpolationProblem, values: Sequence, result: GroebnerResult | None = None) -> Polynomial:
    """The polynomial on the quotient basis taking the given functional values.

    ``values[i]`` is prescribed for the i-th functional in flattened input
    order. Solves the square functional-vs-monomial system exactly.
    """
    if len(values) != problem.n:
        raise ValueError(f"expected {problem.n} values, got {len(values)}")
    if result is None:
        result = groebner_hermite(problem, check_d_invariance=False)
    qb = result.quotient_basis
    coeffs = linalg.solve(t_matrix(shift_conditions(problem), qb), [Fraction(v) for v in values])
    return Polynomial(dict(zip(qb, coeffs)), problem.dimension)

