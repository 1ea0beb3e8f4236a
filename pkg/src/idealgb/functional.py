"""Interpolation conditions of the form f -> (P(D) f)(theta).

A condition space pairs a point theta with polynomials P whose differential
operators P(D) are applied before evaluating at theta. Conditions at a
nonzero point become conditions at the origin through the identity
delta_theta = delta_0 o exp(theta . D); truncating the exponential at the
total condition count keeps everything polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import (DimensionMismatch, DInvarianceViolation, DuplicatePoints,
                     InvalidProblem, LinearDependence)
from .polyring import Monomial, MonomialOrdering, Polynomial, mono_factorial, tick

Point = tuple  # tuple[Fraction, ...]


def make_point(coords: Sequence) -> Point:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class ConditionSpace:
    """Functionals delta_point o g(D) for every generator g."""

    point: Point
    generators: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "point", make_point(self.point))
        gens = tuple(self.generators)
        if not gens:
            gens = (Polynomial.constant(1, len(self.point)),)
        for g in gens:
            if g.nvars != len(self.point):
                raise DimensionMismatch(
                    f"generator in {g.nvars} variables at a point of dimension {len(self.point)}")
        object.__setattr__(self, "generators", gens)

    @property
    def size(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class InterpolationProblem:
    ordering: MonomialOrdering
    conditions: tuple[ConditionSpace, ...]
    variables: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "conditions", tuple(self.conditions))
        d = self.ordering.nvars
        if not self.variables:
            object.__setattr__(self, "variables", tuple(f"x{i + 1}" for i in range(d)))
        else:
            object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) != d:
            raise DimensionMismatch(f"{len(self.variables)} variable names for a {d}-variable ordering")
        if not self.conditions:
            raise InvalidProblem("no conditions")
        seen = set()
        for cs in self.conditions:
            if len(cs.point) != d:
                raise DimensionMismatch(f"point {cs.point} is not {d}-dimensional")
            if cs.point in seen:
                raise DuplicatePoints(cs.point)
            seen.add(cs.point)

    @classmethod
    def lagrange(cls, points: Sequence[Sequence], ordering: MonomialOrdering,
                 variables: Sequence[str] = ()) -> InterpolationProblem:
        return cls(ordering, tuple(ConditionSpace(make_point(p)) for p in points), tuple(variables))

    @property
    def dimension(self) -> int:
        return self.ordering.nvars

    @property
    def n(self) -> int:
        return sum(cs.size for cs in self.conditions)

    def functionals(self) -> list[tuple[Point, Polynomial]]:
        """(point, generator) pairs, flattened in input order."""
        return [(cs.point, g) for cs in self.conditions for g in cs.generators]


def apply_functional(p: Polynomial, f: Polynomial) -> Fraction:
    """Value of delta_0 o p(D) on f: sum over alpha of alpha! p(alpha) f(alpha)."""
    if p.nvars != f.nvars:
        raise DimensionMismatch("functional and polynomial differ in dimension")
    small, big = (p, f) if len(p) <= len(f) else (f, p)
    total = Fraction(0)
    for m, c in small:
        other = big.coeff(m)
        if other:
            total += mono_factorial(m) * c * other
    tick(len(small))
    return total


def truncated_exponential(theta: Sequence, n: int) -> Polynomial:
    """sum_{j<=n} (theta . X)^j / j!"""
    if n < 0:
        raise ValueError("truncation degree must be >= 0")
    theta = make_point(theta)
    d = len(theta)
    linear = Polynomial({tuple(1 if i == j else 0 for i in range(d)): t
                         for j, t in enumerate(theta)}, d)
    one = Polynomial.constant(1, d)
    total, power = one, one
    if linear.is_zero():
        return one
    for j in range(1, n + 1):
        power = (power * linear).scale(Fraction(1, j))
        total = total + power
    return total


def shift_condition(point: Sequence, generator: Polynomial, n: int,
                    exponential: Polynomial | None = None) -> Polynomial:
    """Degree-n truncation of exp(point . X) * generator."""
    if exponential is None:
        exponential = truncated_exponential(point, n)
    if generator.is_zero():
        return generator
    if generator.degree() == 0:
        return exponential.scale(generator.coeff((0,) * generator.nvars))
    low = min(sum(m) for m in generator.terms)
    return (exponential.truncate(n - low) * generator).truncate(n)


def shift_conditions(problem: InterpolationProblem) -> list[Polynomial]:
    """All conditions moved to the origin, truncated at degree n."""
    n = problem.n
    out = []
    for cs in problem.conditions:
        exp = truncated_exponential(cs.point, n)
        out.extend(shift_condition(cs.point, g, n, exp) for g in cs.generators)
    return out


def d_invariance_violation(space: ConditionSpace) -> tuple[int, int] | None:
    """First (generator index, variable) whose derivative escapes the span, or None."""
    gens = list(space.generators)
    for i, g in enumerate(gens):
        for j in range(g.nvars):
            dg = g.diff(j)
            if not linalg.in_span(dg, gens):
                return i, j
    return None


def validate_d_invariance(space: ConditionSpace, variables: Sequence[str] | None = None) -> None:
    """Raise unless the generators are independent and closed under differentiation."""
    gens = list(space.generators)
    for k in range(1, len(gens) + 1):
        if not linalg.linearly_independent(gens[:k]):
            raise LinearDependence(k)
    bad = d_invariance_violation(space)
    if bad is not None:
        i, j = bad
        msg = None
        if variables is not None:
            msg = (f"at point {tuple(str(c) for c in space.point)}: derivative of generator "
                   f"{i + 1} with respect to {variables[j]} is not in the span")
        raise DInvarianceViolation(i, j, msg)


def derivative_closure(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """A basis of the smallest D-invariant space containing ``polys``."""
    if not polys:
        return []
    d = polys[0].nvars
    seen: set[Polynomial] = set()
    frontier = [p for p in polys if p]
    spanning = []
    while frontier:
        p = frontier.pop()
        if p in seen:
            continue
        seen.add(p)
        spanning.append(p)
        frontier.extend(q for q in (p.diff(j) for j in range(d)) if q and q not in seen)
    rows, monos = linalg.coefficient_matrix(spanning)
    red, _ = linalg.rref(rows)
    return [Polynomial(dict(zip(monos, r)), d) for r in red]


def t_matrix(conditions: Sequence[Polynomial], monomials: Sequence[Monomial]) -> list[list[Fraction]]:
    """Entries delta_0 o P_i(D) X^beta_j, i.e. beta_j! * P_i(beta_j)."""
    return [[mono_factorial(b) * p.coeff(b) for b in monomials] for p in conditions]
