"""Least-monomial elimination.

Turns linearly independent polynomials into a basis of the same span in
which each member's least monomial occurs in no other member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, LinearDependence
from .polyring import Monomial, MonomialOrdering, Polynomial


@dataclass(frozen=True)
class ReverseReducedBasis:
    polys: tuple[Polynomial, ...]
    least_monomials: tuple[Monomial, ...]

    def pivot(self, i: int) -> Fraction:
        """Coefficient of polys[i] at its least monomial."""
        return self.polys[i].coeff(self.least_monomials[i])

    def __len__(self) -> int:
        return len(self.polys)


def reverse_reduce(ps: Sequence[Polynomial], ordering: MonomialOrdering) -> ReverseReducedBasis:
    """Sweep k = 1..n: take lm of P_k and clear that monomial from every other P_j.

    P_j <- P_j - (P_j[beta_k] / P_k[beta_k]) P_k. Coefficients are kept raw
    (no normalisation). Raises :class:`LinearDependence` with the 1-based
    step when some P_k has been eliminated to zero.
    """
    polys = list(ps)
    if not polys:
        raise ValueError("need at least one polynomial")
    d = polys[0].nvars
    if any(p.nvars != d for p in polys):
        raise DimensionMismatch("polynomials differ in dimension")
    lms: list[Monomial] = []
    for k, pk in enumerate(polys):
        if pk.is_zero():
            raise LinearDependence(k + 1)
        beta = pk.least_monomial(ordering)
        pivot = pk.coeff(beta)
        assert pivot != 0
        for j in range(len(polys)):
            if j == k:
                continue
            c = polys[j].coeff(beta)
            if c:
                polys[j] = polys[j].axpy(-c / pivot, pk)
        lms.append(beta)
    return ReverseReducedBasis(tuple(polys), tuple(lms))


def is_reverse_reduced(ps: Sequence[Polynomial], ordering: MonomialOrdering) -> bool:
    """Independent, and lm(P_i) does not occur in any P_j with j != i."""
    return _reduced(ps, ordering, least=True)


def is_complete_reduced(ps: Sequence[Polynomial], ordering: MonomialOrdering) -> bool:
    """Independent, and LM(P_i) does not occur in any P_j with j != i."""
    return _reduced(ps, ordering, least=False)


def _reduced(ps, ordering, least: bool) -> bool:
    ps = list(ps)
    if any(p.is_zero() for p in ps) or not linalg.linearly_independent(ps):
        return False
    for i, p in enumerate(ps):
        m = p.least_monomial(ordering) if least else p.leading_monomial(ordering)
        if any(q.coeff(m) for j, q in enumerate(ps) if j != i):
            return False
    return True
