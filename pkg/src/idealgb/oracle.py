"""Independent checks: multivariate division, S-pair certification, and a
Buchberger-Moeller computation of vanishing ideals.

Nothing here goes through the shift/elimination pipeline. Functionals are
evaluated by differentiating and substituting directly, and the
Buchberger-Moeller elimination keeps its own vectors.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Callable, Sequence

from .functional import InterpolationProblem, make_point
from .gbuilder import GroebnerResult
from .polyring import (Monomial, MonomialOrdering, Polynomial, mono_div, mono_divides,
                       mono_lcm, mono_mul, tick, unit)


@dataclass
class Certificate:
    spairs_checked: int = 0
    all_reduced_to_zero: bool = True
    monic: bool = True
    tails_reduced: bool = True
    minimal_leading_monomials: bool = True
    quotient_basis_ok: bool | None = None
    vanishing_checked: int = 0
    all_vanish: bool = True
    oracle_match: bool | None = None

    @property
    def certified(self) -> bool:
        return (self.all_reduced_to_zero and self.monic and self.tails_reduced
                and self.minimal_leading_monomials and self.all_vanish
                and self.quotient_basis_ok is not False and self.oracle_match is not False)

    def summary(self) -> str:
        parts = [
            f"S-pairs reduced to zero: {self.spairs_checked} checked, "
            f"{'ok' if self.all_reduced_to_zero else 'FAILED'}",
            f"monic: {'ok' if self.monic else 'FAILED'}",
            f"tails reduced: {'ok' if self.tails_reduced else 'FAILED'}",
            f"minimal leading monomials: {'ok' if self.minimal_leading_monomials else 'FAILED'}",
        ]
        if self.quotient_basis_ok is not None:
            parts.append(f"quotient basis: {'ok' if self.quotient_basis_ok else 'FAILED'}")
        if self.vanishing_checked:
            parts.append(f"vanishing: {self.vanishing_checked} pairs, "
                         f"{'ok' if self.all_vanish else 'FAILED'}")
        if self.oracle_match is not None:
            parts.append(f"Buchberger-Moeller match: {'ok' if self.oracle_match else 'FAILED'}")
        parts.append("CERTIFIED" if self.certified else "NOT CERTIFIED")
        return "\n".join(parts)

    def as_dict(self) -> dict:
        return {
            "spairs_checked": self.spairs_checked,
            "all_reduced_to_zero": self.all_reduced_to_zero,
            "monic": self.monic,
            "tails_reduced": self.tails_reduced,
            "minimal_leading_monomials": self.minimal_leading_monomials,
            "quotient_basis_ok": self.quotient_basis_ok,
            "vanishing_checked": self.vanishing_checked,
            "all_vanish": self.all_vanish,
            "oracle_match": self.oracle_match,
            "certified": self.certified,
        }


# ---------------------------------------------------------------------------
# division

def divide(f: Polynomial, divisors: Sequence[Polynomial], ordering: MonomialOrdering):
    """Multivariate division; returns (quotients, remainder).

    f = sum(q_i * d_i) + r and no term of r is divisible by any LM(d_i).
    """
    if any(g.is_zero() for g in divisors):
        raise ZeroDivisionError("division by the zero polynomial")
    d = f.nvars
    lead = [(g.leading_monomial(ordering), g.leading_coefficient(ordering)) for g in divisors]
    quotients: list[dict[Monomial, Fraction]] = [{} for _ in divisors]
    rem: dict[Monomial, Fraction] = {}
    p = f
    while p:
        m = p.leading_monomial(ordering)
        c = p.coeff(m)
        for i, (lm, lc) in enumerate(lead):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                qc = c / lc
                quotients[i][q] = quotients[i].get(q, 0) + qc
                p = p - divisors[i].mul_monomial(q, qc)
                break
        else:
            rem[m] = c
            p = p - Polynomial.monomial(m, c)
    return [Polynomial(q, d) for q in quotients], Polynomial(rem, d)


def s_polynomial(f: Polynomial, g: Polynomial, ordering: MonomialOrdering) -> Polynomial:
    a, b = f.leading_monomial(ordering), g.leading_monomial(ordering)
    lcm = mono_lcm(a, b)
    return (f.mul_monomial(mono_div(lcm, a), 1 / f.coeff(a))
            - g.mul_monomial(mono_div(lcm, b), 1 / g.coeff(b)))


def condition_value(point: Sequence, p: Polynomial, f: Polynomial) -> Fraction:
    """(p(D) f)(point), by differentiating f and substituting."""
    total = Fraction(0)
    for alpha, c in p:
        g = f
        for j, k in enumerate(alpha):
            if k:
                g = g.diff(j, k)
        if g:
            total += c * g.evaluate(point)
    return total


# ---------------------------------------------------------------------------
# certification

def is_reduced_groebner(basis: Sequence[Polynomial], ordering: MonomialOrdering,
                        problem: InterpolationProblem | None = None) -> Certificate:
    """Check that ``basis`` is a reduced Groebner basis (of the ideal of ``problem``).

    S-pairs with coprime leading monomials are skipped (first criterion).
    """
    cert = Certificate()
    basis = list(basis)
    if not basis or any(g.is_zero() for g in basis):
        cert.all_reduced_to_zero = cert.monic = False
        return cert
    lms = [g.leading_monomial(ordering) for g in basis]
    cert.monic = all(g.coeff(m) == 1 for g, m in zip(basis, lms))
    cert.minimal_leading_monomials = all(
        not mono_divides(a, b) and not mono_divides(b, a) for a, b in combinations(lms, 2))
    cert.tails_reduced = all(
        not any(mono_divides(l, m) for l in lms)
        for g, lm in zip(basis, lms) for m in g.terms if m != lm)
    for i, j in combinations(range(len(basis)), 2):
        if all(x == 0 or y == 0 for x, y in zip(lms[i], lms[j])):
            continue
        cert.spairs_checked += 1
        _, r = divide(s_polynomial(basis[i], basis[j], ordering), basis, ordering)
        if r:
            cert.all_reduced_to_zero = False
    if problem is not None:
        for point, p in problem.functionals():
            for g in basis:
                cert.vanishing_checked += 1
                if condition_value(point, p, g) != 0:
                    cert.all_vanish = False
    return cert


def standard_monomials(lms: Sequence[Monomial]) -> list[Monomial] | None:
    """Monomials outside the ideal generated by ``lms``; None if infinitely many."""
    d = len(lms[0])
    bounds = []
    for j in range(d):
        pure = [m[j] for m in lms if all(e == 0 for i, e in enumerate(m) if i != j)]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []

    def rec(prefix):
        if len(prefix) == d:
            m = tuple(prefix)
            if not any(mono_divides(l, m) for l in lms):
                out.append(m)
            return
        for e in range(bounds[len(prefix)]):
            rec(prefix + [e])

    rec([])
    return out


def is_lagrange(problem: InterpolationProblem) -> bool:
    one = Polynomial.constant(1, problem.dimension)
    return all(cs.generators == (one,) for cs in problem.conditions)


def certify(result: GroebnerResult, against_oracle: bool = False) -> Certificate:
    """Full check of a pipeline result; optionally compare with Buchberger-Moeller."""
    cert = is_reduced_groebner(result.basis, result.ordering, result.problem)
    lms = [g.leading_monomial(result.ordering) for g in result.basis]
    std = standard_monomials(lms)
    cert.quotient_basis_ok = (
        std is not None
        and sorted(std) == sorted(result.quotient_basis)
        and sorted(lms) == sorted(result.leading_monomials)
        and (result.problem is None or len(std) == result.problem.n))
    if against_oracle:
        if result.problem is None:
            raise ValueError("oracle comparison needs the problem")
        problem = result.problem
        if is_lagrange(problem):
            other = bm_vanishing_ideal([cs.point for cs in problem.conditions], problem.ordering)
        else:
            other = mmm_vanishing_ideal(problem)
        cert.oracle_match = other.same_basis(result)
    result.certificate = cert
    return cert


# ---------------------------------------------------------------------------
# Buchberger-Moeller

def _bm_core(evaluate: Callable[[Monomial], list[Fraction]], d: int,
             ordering: MonomialOrdering):
    """Walk monomials upward in the ordering, eliminating evaluation vectors.

    Returns (quotient basis monomials, [(leading monomial, tail dict)]).
    """
    stored: list[tuple[int, list[Fraction], dict[Monomial, Fraction]]] = []
    qb: list[Monomial] = []
    gens: list[tuple[Monomial, dict[Monomial, Fraction]]] = []
    zero = (0,) * d
    heap = [(ordering.key(zero), zero)]
    queued = {zero}
    while heap:
        _, t = heapq.heappop(heap)
        if any(mono_divides(lm, t) for lm, _ in gens):
            continue
        v = evaluate(t)
        comb: dict[Monomial, Fraction] = {t: Fraction(1)}
        for piv, vec, c in stored:
            a = v[piv]
            if a == 0:
                continue
            f = a / vec[piv]
            v = [x - f * y for x, y in zip(v, vec)]
            for m, cm in c.items():
                comb[m] = comb.get(m, 0) - f * cm
            tick(len(v) + len(c))
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            gens.append((t, {m: c for m, c in comb.items() if c != 0}))
            continue
        stored.append((piv, v, comb))
        qb.append(t)
        for j in range(d):
            u = mono_mul(t, unit(j, d))
            if u not in queued:
                queued.add(u)
                heapq.heappush(heap, (ordering.key(u), u))
    return qb, gens


def _finish(qb, gens, d, ordering, problem) -> GroebnerResult:
    gens = sorted(gens, key=lambda g: ordering.key(g[0]))
    basis = [Polynomial(c, d) for _, c in gens]
    return GroebnerResult(ordering, ordering.sorted(qb), [lm for lm, _ in gens], basis, problem)


def bm_vanishing_ideal(points: Sequence[Sequence], ordering: MonomialOrdering,
                       variables: Sequence[str] = ()) -> GroebnerResult:
    """Reduced Groebner basis of the ideal of ``points`` (Buchberger-Moeller)."""
    pts = [make_point(p) for p in points]
    d = ordering.nvars

    def evaluate(t: Monomial) -> list[Fraction]:
        tick(len(pts))
        return [prod((x ** e for x, e in zip(p, t)), start=Fraction(1)) for p in pts]

    qb, gens = _bm_core(evaluate, d, ordering)
    problem = InterpolationProblem.lagrange(pts, ordering, variables)
    return _finish(qb, gens, d, ordering, problem)


def mmm_vanishing_ideal(problem: InterpolationProblem) -> GroebnerResult:
    """Same walk with general functionals (p(D) f)(theta) in place of point values.

    Valid when every condition space is closed under differentiation.
    """
    d = problem.dimension
    functionals = problem.functionals()

    def evaluate(t: Monomial) -> list[Fraction]:
        x = Polynomial.monomial(t)
        return [condition_value(point, p, x) for point, p in functionals]

    qb, gens = _bm_core(evaluate, d, problem.ordering)
    return _finish(qb, gens, d, problem.ordering, problem)
