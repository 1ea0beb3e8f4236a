"""Lower sets, their corners, and the set ordering on monomial bases."""

from __future__ import annotations

from itertools import combinations
from typing import Collection, Iterable, Sequence

from . import linalg
from .errors import MalformedConditions
from .functional import t_matrix
from .polyring import Monomial, MonomialOrdering, Polynomial, mono_divides, monomials_up_to
from .rcrb import ReverseReducedBasis

# exhaustive minimality search limits
MAX_SEARCH_N = 6
MAX_SEARCH_D = 3


def _predecessors(m: Monomial):
    for j, e in enumerate(m):
        if e > 0:
            yield m[:j] + (e - 1,) + m[j + 1:]


def lower_set_violation(monos: Collection[Monomial]) -> Monomial | None:
    s = set(monos)
    for m in s:
        for p in _predecessors(m):
            if p not in s:
                return m
    return None


def is_lower_set(monos: Collection[Monomial]) -> bool:
    return lower_set_violation(monos) is None


def quotient_basis(basis: ReverseReducedBasis) -> frozenset[Monomial]:
    """The least monomials of a reverse-reduced basis, checked to form a lower set."""
    qb = frozenset(basis.least_monomials)
    bad = lower_set_violation(qb)
    if bad is not None:
        raise MalformedConditions(bad)
    return qb


def corners(qb: Collection[Monomial]) -> frozenset[Monomial]:
    """Divisibility-minimal monomials outside the lower set ``qb``."""
    qb = frozenset(qb)
    if not qb:
        raise ValueError("empty lower set")
    d = len(next(iter(qb)))
    border = {b[:j] + (b[j] + 1,) + b[j + 1:] for b in qb for j in range(d)} - qb
    # every predecessor of a corner lies in qb
    return frozenset(m for m in border if all(p in qb for p in _predecessors(m)))


def in_monomial_ideal(m: Monomial, generators: Iterable[Monomial]) -> bool:
    return any(mono_divides(g, m) for g in generators)


def compare_sets(ordering: MonomialOrdering, t1: Collection[Monomial], t2: Collection[Monomial]) -> int:
    """-1 if t1 < t2, 1 if t1 > t2, 0 if equal.

    t1 < t2 when the largest element of t1 - t2 is smaller than the largest
    element of t2 - t1.
    """
    a, b = set(t1) - set(t2), set(t2) - set(t1)
    if not a and not b:
        return 0
    # with one side empty, the sets are nested and the sizes differ
    assert a and b, "sets of different size are not comparable"
    return ordering.compare(ordering.max(a), ordering.max(b))


def is_interpolation_basis(monos: Sequence[Monomial], conditions: Sequence[Polynomial]) -> bool:
    """True iff the functional-vs-monomial matrix is square and nonsingular."""
    monos = list(monos)
    if len(monos) != len(conditions) or len(set(monos)) != len(monos):
        return False
    return linalg.rank(t_matrix(conditions, monos)) == len(monos)


def is_minimal_basis(ordering: MonomialOrdering, qb: Collection[Monomial],
                     conditions: Sequence[Polynomial]) -> bool:
    """Exhaustive check that ``qb`` is the least interpolation monomial basis.

    Only for tiny problems (n <= 6, d <= 3): every n-subset of monomials of
    degree <= n that lies below max(qb) is tried.
    """
    qb = list(qb)
    n = len(conditions)
    d = len(qb[0])
    if n > MAX_SEARCH_N or d > MAX_SEARCH_D:
        raise ValueError(f"exhaustive search limited to n <= {MAX_SEARCH_N}, d <= {MAX_SEARCH_D}")
    if not is_interpolation_basis(qb, conditions):
        return False
    top = ordering.max(qb)
    # a set containing anything above max(qb) cannot precede qb
    pool = [m for m in monomials_up_to(d, n) if ordering.compare(m, top) <= 0]
    target = set(qb)
    for cand in combinations(pool, n):
        if set(cand) == target:
            continue
        if compare_sets(ordering, cand, target) < 0 and is_interpolation_basis(cand, conditions):
            return False
    return True


def minimal_basis_bruteforce(ordering: MonomialOrdering, conditions: Sequence[Polynomial],
                             degree: int) -> frozenset[Monomial]:
    """Least nonsingular n-subset among monomials of degree <= ``degree``."""
    n = len(conditions)
    d = conditions[0].nvars
    best = None
    for cand in combinations(monomials_up_to(d, degree), n):
        if is_interpolation_basis(cand, conditions):
            if best is None or compare_sets(ordering, cand, best) < 0:
                best = frozenset(cand)
    if best is None:
        raise ValueError("no interpolation monomial basis in range")
    return best
