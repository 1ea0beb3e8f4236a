"""Small exact linear algebra over Fractions (rank, solve, span tests)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial, support_union


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``a x = b``; raises if singular."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def coefficient_matrix(ps: Sequence[Polynomial], monos=None):
    """Rows of coefficients of ``ps`` over a common column order."""
    if monos is None:
        monos = sorted(support_union(ps))
    return [[p.coeff(m) for m in monos] for p in ps], list(monos)


def poly_rank(ps: Sequence[Polynomial]) -> int:
    if not ps:
        return 0
    rows, _ = coefficient_matrix(ps)
    return rank(rows)


def in_span(q: Polynomial, ps: Sequence[Polynomial]) -> bool:
    if q.is_zero():
        return True
    return poly_rank(list(ps) + [q]) == poly_rank(ps)


def linearly_independent(ps: Sequence[Polynomial]) -> bool:
    return poly_rank(ps) == len(ps)


def same_span(ps: Sequence[Polynomial], qs: Sequence[Polynomial]) -> bool:
    r = poly_rank(list(ps) + list(qs))
    return r == poly_rank(ps) == poly_rank(qs)
