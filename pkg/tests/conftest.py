import random
import sys
from fractions import Fraction

import hypothesis
import pytest
from hypothesis import strategies as st

from idealgb.functional import ConditionSpace, InterpolationProblem, derivative_closure
from idealgb.polyring import MonomialOrdering, Polynomial, parse_poly

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=500)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


@pytest.fixture
def grlex_xy():
    # grlex(y < x)
    return MonomialOrdering("grlex", (0, 1))


@pytest.fixture
def grlex_xyz():
    # grlex(z < y < x)
    return MonomialOrdering("grlex", (0, 1, 2))


def P(text, variables=XY):
    return parse_poly(text, variables)


@st.composite
def orderings(draw, d=None):
    if d is None:
        d = draw(st.integers(1, 4))
    kind = draw(st.sampled_from(["lex", "grlex", "grevlex"]))
    prio = draw(st.permutations(range(d)))
    return MonomialOrdering(kind, tuple(prio))


def monomials(d, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * d)


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def polynomials(draw, d, max_terms=5, max_exp=3):
    terms = draw(st.lists(st.tuples(monomials(d, max_exp), rationals), max_size=max_terms))
    return Polynomial(terms, d)


def random_poly(rng: random.Random, d: int, terms: int = 4, max_deg: int = 3) -> Polynomial:
    out = []
    for _ in range(terms):
        deg = rng.randint(0, max_deg)
        m = [0] * d
        for _ in range(deg):
            m[rng.randrange(d)] += 1
        out.append((tuple(m), rng.randint(-9, 9)))
    return Polynomial(out, d)


def random_ordering(rng: random.Random, d: int, kind: str | None = None) -> MonomialOrdering:
    prio = list(range(d))
    rng.shuffle(prio)
    return MonomialOrdering(kind or rng.choice(["lex", "grlex", "grevlex"]), tuple(prio))


def random_points(rng: random.Random, d: int, n: int, radius: int = 5):
    pts, seen = [], set()
    while len(pts) < n:
        p = tuple(rng.randint(-radius, radius) for _ in range(d))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


def random_hermite_problem(rng: random.Random, d: int, max_n: int = 8, ordering=None):
    """Random points, each carrying the derivative closure of a random polynomial."""
    ordering = ordering or random_ordering(rng, d)
    while True:
        k = rng.randint(1, 3)
        spaces = []
        for pt in random_points(rng, d, k, radius=3):
            g = random_poly(rng, d, terms=rng.randint(1, 3), max_deg=rng.randint(0, 2))
            gens = derivative_closure([g]) if g else [Polynomial.constant(1, d)]
            spaces.append(ConditionSpace(pt, tuple(gens)))
        if sum(s.size for s in spaces) <= max_n:
            return InterpolationProblem(ordering, tuple(spaces))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
