import random
from fractions import Fraction

import pytest

from conftest import XY, P, random_hermite_problem, random_ordering, random_points
from idealgb.errors import DInvarianceViolation, DuplicatePoints, LinearDependence
from idealgb.functional import ConditionSpace, InterpolationProblem, apply_functional, t_matrix
from idealgb.gbuilder import groebner_hermite, groebner_lagrange, interpolate
from idealgb.linalg import rank
from idealgb.oracle import bm_vanishing_ideal, condition_value, is_reduced_groebner
from idealgb.polyring import MonomialOrdering, Polynomial
from idealgb.staircase import is_minimal_basis

GRLEX = MonomialOrdering("grlex", (0, 1))
LAGRANGE_POINTS = [(0, 0), (1, 2), (2, 1)]


def hermite_problem():
    return InterpolationProblem(GRLEX, (
        ConditionSpace((0, 0), (P("1"), P("x"), P("1/2*x^2 + y"))),
        ConditionSpace((1, 2), (P("1"), P("x"))),
    ), XY)


def test_lagrange_golden():
    r = groebner_lagrange(LAGRANGE_POINTS, GRLEX, XY)
    assert r.quotient_basis == [(0, 0), (0, 1), (1, 0)]
    assert r.leading_monomials == [(0, 2), (1, 1), (2, 0)]
    assert r.basis == [P("y^2 + 2/3*x - 7/3*y"), P("x*y - 2/3*x - 2/3*y"), P("x^2 - 7/3*x + 2/3*y")]


def test_hermite_golden():
    r = groebner_hermite(hermite_problem())
    assert set(r.quotient_basis) == {(0, 0), (1, 0), (0, 1), (0, 2), (1, 1)}
    assert set(r.leading_monomials) == {(0, 3), (1, 2), (2, 0)}
    assert set(r.basis) == {P("y^3 - 2*y^2"), P("x*y^2 - 2*x*y"), P("x^2 - x*y + 3/4*y^2 - y")}


def test_single_point_at_origin():
    r = groebner_lagrange([(0, 0)], GRLEX)
    assert r.basis == [P("y"), P("x")]
    assert r.quotient_basis == [(0, 0)]


def test_origin_first_derivatives():
    prob = InterpolationProblem(GRLEX, (ConditionSpace((0, 0), (P("1"), P("x"), P("y"))),), XY)
    r = groebner_hermite(prob)
    assert r.quotient_basis == [(0, 0), (0, 1), (1, 0)]
    assert r.basis == [P("y^2"), P("x*y"), P("x^2")]
    for g in r.basis:
        for f in prob.conditions[0].generators:
            assert apply_functional(f, g) == 0
    assert rank(t_matrix(list(prob.conditions[0].generators), r.quotient_basis)) == 3


def test_lagrange_as_hermite():
    prob = InterpolationProblem.lagrange(LAGRANGE_POINTS, GRLEX, XY)
    assert groebner_hermite(prob).same_basis(groebner_lagrange(LAGRANGE_POINTS, GRLEX))


def test_errors():
    with pytest.raises(DuplicatePoints):
        groebner_lagrange([(0, 0), (1, 1), (0, 0)], GRLEX)
    bad = InterpolationProblem(GRLEX, (ConditionSpace((0, 0), (P("x^2"),)),))
    with pytest.raises(DInvarianceViolation):
        groebner_hermite(bad)
    dep = InterpolationProblem(GRLEX, (ConditionSpace((0, 0), (P("1"), P("x"), P("x + 1"))),))
    with pytest.raises(LinearDependence):
        groebner_hermite(dep, check_d_invariance=False)


def test_oracle_agreement_random():
    rng = random.Random(17)
    for _ in range(40):
        d = rng.choice([2, 3])
        o = random_ordering(rng, d)
        pts = random_points(rng, d, 5)
        assert groebner_lagrange(pts, o).same_basis(bm_vanishing_ideal(pts, o))


def test_vanishing_by_substitution():
    rng = random.Random(8)
    for _ in range(30):
        d = rng.randint(1, 3)
        pts = random_points(rng, d, rng.randint(1, 7))
        r = groebner_lagrange(pts, random_ordering(rng, d))
        for g in r.basis:
            assert all(g.evaluate(p) == 0 for p in pts)
        assert len(r.quotient_basis) == len(pts)


def test_hermite_random_annihilated_and_certified():
    rng = random.Random(31)
    for _ in range(30):
        prob = random_hermite_problem(rng, rng.choice([2, 3]))
        r = groebner_hermite(prob)
        assert len(r.quotient_basis) == prob.n
        for point, p in prob.functionals():
            assert all(condition_value(point, p, g) == 0 for g in r.basis)
        assert is_reduced_groebner(r.basis, r.ordering, prob).certified


def test_shuffled_conditions_same_basis():
    rng = random.Random(12)
    for _ in range(20):
        prob = random_hermite_problem(rng, 2)
        conds = list(prob.conditions)
        rng.shuffle(conds)
        conds = [ConditionSpace(c.point, tuple(rng.sample(c.generators, len(c.generators))))
                 for c in conds]
        other = InterpolationProblem(prob.ordering, tuple(conds))
        assert groebner_hermite(prob).same_basis(groebner_hermite(other))


def test_quotient_basis_is_minimal_for_each_priority():
    rng = random.Random(21)
    for _ in range(8):
        pts = random_points(rng, 2, rng.randint(2, 5), radius=3)
        for kind in ("lex", "grlex", "grevlex"):
            for prio in ((0, 1), (1, 0)):
                o = MonomialOrdering(kind, prio)
                r = groebner_lagrange(pts, o)
                assert is_minimal_basis(o, r.quotient_basis, list(r.reduced.polys))


def test_interpolate():
    prob = InterpolationProblem.lagrange(LAGRANGE_POINTS, GRLEX, XY)
    assert interpolate(prob, [0, 0, 0]).is_zero()
    assert interpolate(prob, [1, 1, 1]) == P("1")
    card = interpolate(prob, [0, 1, 0])
    assert [card.evaluate(p) for p in LAGRANGE_POINTS] == [0, 1, 0]
    r = groebner_lagrange(LAGRANGE_POINTS, GRLEX)
    assert set(card.terms) <= set(r.quotient_basis)


def test_interpolate_hermite_values():
    prob = hermite_problem()
    values = [Fraction(k, 3) - 1 for k in range(prob.n)]
    f = interpolate(prob, values)
    got = [condition_value(pt, p, f) for pt, p in prob.functionals()]
    assert got == values


def test_d_invariance_can_be_skipped():
    prob = InterpolationProblem(GRLEX, (ConditionSpace((0, 0), (P("1"), P("y"))),
                                        ConditionSpace((1, 1), (P("1"),))), XY)
    r = groebner_hermite(prob, check_d_invariance=False)
    assert len(r.quotient_basis) == 3
    assert isinstance(r.basis[0], Polynomial)
