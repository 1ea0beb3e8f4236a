import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import XY, P, monomials, random_poly
from idealgb.errors import DInvarianceViolation, DuplicatePoints, InvalidProblem, LinearDependence
from idealgb.functional import (ConditionSpace, InterpolationProblem, apply_functional,
                                d_invariance_violation, derivative_closure, shift_condition,
                                shift_conditions,
                                truncated_exponential, validate_d_invariance)
from idealgb.linalg import in_span, linearly_independent
from idealgb.polyring import MonomialOrdering, Polynomial, mono_factorial, monomials_up_to
from oracles import derivative_at_origin, eval_poly, exp_coefficient

GRLEX = MonomialOrdering("grlex", (0, 1))


def test_apply_functional_examples():
    assert apply_functional(P("x^2"), P("x*y")) == 0
    assert apply_functional(P("x^2"), P("x^2")) == 2
    p = P("1/2*x^2 + y")
    for f in (P("x^2"), P("y")):
        assert apply_functional(p, f) == 1
        assert apply_functional(p, f) == derivative_at_origin(dict(p.terms), dict(f.terms))


@given(st.integers(1, 4).flatmap(lambda d: monomials(d, 3)))
def test_duality_identity(alpha):
    x = Polynomial.monomial(alpha)
    assert apply_functional(x, x) == mono_factorial(alpha)


def test_truncated_exponential_examples():
    assert truncated_exponential((0, 0), 7) == P("1")
    lin = P("x + 2*y")
    expected = P("1") + lin + (lin * lin).scale(Fraction(1, 2)) + (lin * lin * lin).scale(Fraction(1, 6))
    assert truncated_exponential((1, 2), 3) == expected


@pytest.mark.parametrize("theta", [(1, 2), (Fraction(-1, 2), 3), (0, -4)])
def test_truncated_exponential_closed_form(theta):
    n = 5
    e = truncated_exponential(theta, n)
    for alpha in monomials_up_to(2, n + 2):
        want = exp_coefficient(theta, alpha) if sum(alpha) <= n else 0
        assert e.coeff(alpha) == want


def test_taylor_identity_small():
    rng = random.Random(3)
    for _ in range(60):
        d = rng.randint(1, 3)
        theta = tuple(rng.randint(-3, 3) for _ in range(d))
        f = random_poly(rng, d, terms=5, max_deg=4)
        n = max(f.degree(), 0)
        assert apply_functional(truncated_exponential(theta, n), f) == eval_poly(dict(f.terms), theta)


def test_shift_lagrange_example():
    prob = InterpolationProblem.lagrange([(0, 0), (1, 2), (2, 1)], GRLEX, XY)
    p1, p2, p3 = shift_conditions(prob)
    assert p1 == P("1")
    assert p2 == P("1/6*x^3 + x^2*y + 2*x*y^2 + 4/3*y^3 + 1/2*x^2 + 2*x*y + 2*y^2 + x + 2*y + 1")
    assert p3 == P("4/3*x^3 + 2*x^2*y + x*y^2 + 1/6*y^3 + 2*x^2 + 2*x*y + 1/2*y^2 + 2*x + y + 1")


def test_shift_hermite_derivative_condition():
    x = P("x")
    prob = InterpolationProblem(GRLEX, (
        ConditionSpace((0, 0), (P("1"), x, P("1/2*x^2 + y"))),
        ConditionSpace((1, 2), (P("1"), x)),
    ), XY)
    shifted = shift_conditions(prob)
    assert len(shifted) == prob.n == 5
    assert shifted[:3] == [P("1"), x, P("1/2*x^2 + y")]
    lin = P("x + 2*y")
    series = sum(((lin ** j) * x).scale(Fraction(1, mono_factorial((j,))))
                 for j in range(5)) + Polynomial.zero(2)
    assert shifted[4] == series.truncate(5)
    assert shifted[3] == truncated_exponential((1, 2), 5)


def test_shift_single_origin():
    prob = InterpolationProblem.lagrange([(0, 0)], GRLEX)
    assert shift_conditions(prob) == [P("1")]


def test_shift_counts_and_degrees():
    rng = random.Random(11)
    for _ in range(20):
        pts = list({(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)})
        prob = InterpolationProblem.lagrange(pts, GRLEX)
        out = shift_conditions(prob)
        assert len(out) == prob.n
        assert all(p.degree() <= prob.n for p in out)


def test_shifted_functional_equals_direct_evaluation():
    # delta_theta o P(D) f == delta_0 o lambda_n(exp(theta X) P)(D) f for deg f <= n
    rng = random.Random(5)
    for _ in range(30):
        theta = (rng.randint(-2, 2), rng.randint(-2, 2))
        gen = random_poly(rng, 2, terms=3, max_deg=2)
        if not gen:
            continue
        f = random_poly(rng, 2, terms=4, max_deg=4)
        prob = InterpolationProblem(GRLEX, (ConditionSpace(theta, (gen,)),))
        n = 6
        shifted = shift_condition(theta, gen, n)
        direct = Fraction(0)
        for alpha, c in gen:
            g = f
            for j, k in enumerate(alpha):
                g = g.diff(j, k)
            direct += c * eval_poly(dict(g.terms), theta)
        assert apply_functional(shifted, f) == direct
        assert prob.n == 1


def test_d_invariance():
    validate_d_invariance(ConditionSpace((0, 0), (P("1"), P("x"), P("1/2*x^2 + y"))))
    validate_d_invariance(ConditionSpace((0, 0), (P("1"),)))
    space = ConditionSpace((0, 0), (P("x^2"),))
    assert d_invariance_violation(space) == (0, 0)
    with pytest.raises(DInvarianceViolation) as exc:
        validate_d_invariance(space, XY)
    assert exc.value.generator_index == 0 and exc.value.variable == 0
    assert "x" in str(exc.value)


def test_d_invariance_rejects_dependent_generators():
    with pytest.raises(LinearDependence):
        validate_d_invariance(ConditionSpace((0, 0), (P("1"), P("2"))))


def test_derivative_closure_is_invariant():
    rng = random.Random(2)
    for _ in range(20):
        g = random_poly(rng, 2, terms=3, max_deg=3)
        if not g:
            continue
        basis = derivative_closure([g])
        assert linearly_independent(basis)
        assert in_span(g, basis)
        assert d_invariance_violation(ConditionSpace((0, 0), tuple(basis))) is None


def test_problem_validation():
    with pytest.raises(InvalidProblem, match="no conditions"):
        InterpolationProblem(GRLEX, ())
    with pytest.raises(DuplicatePoints):
        InterpolationProblem.lagrange([(1, 2), (1, 2)], GRLEX)
