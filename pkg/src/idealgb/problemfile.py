"""JSON problem files and result documents.

Problem file::

    {"variables": ["x", "y"],
     "ordering": {"kind": "grlex", "variable_priority": ["x", "y"]},
     "conditions": [{"point": [0, 0], "functionals": ["1", "x", "1/2*x^2 + y"]},
                    {"point": ["1", "2"]}]}

``functionals`` defaults to ``["1"]`` (plain point evaluation).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import PolynomialSyntaxError
from .functional import ConditionSpace, InterpolationProblem
from .gbuilder import GroebnerResult
from .polyring import (MonomialOrdering, format_monomial, format_poly, format_rational,
                       parse_poly)


class ProblemFileError(ValueError):
    """Malformed problem or result document (maps to exit code 1)."""


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ProblemFileError(f"{where}: expected an integer or 'p/q' string, got {value!r}")
    try:
        return Fraction(value) if isinstance(value, int) else Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise ProblemFileError(f"{where}: not a rational number: {value!r}") from None


def _field(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ProblemFileError(f"{where}: missing field {key!r}")
    return doc[key]


def parse_ordering(doc: Any, variables: list[str]) -> MonomialOrdering:
    kind = _field(doc, "kind", "ordering")
    prio = doc.get("variable_priority", variables)
    if not isinstance(prio, list) or sorted(prio) != sorted(variables) or len(set(prio)) != len(prio):
        raise ProblemFileError("ordering.variable_priority must be a permutation of the variables")
    try:
        return MonomialOrdering(kind, tuple(variables.index(v) for v in prio))
    except ValueError as exc:
        raise ProblemFileError(f"ordering: {exc}") from None


def ordering_doc(ordering: MonomialOrdering, variables) -> dict:
    return {"kind": ordering.kind, "variable_priority": [variables[i] for i in ordering.priority]}


def _variables(doc) -> list[str]:
    variables = _field(doc, "variables", "problem")
    if (not isinstance(variables, list) or not variables
            or not all(isinstance(v, str) for v in variables)):
        raise ProblemFileError("variables: expected a nonempty list of names")
    if len(set(variables)) != len(variables):
        raise ProblemFileError("variables: names must be unique")
    return variables


def _poly(text, variables, where: str):
    if not isinstance(text, str):
        raise ProblemFileError(f"{where}: expected a polynomial string")
    try:
        return parse_poly(text, variables)
    except PolynomialSyntaxError as exc:
        raise ProblemFileError(f"{where}: {exc.message} (line 1, column {exc.pos + 1})") from None
    except ValueError as exc:
        raise ProblemFileError(f"{where}: {exc}") from None


def problem_from_doc(doc: Any) -> InterpolationProblem:
    """Build a problem; raises ProblemFileError or InvalidProblem subclasses."""
    variables = _variables(doc)
    ordering = parse_ordering(_field(doc, "ordering", "problem"), variables)
    conds = _field(doc, "conditions", "problem")
    if not isinstance(conds, list):
        raise ProblemFileError("conditions: expected a list")
    spaces = []
    for i, c in enumerate(conds):
        where = f"conditions[{i}]"
        point = _field(c, "point", where)
        if not isinstance(point, list) or len(point) != len(variables):
            raise ProblemFileError(f"{where}.point: expected {len(variables)} coordinates")
        pt = tuple(_rational(v, f"{where}.point[{k}]") for k, v in enumerate(point))
        funcs = c.get("functionals", ["1"])
        if not isinstance(funcs, list) or not funcs:
            raise ProblemFileError(f"{where}.functionals: expected a nonempty list")
        gens = tuple(_poly(f, variables, f"{where}.functionals[{k}]") for k, f in enumerate(funcs))
        spaces.append(ConditionSpace(pt, gens))
    return InterpolationProblem(ordering, tuple(spaces), tuple(variables))


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(
            f"{path}: invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None


def load_problem(path: str) -> InterpolationProblem:
    return problem_from_doc(load_json(path))


def problem_to_doc(problem: InterpolationProblem) -> dict:
    v = problem.variables
    return {
        "variables": list(v),
        "ordering": ordering_doc(problem.ordering, v),
        "conditions": [
            {"point": [format_rational(c) for c in cs.point],
             "functionals": [format_poly(g, problem.ordering, v) for g in cs.generators]}
            for cs in problem.conditions
        ],
    }


def result_to_doc(result: GroebnerResult, variables) -> dict:
    o = result.ordering
    doc = {
        "variables": list(variables),
        "ordering": ordering_doc(o, variables),
        "quotient_basis": [format_monomial(m, variables) for m in result.quotient_basis],
        "leading_monomials": [format_monomial(m, variables) for m in result.leading_monomials],
        "basis": [format_poly(g, o, variables) for g in result.basis],
        "certificate": result.certificate.as_dict() if result.certificate is not None else None,
    }
    if result.problem is not None:
        doc["problem"] = problem_to_doc(result.problem)
    return doc


def result_from_doc(doc: Any) -> GroebnerResult:
    """Rebuild a result (basis, monomial lists, optional problem) from JSON."""
    variables = _variables(doc)
    ordering = parse_ordering(_field(doc, "ordering", "result"), variables)

    def monos(key):
        items = _field(doc, key, "result")
        if not isinstance(items, list):
            raise ProblemFileError(f"{key}: expected a list")
        out = []
        for k, s in enumerate(items):
            p = _poly(s, variables, f"{key}[{k}]")
            if len(p) != 1 or next(iter(p.terms.values())) != 1:
                raise ProblemFileError(f"{key}[{k}]: expected a monomial")
            out.append(next(iter(p.terms)))
        return out

    basis_doc = _field(doc, "basis", "result")
    if not isinstance(basis_doc, list):
        raise ProblemFileError("basis: expected a list")
    basis = [_poly(s, variables, f"basis[{k}]") for k, s in enumerate(basis_doc)]
    problem = problem_from_doc(doc["problem"]) if doc.get("problem") is not None else None
    return GroebnerResult(ordering, monos("quotient_basis"), monos("leading_monomials"), basis, problem)
