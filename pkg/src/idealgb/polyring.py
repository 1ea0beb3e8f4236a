"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of nonnegative ints (exponent vectors). A
:class:`Polynomial` maps exponent vectors to nonzero :class:`~fractions.Fraction`
coefficients and is immutable. Everything ordering-sensitive takes a
:class:`MonomialOrdering` explicitly, so the same polynomial can be looked at
under several orderings.
"""

from __future__ import annotations

import contextlib
import contextvars
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import DimensionMismatch, PolynomialSyntaxError, UnknownVariable

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

ORDERING_KINDS = ("lex", "grlex", "grevlex")


# ---------------------------------------------------------------------------
# operation counting (used by the benchmark)

_op_counter: contextvars.ContextVar[list[int] | None] = contextvars.ContextVar(
    "idealgb_op_counter", default=None
)


def tick(k: int = 1) -> None:
    """Record ``k`` exact-arithmetic coefficient operations, if counting."""
    box = _op_counter.get()
    if box is not None:
        box[0] += k


@contextlib.contextmanager
def count_ops() -> Iterator[list[int]]:
    """Count coefficient operations inside the block.

    Yields a one-element list whose entry holds the running count.
    """
    box = [0]
    token = _op_counter.set(box)
    try:
        yield box
    finally:
        _op_counter.reset(token)


# ---------------------------------------------------------------------------
# exponent vectors

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff X^a divides X^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_factorial(a: Monomial) -> int:
    """alpha! = alpha_1! * ... * alpha_d!"""
    return prod(factorial(e) for e in a)


def unit(j: int, d: int) -> Monomial:
    """The exponent vector of the j-th variable (0-based)."""
    return tuple(1 if i == j else 0 for i in range(d))


def monomials_up_to(d: int, degree: int) -> list[Monomial]:
    """All exponent vectors in ``d`` variables of total degree <= ``degree``."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, remaining: int) -> None:
        if remaining == 1:
            for e in range(left + 1):
                out.append(tuple(prefix + [e]))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, remaining - 1)

    if d == 0:
        return [()]
    rec([], degree, d)
    return out


# ---------------------------------------------------------------------------
# orderings

@dataclass(frozen=True)
class MonomialOrdering:
    """lex, grlex or grevlex with an explicit variable priority.

    ``priority`` lists variable indices from highest to lowest, so
    grlex(y < x) over variables (x, y) is ``MonomialOrdering("grlex", (0, 1))``.
    """

    kind: str
    priority: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ORDERING_KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}")
        object.__setattr__(self, "priority", tuple(self.priority))
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError(f"priority {self.priority} is not a permutation")

    @classmethod
    def default(cls, kind: str, d: int) -> MonomialOrdering:
        return cls(kind, tuple(range(d)))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, a: Monomial):
        """Sort key: ``key(a) < key(b)`` iff a precedes b."""
        p = tuple(a[i] for i in self.priority)
        if self.kind == "lex":
            return p
        if self.kind == "grlex":
            return (sum(p), p)
        return (sum(p), tuple(-e for e in reversed(p)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a is smaller than, equal to or larger than b."""
        if len(a) != len(b):
            raise DimensionMismatch(f"monomials {a} and {b} differ in length")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self.key)

    def min(self, monos: Iterable[Monomial]) -> Monomial:
        return min(monos, key=self.key)

    def sorted(self, monos: Iterable[Monomial], reverse: bool = False) -> list[Monomial]:
        return sorted(monos, key=self.key, reverse=reverse)

    def describe(self, variables: Sequence[str]) -> str:
        names = " > ".join(variables[i] for i in self.priority)
        return f"{self.kind}({names})"


def compare(ordering: MonomialOrdering, a: Monomial, b: Monomial) -> int:
    return ordering.compare(a, b)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
                 nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            mono = tuple(mono)
            if nvars is None:
                nvars = len(mono)
            elif len(mono) != nvars:
                raise DimensionMismatch(f"monomial {mono} has length != {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(c)
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self._nvars = nvars
        self._terms = {m: acc[m] for m in sorted(acc) if acc[m] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> Polynomial:
        # caller guarantees nonzero Fraction values and correct lengths
        p = cls.__new__(cls)
        p._nvars = nvars
        p._terms = {m: terms[m] for m in sorted(terms)}
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, mono: Monomial, c: Scalar = 1) -> Polynomial:
        return cls({tuple(mono): c}, len(mono))

    @classmethod
    def variable(cls, j: int, nvars: int) -> Polynomial:
        return cls.monomial(unit(j, nvars))

    # -- basic access

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    __getitem__ = coeff

    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self._nvars)]
        return f"Polynomial({format_poly(self, MonomialOrdering.default('grlex', self._nvars), names)!r})"

    # -- arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise DimensionMismatch(
                    f"polynomials in {self._nvars} and {other._nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._nvars)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        return self.axpy(1, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self._nvars)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        return self.axpy(-1, other)

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def axpy(self, a: Scalar, other: Polynomial) -> Polynomial:
        """``self + a * other`` in one pass."""
        other = self._coerce(other)
        a = Fraction(a)
        if a == 0:
            return self
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = terms.get(m, 0) + a * c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        tick(len(other._terms))
        return Polynomial._raw(terms, self._nvars)

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self._nvars)
        tick(len(self._terms))
        return Polynomial._raw({m: c * v for m, v in self._terms.items()}, self._nvars)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        tick(len(self._terms) * len(other._terms))
        return Polynomial._raw({m: c for m, c in terms.items() if c}, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self._nvars)
        for _ in range(k):
            result = result * self
        return result

    def mul_monomial(self, mono: Monomial, c: Scalar = 1) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw({mono_mul(m, mono): c * v for m, v in self._terms.items()},
                               self._nvars)

    def truncate(self, n: int) -> Polynomial:
        """Drop every term of total degree > n."""
        return Polynomial._raw({m: c for m, c in self._terms.items() if sum(m) <= n},
                               self._nvars)

    def diff(self, j: int, times: int = 1) -> Polynomial:
        """Partial derivative with respect to variable ``j``."""
        terms = {}
        for m, c in self._terms.items():
            e = m[j]
            if e < times:
                continue
            falling = prod(range(e - times + 1, e + 1))
            terms[m[:j] + (e - times,) + m[j + 1:]] = c * falling
        return Polynomial._raw(terms, self._nvars)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Direct substitution of ``point``."""
        if len(point) != self._nvars:
            raise DimensionMismatch(f"point of length {len(point)} for {self._nvars} variables")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- ordering-sensitive

    def leading_monomial(self, ordering: MonomialOrdering) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return ordering.max(self._terms)

    def least_monomial(self, ordering: MonomialOrdering) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no least monomial")
        return ordering.min(self._terms)

    def leading_coefficient(self, ordering: MonomialOrdering) -> Fraction:
        return self._terms[self.leading_monomial(ordering)]

    def sorted_terms(self, ordering: MonomialOrdering) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending order."""
        return [(m, self._terms[m]) for m in ordering.sorted(self._terms, reverse=True)]


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def scale(c: Scalar, p: Polynomial) -> Polynomial:
    return p.scale(c)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def leading_monomial(ordering: MonomialOrdering, p: Polynomial) -> Monomial:
    return p.leading_monomial(ordering)


def least_monomial(ordering: MonomialOrdering, p: Polynomial) -> Monomial:
    return p.least_monomial(ordering)


def support_union(ps: Iterable[Polynomial]) -> frozenset[Monomial]:
    """All monomials occurring with a nonzero coefficient in any of ``ps``."""
    out: set[Monomial] = set()
    for p in ps:
        out.update(p.terms)
    return frozenset(out)


# ---------------------------------------------------------------------------
# text form

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^])
""", re.VERBOSE)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {v: k for k, v in enumerate(variables)}
        self.d = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.take()
        if tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {what}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def number(self) -> Fraction:
        num = int(self.expect("int", "a number")[1])
        if self.peek()[:2] == ("op", "/"):
            self.take()
            tok = self.expect("int", "a denominator")
            den = int(tok[1])
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, coeff: Fraction, mono: list[int]) -> Fraction:
        kind, val, pos = self.peek()
        if kind == "int":
            return coeff * self.number()
        if kind == "name":
            self.take()
            if val not in self.index:
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            exp = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                exp = int(self.expect("int", "a nonnegative integer exponent")[1])
            mono[self.index[val]] += exp
            return coeff
        raise PolynomialSyntaxError(f"expected a number or variable, found {val or 'end of input'!r}", pos)

    def term(self) -> tuple[Monomial, Fraction]:
        coeff = Fraction(1)
        mono = [0] * self.d
        coeff = self.factor(coeff, mono)
        while True:
            kind, val, _ = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                coeff = self.factor(coeff, mono)
            elif kind == "name":
                # juxtaposition: "2x", "x y"
                coeff = self.factor(coeff, mono)
            else:
                break
        return tuple(mono), coeff

    def polynomial(self) -> Polynomial:
        terms = []
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            mono, c = self.term()
            terms.append((mono, sign * c))
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise PolynomialSyntaxError(f"unexpected {val!r}", pos)
        return Polynomial(terms, self.d)


def parse_poly(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` as a polynomial in ``variables``.

    Grammar: signed terms joined by ``+``/``-``; a term is a product of
    factors separated by ``*`` (or juxtaposed), each factor an integer,
    a ``p/q`` rational, or ``var`` / ``var^k`` with k a nonnegative integer.

    >>> parse_poly("x^2 - 7/3*x + 2/3*y", ["x", "y"]).coeff((1, 0))
    Fraction(-7, 3)
    """
    for v in variables:
        if not _NAME.match(v):
            raise ValueError(f"invalid variable name {v!r}")
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(text, variables).polynomial()


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for v, e in zip(variables, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Polynomial, ordering: MonomialOrdering, variables: Sequence[str]) -> str:
    """Canonical text: terms in descending order, signs fused, ``1*`` dropped."""
    if len(variables) != p.nvars:
        raise DimensionMismatch(f"{len(variables)} names for {p.nvars} variables")
    if p.is_zero():
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms(ordering)):
        neg = c < 0
        a = -c if neg else c
        body = format_monomial(m, variables)
        if body == "1":
            text = format_rational(a)
        elif a == 1:
            text = body
        else:
            text = f"{format_rational(a)}*{body}"
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(out)
