"""Exact sparse multivariate polynomials over arbitrary-precision integers.

Two disjoint variable namespaces share one polynomial type: coefficient
variables (the base ring, where the weight lives, e.g. ``lam``) and generator
variables (the polynomial algebra the tensor words are built from).
All arithmetic is exact; polynomials are kept in canonical form (no zero
coefficients, deterministic graded-lex term order).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Iterable, Iterator, Mapping

from .errors import DivisorZero, ExprSyntaxError, NamespaceViolation, NotDivisible


class Namespace(Enum):
    COEFFICIENT = "coefficient"
    GENERATOR = "generator"


_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, slots=True)
class Variable:
    namespace: Namespace
    name: str

    def __post_init__(self):
        if not _IDENT_RE.match(self.name):
            raise ValueError(f"invalid variable name: {self.name!r}")

    @property
    def sort_key(self) -> tuple[int, str]:
        # coefficient variables sort before generator variables
        return (0 if self.namespace is Namespace.COEFFICIENT else 1, self.name)

    def __str__(self) -> str:
        return self.name


def coeff_var(name: str) -> Variable:
    return Variable(Namespace.COEFFICIENT, name)


def gen_var(name: str) -> Variable:
    return Variable(Namespace.GENERATOR, name)


@dataclass(frozen=True, slots=True)
class Monomial:
    """A power product of variables; the empty product is the unit monomial."""

    exponents: tuple[tuple[Variable, int], ...]

    @staticmethod
    def make(exps: Mapping[Variable, int]) -> "Monomial":
        items = tuple(
            sorted(((v, e) for v, e in exps.items() if e != 0), key=lambda p: p[0].sort_key)
        )
        for _, e in items:
            if e < 0:
                raise ValueError("negative exponent in monomial")
        return Monomial(items)

    @staticmethod
    def unit() -> "Monomial":
        return _UNIT_MONOMIAL

    @staticmethod
    def of(var: Variable, exp: int = 1) -> "Monomial":
        return Monomial.make({var: exp})

    @property
    def is_unit(self) -> bool:
        return not self.exponents

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def variables(self) -> Iterator[Variable]:
        return (v for v, _ in self.exponents)

    def has_namespace(self, ns: Namespace) -> bool:
        return any(v.namespace is ns for v, _ in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = exps.get(v, 0) + e
        return Monomial.make(exps)

    def divides(self, other: "Monomial") -> bool:
        exps = dict(other.exponents)
        return all(exps.get(v, 0) >= e for v, e in self.exponents)

    def divide(self, other: "Monomial") -> "Monomial":
        """Return self / other; other must divide self."""
        exps = dict(self.exponents)
        for v, e in other.exponents:
            if exps.get(v, 0) < e:
                raise NotDivisible(f"{other} does not divide {self}")
            exps[v] -= e
        return Monomial.make(exps)

    def split(self) -> tuple["Monomial", "Monomial"]:
        """Split into (coefficient-namespace part, generator-namespace part)."""
        cpart = {v: e for v, e in self.exponents if v.namespace is Namespace.COEFFICIENT}
        gpart = {v: e for v, e in self.exponents if v.namespace is Namespace.GENERATOR}
        return Monomial.make(cpart), Monomial.make(gpart)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for v, e in self.exponents:
            parts.append(v.name if e == 1 else f"{v.name}^{e}")
        return "*".join(parts)


_UNIT_MONOMIAL = Monomial(())


def _mono_cmp(a: Monomial, b: Monomial) -> int:
    """Graded-lex comparison: total degree first, then lexicographic with the
    variable order (coefficient namespace first, then by name)."""
    da, db = a.total_degree, b.total_degree
    if da != db:
        return 1 if da > db else -1
    ea, eb = dict(a.exponents), dict(b.exponents)
    for v in sorted(set(ea) | set(eb), key=lambda v: v.sort_key):
        xa, xb = ea.get(v, 0), eb.get(v, 0)
        if xa != xb:
            return 1 if xa > xb else -1
    return 0


MONOMIAL_KEY = cmp_to_key(_mono_cmp)


class Polynomial:
    """Canonical sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        canonical = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    canonical[mono] = canonical.get(mono, 0) + coeff
                    if not canonical[mono]:
                        del canonical[mono]
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial({_UNIT_MONOMIAL: 1})

    @staticmethod
    def from_int(n: int) -> "Polynomial":
        return Polynomial({_UNIT_MONOMIAL: n})

    @staticmethod
    def from_variable(var: Variable) -> "Polynomial":
        return Polynomial({Monomial.of(var): 1})

    @staticmethod
    def from_monomial(mono: Monomial, coeff: int = 1) -> "Polynomial":
        return Polynomial({mono: coeff})

    @staticmethod
    def _coerce(value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial.from_int(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Polynomial")

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(m.is_unit for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(_UNIT_MONOMIAL, 0)

    def items(self) -> Iterable[tuple[Monomial, int]]:
        return self._terms.items()

    def has_namespace(self, ns: Namespace) -> bool:
        return any(m.has_namespace(ns) for m in self._terms)

    def leading_term(self) -> tuple[Monomial, int]:
        mono = max(self._terms, key=MONOMIAL_KEY)
        return mono, self._terms[mono]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.total_degree for m in self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, int)):
            return NotImplemented
        other = Polynomial._coerce(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, int)):
            return NotImplemented
        other = Polynomial._coerce(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Polynomial":
        if exp < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono in sorted(self._terms, key=MONOMIAL_KEY, reverse=True):
            coeff = self._terms[mono]
            mag = abs(coeff)
            if mono.is_unit:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            pieces.append((coeff < 0, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    """Exact quotient q with q*d == p; raises NotDivisible when none exists."""
    if d.is_zero:
        raise DivisorZero("division by the zero polynomial")
    lead_mono, lead_coeff = d.leading_term()
    quotient: dict[Monomial, int] = {}
    remainder = p
    while not remainder.is_zero:
        mono, coeff = remainder.leading_term()
        if not lead_mono.divides(mono) or coeff % lead_coeff != 0:
            raise NotDivisible(f"({p}) is not divisible by ({d})")
        qm = mono.divide(lead_mono)
        qc = coeff // lead_coeff
        quotient[qm] = quotient.get(qm, 0) + qc
        remainder = remainder - d * Polynomial({qm: qc})
    return Polynomial(quotient)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when n < 0, k > n, or k < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, slots=True)
class Weight:
    """The weight of the Baxter structure: a coefficient-namespace polynomial,
    flagged when it is certified a non-zero-divisor (true for any nonzero
    polynomial over the integers)."""

    value: Polynomial
    nzd: bool

    @staticmethod
    def of(value) -> "Weight":
        poly = Polynomial._coerce(value)
        if poly.has_namespace(Namespace.GENERATOR):
            raise NamespaceViolation("weight must live in the coefficient namespace")
        return Weight(poly, nzd=not poly.is_zero)

    @staticmethod
    def default() -> "Weight":
        return Weight.of(Polynomial.from_variable(coeff_var("lam")))

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def __str__(self) -> str:
        return str(self.value)


# -- polynomial text parsing -------------------------------------------------

_POLY_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def _poly_tokens(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", column=pos + 1)
        pos = m.end()
        if m.group("nat") is not None:
            tokens.append(("nat", m.group("nat"), m.start("nat")))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
    return tokens


def parse_polynomial(text: str, gens: Iterable[str] = ()) -> Polynomial:
    """Parse the polynomial text grammar: signed terms joined by ``+``/``-``,
    each term an optional integer with ``*``-separated variable powers ``v^k``.
    Identifiers in ``gens`` resolve to the generator namespace, all others to
    the coefficient namespace."""
    genset = frozenset(gens)
    tokens = _poly_tokens(text)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None, len(text))

    def error(msg, at):
        raise ExprSyntaxError(msg, column=at + 1)

    def parse_varpow() -> Monomial:
        nonlocal idx
        kind, value, at = peek()
        if kind != "ident":
            error("expected a variable name", at)
        idx += 1
        var = gen_var(value) if value in genset else coeff_var(value)
        exp = 1
        kind, value, at = peek()
        if kind == "op" and value == "^":
            idx += 1
            kind, value, at = peek()
            if kind != "nat":
                error("expected an exponent after '^'", at)
            exp = int(value)
            if exp <= 0:
                error("exponent must be positive", at)
            idx += 1
        return Monomial.of(var, exp)

    def parse_term() -> Polynomial:
        nonlocal idx
        kind, value, at = peek()
        coeff = 1
        mono = _UNIT_MONOMIAL
        if kind == "nat":
            coeff = int(value)
            idx += 1
            kind, value, at = peek()
            while kind == "op" and value == "*":
                idx += 1
                mono = mono * parse_varpow()
                kind, value, at = peek()
        elif kind == "ident":
            mono = parse_varpow()
            kind, value, at = peek()
            while kind == "op" and value == "*":
                idx += 1
                mono = mono * parse_varpow()
                kind, value, at = peek()
        else:
            error("expected a term", at)
        return Polynomial({mono: coeff})

    result = Polynomial.zero()
    sign = 1
    kind, value, at = peek()
    if kind == "op" and value in "+-":
        sign = -1 if value == "-" else 1
        idx += 1
    result = result + sign * parse_term()
    while idx < len(tokens):
        kind, value, at = peek()
        if kind != "op" or value not in "+-":
            error("expected '+' or '-'", at)
        idx += 1
        term = parse_term()
        result = result - term if value == "-" else result + term
    return result
