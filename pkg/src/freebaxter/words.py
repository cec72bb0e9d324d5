"""Tensor words and the free modules built on them.

Two word kinds live here: ``TensorWord`` (a nonempty factor sequence; length
n+1 means filtration degree n) with its linear combinations
(``ShuffleElement``), and ``AbarWord`` (a word of the direct-limit algebra,
canonicalized by dropping trailing unit factors) with factorwise
multiplication on its linear combinations (``AbarElement``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Mapping, Sequence

from .coeffring import (
    Monomial,
    Namespace,
    Polynomial,
    _mono_cmp,
    parse_polynomial,
    poly_exact_div,
)
from .errors import KindMismatch, NamespaceViolation


def _check_factors(factors: Sequence[Monomial]) -> None:
    for f in factors:
        if f.has_namespace(Namespace.COEFFICIENT):
            raise NamespaceViolation(
                f"word factor {f} contains coefficient variables; move them to the scalar"
            )


@dataclass(frozen=True, slots=True)
class TensorWord:
    """A nonempty sequence of generator-namespace monomials."""

    factors: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a tensor word has at least one factor")
        _check_factors(self.factors)

    @property
    def degree(self) -> int:
        """Filtration degree: number of factors minus one."""
        return len(self.factors) - 1

    def __str__(self) -> str:
        return "[" + "|".join(str(f) for f in self.factors) + "]"


def _word_cmp(a: TensorWord, b: TensorWord) -> int:
    if len(a.factors) != len(b.factors):
        return 1 if len(a.factors) > len(b.factors) else -1
    for fa, fb in zip(a.factors, b.factors):
        c = _mono_cmp(fa, fb)
        if c:
            return c
    return 0


WORD_KEY = cmp_to_key(_word_cmp)


@dataclass(frozen=True, slots=True)
class AbarWord:
    """A direct-limit word: monomial factors with no trailing unit factor.
    The empty word is the multiplicative identity."""

    factors: tuple[Monomial, ...]

    def __post_init__(self):
        if self.factors and self.factors[-1].is_unit:
            raise ValueError("AbarWord may not end in a unit factor; use abar_normalize")
        _check_factors(self.factors)

    def padded(self, length: int) -> tuple[Monomial, ...]:
        if length < len(self.factors):
            raise ValueError("cannot pad to a shorter length")
        return self.factors + (Monomial.unit(),) * (length - len(self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "(" + "|".join(str(f) for f in self.factors) + ")"


def abar_normalize(factors: Sequence[Monomial]) -> AbarWord:
    """Drop trailing unit factors; all-unit input gives the identity word."""
    end = len(factors)
    while end and factors[end - 1].is_unit:
        end -= 1
    return AbarWord(tuple(factors[:end]))


def _abar_cmp(a: AbarWord, b: AbarWord) -> int:
    if len(a.factors) != len(b.factors):
        return 1 if len(a.factors) > len(b.factors) else -1
    for fa, fb in zip(a.factors, b.factors):
        c = _mono_cmp(fa, fb)
        if c:
            return c
    return 0


ABAR_KEY = cmp_to_key(_abar_cmp)


def _check_scalar(c: Polynomial) -> Polynomial:
    if c.has_namespace(Namespace.GENERATOR):
        raise NamespaceViolation(f"scalar {c} contains generator variables")
    return c


def _canonical(terms: Mapping) -> dict:
    out = {}
    for word, coeff in terms.items():
        coeff = Polynomial._coerce(coeff)
        if not coeff.is_zero:
            prev = out.get(word)
            total = coeff if prev is None else prev + coeff
            if total.is_zero:
                out.pop(word, None)
            else:
                out[word] = total
    return out


class _LinearElement:
    """Shared free-module plumbing for word linear combinations."""

    __slots__ = ("_terms",)
    _word_key = None  # set by subclasses

    def __init__(self, terms: Mapping | None = None):
        self._terms = _canonical(terms) if terms else {}

    @classmethod
    def zero(cls):
        return cls()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return self._terms.items()

    def __add__(self, other):
        if type(other) is not type(self):
            raise KindMismatch(
                f"cannot add {type(self).__name__} and {type(other).__name__}"
            )
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms.get(word, Polynomial.zero()) + coeff
        return type(self)(terms)

    def __neg__(self):
        return type(self)({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "_LinearElement":
        c = _check_scalar(Polynomial._coerce(c))
        return type(self)({w: coeff * c for w, coeff in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Polynomial)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _sorted_words(self):
        return sorted(self._terms, key=type(self)._word_key, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for word in self._sorted_words():
            coeff = self._terms[word]
            word_str = str(word)
            if coeff == 1:
                body, negative = word_str, False
            elif coeff == -1:
                body, negative = word_str, True
            elif len(coeff._terms) == 1:
                cstr = str(coeff)
                negative = cstr.startswith("-")
                body = f"{cstr.lstrip('-')}*{word_str}"
            else:
                body, negative = f"({coeff})*{word_str}", False
            pieces.append((negative, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": str(self._terms[w]),
                    "word": [str(f) for f in w.factors],
                }
                for w in self._sorted_words()
            ]
        }


class ShuffleElement(_LinearElement):
    """A finite linear combination of tensor words with coefficient-namespace
    polynomial scalars: an element of the graded shuffle module."""

    _word_key = staticmethod(WORD_KEY)

    @staticmethod
    def from_word(word: TensorWord, coeff=1) -> "ShuffleElement":
        return ShuffleElement({word: Polynomial._coerce(coeff)})

    @staticmethod
    def unit() -> "ShuffleElement":
        return ShuffleElement.from_word(TensorWord((Monomial.unit(),)))

    @staticmethod
    def from_factors(factors: Sequence[Polynomial], coeff=1) -> "ShuffleElement":
        """Expand polynomial word factors multilinearly into monomial words,
        pulling coefficient-namespace content into the scalar."""
        result = ShuffleElement()
        for c, monos in expand_word_factors(factors):
            word = TensorWord(monos)
            result = result + ShuffleElement({word: c * Polynomial._coerce(coeff)})
        return result

    @staticmethod
    def from_json_obj(obj: dict, gens: Iterable[str] = ()) -> "ShuffleElement":
        result = ShuffleElement()
        for entry in obj["terms"]:
            factors = [parse_polynomial(f, gens) for f in entry["word"]]
            result = result + ShuffleElement.from_factors(
                factors, parse_polynomial(entry["coeff"])
            )
        return result

    def homogeneous_component(self, degree: int) -> "ShuffleElement":
        return ShuffleElement(
            {w: c for w, c in self._terms.items() if w.degree == degree}
        )

    def max_degree(self) -> int:
        """Largest word degree in the support; -1 for zero."""
        if not self._terms:
            return -1
        return max(w.degree for w in self._terms)


class AbarElement(_LinearElement):
    """A finite linear combination of direct-limit words; multiplication pads
    the shorter word with units and multiplies factorwise."""

    _word_key = staticmethod(ABAR_KEY)

    @staticmethod
    def from_word(word: AbarWord, coeff=1) -> "AbarElement":
        return AbarElement({word: Polynomial._coerce(coeff)})

    @staticmethod
    def identity() -> "AbarElement":
        return AbarElement.from_word(AbarWord(()))

    @staticmethod
    def from_json_obj(obj: dict, gens: Iterable[str] = ()) -> "AbarElement":
        result = AbarElement()
        for entry in obj["terms"]:
            factors = [parse_polynomial(f, gens) for f in entry["word"]]
            coeff = parse_polynomial(entry["coeff"])
            for c, monos in expand_word_factors(factors):
                result = result + AbarElement({abar_normalize(monos): c * coeff})
        return result

    def __mul__(self, other) -> "AbarElement":
        if isinstance(other, (int, Polynomial)):
            return self.scale(other)
        if not isinstance(other, AbarElement):
            raise KindMismatch(
                f"cannot multiply AbarElement and {type(other).__name__}"
            )
        terms: dict[AbarWord, Polynomial] = {}
        for wu, cu in self._terms.items():
            for wv, cv in other._terms.items():
                length = max(len(wu.factors), len(wv.factors))
                fu, fv = wu.padded(length), wv.padded(length)
                word = abar_normalize(tuple(a * b for a, b in zip(fu, fv)))
                coeff = cu * cv
                prev = terms.get(word)
                terms[word] = coeff if prev is None else prev + coeff
        return AbarElement(terms)

    def exact_div_scalar(self, d: Polynomial) -> "AbarElement":
        """Divide every coefficient exactly by d; raises NotDivisible."""
        return AbarElement({w: poly_exact_div(c, d) for w, c in self._terms.items()})


def abar_mul(u: AbarElement, v: AbarElement) -> AbarElement:
    return u * v


def element_add(u, v):
    return u + v


def scalar_mul(c, u):
    return u.scale(c)


def expand_word_factors(
    factors: Sequence[Polynomial],
) -> list[tuple[Polynomial, tuple[Monomial, ...]]]:
    """Multilinear expansion of polynomial factors over the coefficient ring:
    returns (scalar, generator-monomial factors) pairs. Coefficient-namespace
    content of every term is factored out into the scalar."""
    partial: list[tuple[Polynomial, tuple[Monomial, ...]]] = [(Polynomial.one(), ())]
    for factor in factors:
        grown = []
        for scalar, monos in partial:
            for mono, coeff in factor.items():
                cpart, gpart = mono.split()
                grown.append(
                    (scalar * Polynomial.from_monomial(cpart, coeff), monos + (gpart,))
                )
        partial = grown
    return partial
