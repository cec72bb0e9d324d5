"""Truncated completion of the shuffle algebra and the Hurwitz series ring.

An element of the completion is modeled exactly as a residue class modulo the
N-th filtration step: one homogeneous component per degree below the
truncation level. The product of residue classes is computed degreewise from
the stabilizing partial products; the stabilization bound makes every stored
component exact.
"""

from __future__ import annotations

from typing import Sequence

from .coeffring import Polynomial, Weight, binomial, parse_polynomial
from .errors import NotScalarBase, TruncMismatch, WeightNotZero
from .mixshuffle import baxter_operator, shuffle_product, unit_word
from .words import ShuffleElement


class CompleteElement:
    """A residue class of the completed shuffle algebra at truncation N:
    components[k] is the homogeneous piece of degree k, 0 <= k < N."""

    __slots__ = ("trunc", "_components")

    def __init__(self, trunc: int, components: dict[int, ShuffleElement] | None = None):
        if trunc < 1:
            raise ValueError("truncation level must be >= 1")
        self.trunc = trunc
        comps = {}
        if components:
            for k, elem in components.items():
                if not 0 <= k < trunc:
                    continue
                if elem.is_zero:
                    continue
                for w, _ in elem.terms():
                    if w.degree != k:
                        raise ValueError(f"component {k} contains a degree-{w.degree} word")
                comps[k] = elem
        self._components = comps

    @staticmethod
    def from_element(u: ShuffleElement, trunc: int) -> "CompleteElement":
        """Split into homogeneous components and discard degrees >= trunc."""
        comps = {}
        for k in range(trunc):
            piece = u.homogeneous_component(k)
            if not piece.is_zero:
                comps[k] = piece
        return CompleteElement(trunc, comps)

    @staticmethod
    def zero(trunc: int) -> "CompleteElement":
        return CompleteElement(trunc)

    @staticmethod
    def one(trunc: int) -> "CompleteElement":
        return CompleteElement.from_element(ShuffleElement.unit(), trunc)

    def component(self, k: int) -> ShuffleElement:
        return self._components.get(k, ShuffleElement.zero())

    def partial_sum(self, k: int) -> ShuffleElement:
        """The cutoff of this class at degree k: the sum of components <= k."""
        result = ShuffleElement.zero()
        for deg, elem in self._components.items():
            if deg <= k:
                result = result + elem
        return result

    @property
    def is_zero(self) -> bool:
        return not self._components

    def __add__(self, other: "CompleteElement") -> "CompleteElement":
        self._check_trunc(other)
        comps = dict(self._components)
        for k, elem in other._components.items():
            comps[k] = comps.get(k, ShuffleElement.zero()) + elem
        return CompleteElement(self.trunc, {k: e for k, e in comps.items() if not e.is_zero})

    def __neg__(self) -> "CompleteElement":
        return CompleteElement(self.trunc, {k: -e for k, e in self._components.items()})

    def __sub__(self, other: "CompleteElement") -> "CompleteElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompleteElement):
            return NotImplemented
        return self.trunc == other.trunc and self._components == other._components

    def __hash__(self) -> int:
        return hash((self.trunc, frozenset(self._components.items())))

    def _check_trunc(self, other: "CompleteElement") -> None:
        if self.trunc != other.trunc:
            raise TruncMismatch(f"truncation levels differ: {self.trunc} vs {other.trunc}")

    def __str__(self) -> str:
        if not self._components:
            return "0"
        parts = [str(self._components[k]) for k in sorted(self._components)]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CompleteElement(trunc={self.trunc}, {self})"


def complete_mul(x: CompleteElement, y: CompleteElement, weight: Weight) -> CompleteElement:
    """Degreewise product of residue classes: component k is the degree-k
    piece of the product of the degree-k cutoffs, which has stabilized."""
    x._check_trunc(y)
    comps = {}
    for k in range(x.trunc):
        product = shuffle_product(x.partial_sum(k), y.partial_sum(k), weight)
        piece = product.homogeneous_component(k)
        if not piece.is_zero:
            comps[k] = piece
    return CompleteElement(x.trunc, comps)


def complete_operator(x: CompleteElement) -> CompleteElement:
    """The shifted Baxter operator: component k of the result is the unit
    prefix of component k-1; the top input component falls past the
    truncation."""
    comps = {}
    for k, elem in x._components.items():
        if k + 1 < x.trunc:
            comps[k + 1] = baxter_operator(elem)
    return CompleteElement(x.trunc, comps)


class HurwitzSeries:
    """A truncated sequence over the coefficient ring with the binomial
    convolution product."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Polynomial | int]):
        if not entries:
            raise ValueError("a Hurwitz series needs at least one entry")
        self.entries = tuple(Polynomial._coerce(e) for e in entries)

    @property
    def trunc(self) -> int:
        return len(self.entries)

    @staticmethod
    def zero(trunc: int) -> "HurwitzSeries":
        return HurwitzSeries([Polynomial.zero()] * trunc)

    @staticmethod
    def basis(n: int, trunc: int) -> "HurwitzSeries":
        """The n-th basis sequence: 1 in slot n, 0 elsewhere."""
        entries = [Polynomial.zero()] * trunc
        if 0 <= n < trunc:
            entries[n] = Polynomial.one()
        return HurwitzSeries(entries)

    def __add__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        self._check_trunc(other)
        return HurwitzSeries([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        self._check_trunc(other)
        return HurwitzSeries([a - b for a, b in zip(self.entries, other.entries)])

    def __mul__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        self._check_trunc(other)
        out = []
        for n in range(self.trunc):
            total = Polynomial.zero()
            for k in range(n + 1):
                total = total + binomial(n, k) * self.entries[k] * other.entries[n - k]
            out.append(total)
        return HurwitzSeries(out)

    def _check_trunc(self, other: "HurwitzSeries") -> None:
        if self.trunc != other.trunc:
            raise TruncMismatch(f"truncation levels differ: {self.trunc} vs {other.trunc}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, HurwitzSeries):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def __repr__(self) -> str:
        return f"HurwitzSeries{self}"

    @staticmethod
    def parse(text: str) -> "HurwitzSeries":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        return HurwitzSeries([parse_polynomial(part) for part in body.split(",")])


def hurwitz_mul(a: HurwitzSeries, b: HurwitzSeries) -> HurwitzSeries:
    return a * b


def hurwitz_iso(x: CompleteElement, weight: Weight) -> HurwitzSeries:
    """Read a residue class over the scalar base (all-unit words, weight 0)
    as a truncated Hurwitz series: the degree-n all-unit word maps to the n-th
    basis sequence."""
    if not weight.is_zero:
        raise WeightNotZero("the Hurwitz identification requires weight 0")
    entries = [Polynomial.zero()] * x.trunc
    for k in range(x.trunc):
        for word, coeff in x.component(k).terms():
            if word != unit_word(k + 1):
                raise NotScalarBase(f"word {word} has a non-unit factor")
            entries[k] = entries[k] + coeff
    return HurwitzSeries(entries)
