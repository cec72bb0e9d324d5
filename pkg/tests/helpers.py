"""Independent oracles and random generators shared by the test modules.

The oracles here deliberately avoid the library's own arithmetic paths so
that they can serve as cross-checks.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from freebaxter import (
    Monomial,
    Polynomial,
    ShuffleElement,
    Weight,
    baxter_operator,
    coeff_var,
    gen_var,
    shuffle_product,
)
from freebaxter.exprparse import (
    Add,
    CoeffVar,
    GenVar,
    IntLit,
    Mul,
    PApply,
    Pow,
    Sub,
    WordLit,
)

GENS = ("x1", "x2")


# -- oracles -----------------------------------------------------------------

def pascal_binomial(n: int, k: int) -> int:
    """Binomial coefficient by building Pascal's triangle row by row."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def _poly_to_counter(p: Polynomial) -> dict[tuple, int]:
    out = {}
    for mono, coeff in p.items():
        key = tuple(sorted((v.name, e) for v, e in mono.exponents))
        out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}


def schoolbook_mul(p: Polynomial, q: Polynomial) -> dict[tuple, int]:
    """Multiply via plain term-by-term expansion on name/exponent tuples,
    independent of the Polynomial internals."""
    out: dict[tuple, int] = {}
    for k1, c1 in _poly_to_counter(p).items():
        for k2, c2 in _poly_to_counter(q).items():
            merged = Counter(dict(k1))
            merged.update(dict(k2))
            key = tuple(sorted(merged.items()))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def poly_fingerprint(p: Polynomial) -> dict[tuple, int]:
    return _poly_to_counter(p)


def brute_shuffles(m: int, n: int) -> set[tuple[int, ...]]:
    """All (m,n)-shuffle image sequences by filtering the full symmetric
    group on the two monotonicity chains."""
    out = set()
    for perm in itertools.permutations(range(1, m + n + 1)):
        inverse = {v: i for i, v in enumerate(perm)}
        if all(inverse[i] < inverse[i + 1] for i in range(1, m)) and all(
            inverse[i] < inverse[i + 1] for i in range(m + 1, m + n)
        ):
            out.add(perm)
    return out


def baxter_identity_holds(u: ShuffleElement, v: ShuffleElement, weight: Weight) -> bool:
    lhs = shuffle_product(baxter_operator(u), baxter_operator(v), weight)
    rhs = (
        baxter_operator(shuffle_product(u, baxter_operator(v), weight))
        + baxter_operator(shuffle_product(v, baxter_operator(u), weight))
        + baxter_operator(shuffle_product(u, v, weight)).scale(weight.value)
    )
    return lhs == rhs


# -- random AST generation -----------------------------------------------------

_COEFF_NAMES = ("lam", "c1")


def _random_factor_poly(rng: random.Random) -> Polynomial:
    result = Polynomial.zero()
    for _ in range(rng.randint(1, 2)):
        mono = Monomial.unit()
        for _ in range(rng.randint(0, 2)):
            mono = mono * Monomial.of(gen_var(rng.choice(GENS)))
        if rng.random() < 0.3:
            mono = mono * Monomial.of(coeff_var(rng.choice(_COEFF_NAMES)))
        result = result + Polynomial.from_monomial(mono, rng.randint(-3, 3))
    return result


def random_ast(rng: random.Random, depth: int = 0):
    """A random expression AST in the shapes the parser produces: chains are
    left-associated, so printing and reparsing is the identity."""

    def atom(d):
        roll = rng.random()
        if d < 2 and roll < 0.15:
            return PApply(expr(d + 1))
        if d < 2 and roll < 0.25:
            return expr(d + 1)  # appears parenthesized when printed
        roll = rng.random()
        if roll < 0.3:
            return IntLit(rng.randint(0, 9))
        if roll < 0.5:
            return CoeffVar(rng.choice(_COEFF_NAMES))
        if roll < 0.7:
            return GenVar(rng.choice(GENS))
        return WordLit(tuple(_random_factor_poly(rng) for _ in range(rng.randint(1, 3))))

    def power(d):
        node = atom(d)
        if rng.random() < 0.2:
            node = Pow(node, rng.randint(0, 3))
        return node

    def prod(d):
        node = power(d)
        for _ in range(rng.randint(0, 2)):
            node = Mul(node, power(d))
        return node

    def expr(d):
        node = prod(d)
        for _ in range(rng.randint(0, 2)):
            cls = Add if rng.random() < 0.5 else Sub
            node = cls(node, prod(d))
        return node

    return expr(depth)
