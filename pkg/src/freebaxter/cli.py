"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse/config error,
3 domain error (not in image, not divisible, ...).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .coeffring import Weight, parse_polynomial
from .completion import CompleteElement, HurwitzSeries, complete_mul
from .errors import ExprSyntaxError, FreeBaxterError
from .exprparse import eval_expr, parse_expr
from .mixshuffle import (
    baxter_operator,
    enumerate_shuffles,
    mixable_histogram,
    shuffle_product,
    unit_power_product,
    unit_word,
    word_product,
)
from .randgen import RNG_ALGORITHM, random_shuffle_element
from .standard import StandardElement, from_standard, to_standard

DEFAULT_GENS = "x1,x2,x3,x4"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--weight", default="lam",
                        help="weight polynomial in the coefficient namespace (default: lam)")
    parser.add_argument("--gens", default=DEFAULT_GENS,
                        help="comma-separated generator names")
    parser.add_argument("--output", choices=("text", "json"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freebaxter",
        description="Exact free Baxter algebra computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression to a shuffle element")
    _add_common(p)
    p.add_argument("expr")

    p = sub.add_parser("phi", help="map an expression into the sequence algebra")
    _add_common(p)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("expr")

    p = sub.add_parser("psi", help="reconstruct a shuffle element from sequence JSON")
    _add_common(p)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("file", help="path to StandardElement JSON, or - for stdin")

    p = sub.add_parser("count-shuffles", help="count (m,n)-shuffles or mixable shuffles")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--mixable", action="store_true")

    p = sub.add_parser("unit-product",
                       help="closed form vs brute force for the all-unit word product")
    _add_common(p)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("hurwitz-mul", help="binomial convolution of two truncated series")
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("complete-mul", help="product of residue classes at a truncation")
    _add_common(p)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("baxter-check",
                       help="randomized Baxter-identity and associativity suite")
    _add_common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check-weight", default=None,
                   help="weight used inside the identity being checked "
                        "(defaults to --weight; a different value must fail)")
    return parser


def _gens_list(args) -> list[str]:
    return [g for g in (s.strip() for s in args.gens.split(",")) if g]


def _weight(args) -> Weight:
    return Weight.of(parse_polynomial(args.weight))


def _emit_element(elem, args) -> None:
    if args.output == "json":
        print(json.dumps(elem.to_json_obj()))
    else:
        print(elem)


def _cmd_eval(args) -> int:
    elem = eval_expr(parse_expr(args.expr, _gens_list(args)), _weight(args))
    _emit_element(elem, args)
    return 0


def _cmd_phi(args) -> int:
    elem = eval_expr(parse_expr(args.expr, _gens_list(args)), _weight(args))
    seq = to_standard(elem, args.trunc, _weight(args))
    _emit_element(seq, args)
    return 0


def _cmd_psi(args) -> int:
    if args.file == "-":
        obj = json.load(sys.stdin)
    else:
        with open(args.file) as handle:
            obj = json.load(handle)
    seq = StandardElement.from_json_obj(obj, _gens_list(args))
    elem = from_standard(seq, _weight(args))
    _emit_element(elem, args)
    return 0


def _cmd_count_shuffles(args) -> int:
    if args.mixable:
        hist = mixable_histogram(args.m, args.n)
        total = sum(hist.values())
        print(f"total: {total}")
        print("histogram: {" + ", ".join(f"{k}: {hist[k]}" for k in sorted(hist)) + "}")
    else:
        print(f"total: {len(enumerate_shuffles(args.m, args.n))}")
    return 0


def _cmd_unit_product(args) -> int:
    weight = _weight(args)
    closed = unit_power_product(args.m, args.n, weight)
    brute = word_product(unit_word(args.m + 1), unit_word(args.n + 1), weight)
    _emit_element(closed, args)
    agree = closed == brute
    print(f"agree: {'true' if agree else 'false'}")
    return 0 if agree else 1


def _cmd_hurwitz_mul(args) -> int:
    def load(text: str) -> HurwitzSeries:
        series = HurwitzSeries.parse(text)
        if series.trunc != args.trunc:
            entries = list(series.entries)[: args.trunc]
            entries += [0] * (args.trunc - len(entries))
            series = HurwitzSeries(entries)
        return series

    print(load(args.left) * load(args.right))
    return 0


def _cmd_complete_mul(args) -> int:
    weight = _weight(args)
    gens = _gens_list(args)
    left = CompleteElement.from_element(eval_expr(parse_expr(args.left, gens), weight), args.trunc)
    right = CompleteElement.from_element(eval_expr(parse_expr(args.right, gens), weight), args.trunc)
    product = complete_mul(left, right, weight)
    print(f"trunc: {args.trunc}")
    print(product)
    return 0


def _cmd_baxter_check(args) -> int:
    weight = _weight(args)
    check_weight = weight if args.check_weight is None else Weight.of(
        parse_polynomial(args.check_weight)
    )
    gens = _gens_list(args)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        u = random_shuffle_element(rng, gens, max_len=args.max_len)
        v = random_shuffle_element(rng, gens, max_len=args.max_len)
        w = random_shuffle_element(rng, gens, max_len=args.max_len)
        lhs = shuffle_product(baxter_operator(u), baxter_operator(v), weight)
        rhs = (
            baxter_operator(shuffle_product(u, baxter_operator(v), weight))
            + baxter_operator(shuffle_product(v, baxter_operator(u), weight))
            + baxter_operator(shuffle_product(u, v, weight)).scale(check_weight.value)
        )
        if lhs != rhs:
            failures += 1
            continue
        left = shuffle_product(shuffle_product(u, v, weight), w, weight)
        right = shuffle_product(u, shuffle_product(v, w, weight), weight)
        if left != right or shuffle_product(u, v, weight) != shuffle_product(v, u, weight):
            failures += 1
    print(f"rng: {RNG_ALGORITHM} seed={args.seed}")
    print(f"trials: {args.trials}")
    print(f"failures: {failures}")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "eval": _cmd_eval,
    "phi": _cmd_phi,
    "psi": _cmd_psi,
    "count-shuffles": _cmd_count_shuffles,
    "unit-product": _cmd_unit_product,
    "hurwitz-mul": _cmd_hurwitz_mul,
    "complete-mul": _cmd_complete_mul,
    "baxter-check": _cmd_baxter_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except ExprSyntaxError as exc:
        print(f"error: syntax: {exc}", file=sys.stderr)
        return 2
    except FreeBaxterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
