"""Seeded generator of random valid expressions, used by tests and scripts."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from . import expr as ex
from .expr import Expr
from .semiring import Semiring

WEIGHTS = {
    "boolean": [True, False],
    "int": [-1, 2, -2, 3],
    "rational": [Fraction(1, 2), Fraction(-1), Fraction(3), Fraction(-2, 3)],
    "rational-analytic": [Fraction(1, 2), Fraction(-1), Fraction(3), Fraction(-2, 3)],
    "minplus": [0, 1, 2, 3, -1, math.inf],
}


def atoms_for(monoid, multi_letter: bool = False) -> list:
    if monoid.is_free:
        out = list(monoid.alphabet)
        if multi_letter:
            out += [a + b for a in monoid.alphabet for b in monoid.alphabet]
        return out
    out = [(a, "") for a in monoid.alphabet] + [("", b) for b in monoid.alphabet2]
    out += [(a, b) for a in monoid.alphabet for b in monoid.alphabet2]
    if multi_letter:
        out += [(a + a, "") for a in monoid.alphabet]
    return out


def random_expression(rng: random.Random, monoid, sr: Semiring, max_depth: int = 5,
                      multi_letter: bool = False) -> Expr:
    """A random valid expression with at most ``max_depth`` nested operators."""
    atoms = atoms_for(monoid, multi_letter)
    weights = WEIGHTS[sr.name]

    def leaf() -> Expr:
        r = rng.random()
        if r < 0.08:
            return ex.one()
        if r < 0.11:
            return ex.zero()
        return ex.atom(rng.choice(atoms), monoid)

    def gen(depth: int) -> Expr:
        if depth == 0 or rng.random() < 0.15:
            return leaf()
        r = rng.random()
        if r < 0.27:
            return ex.plus(gen(depth - 1), gen(depth - 1))
        if r < 0.54:
            return ex.prod(gen(depth - 1), gen(depth - 1))
        if r < 0.64:
            return ex.lscale(rng.choice(weights), gen(depth - 1), sr)
        if r < 0.72:
            return ex.rscale(gen(depth - 1), rng.choice(weights), sr)
        for _ in range(20):
            child = gen(depth - 1)
            if ex.constant_term(child, sr) is not None and \
                    sr.star(ex.constant_term(child, sr)) is not None:
                return ex.star(child)
        return child

    while True:
        e = gen(max_depth)
        if ex.constant_term(e, sr) is not None:
            return e


def corpus(seed: int, count: int, monoid, sr: Semiring, max_depth: int = 5) -> list:
    rng = random.Random(seed)
    return [random_expression(rng, monoid, sr, max_depth) for _ in range(count)]
