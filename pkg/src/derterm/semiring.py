"""Weight semirings with a partial star.

Each instance is an immutable descriptor: ``zero``, ``one``, ``add``, ``mul``,
``star`` (returning ``None`` where the element is not starrable) and ``eq``.
Weights themselves are plain Python values (``bool``, ``int``,
``fractions.Fraction`` or ``math.inf``).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

Weight = Any


class WeightSyntaxError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Semiring:
    name: str
    zero: Weight
    one: Weight
    _add: Callable[[Weight, Weight], Weight]
    _mul: Callable[[Weight, Weight], Weight]
    _star: Callable[[Weight], Optional[Weight]]
    _parse: Callable[[str], Weight]
    _format: Callable[[Weight], str]

    def add(self, x: Weight, y: Weight) -> Weight:
        return self._add(x, y)

    def mul(self, x: Weight, y: Weight) -> Weight:
        return self._mul(x, y)

    def star(self, k: Weight) -> Optional[Weight]:
        """Return ``k*`` or ``None`` when ``k`` is not starrable here."""
        return self._star(k)

    def eq(self, x: Weight, y: Weight) -> bool:
        return x == y

    def is_zero(self, k: Weight) -> bool:
        return k == self.zero

    def sum(self, weights) -> Weight:
        acc = self.zero
        for w in weights:
            acc = self._add(acc, w)
        return acc

    def parse(self, text: str) -> Weight:
        return self._parse(text.strip())

    def format(self, k: Weight) -> str:
        return self._format(k)

    def __repr__(self) -> str:
        return f"Semiring({self.name!r})"


def _parse_bool(text: str) -> bool:
    t = text.lower()
    if t in ("true", "1", "t"):
        return True
    if t in ("false", "0", "f"):
        return False
    raise WeightSyntaxError(f"not a boolean weight: {text!r}")


def _parse_int(text: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", text):
        raise WeightSyntaxError(f"not an integer weight: {text!r}")
    return int(text)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise WeightSyntaxError(f"not a rational weight: {text!r}") from None


def _format_fraction(k: Fraction) -> str:
    return str(k.numerator) if k.denominator == 1 else f"{k.numerator}/{k.denominator}"


def _normalize_tropical(k):
    if k == math.inf:
        return math.inf
    k = Fraction(k)
    return k.numerator if k.denominator == 1 else k


def _parse_tropical(text: str):
    if text.lower() in ("inf", "+inf", "oo"):
        return math.inf
    return _normalize_tropical(_parse_fraction(text))


def _format_tropical(k) -> str:
    if k == math.inf:
        return "inf"
    if isinstance(k, Fraction):
        return _format_fraction(k)
    return str(k)


def _tropical_mul(x, y):
    if x == math.inf or y == math.inf:
        return math.inf
    return _normalize_tropical(x + y)


BOOLEAN = Semiring(
    "boolean", False, True,
    lambda x, y: x or y,
    lambda x, y: x and y,
    lambda k: True,
    _parse_bool,
    lambda k: "true" if k else "false",
)

INTEGER = Semiring(
    "int", 0, 1,
    lambda x, y: x + y,
    lambda x, y: x * y,
    lambda k: 1 if k == 0 else None,
    _parse_int,
    str,
)

RATIONAL = Semiring(
    "rational", Fraction(0), Fraction(1),
    lambda x, y: x + y,
    lambda x, y: x * y,
    lambda k: Fraction(1) if k == 0 else None,
    _parse_fraction,
    _format_fraction,
)

# k* = 1/(1-k) wherever it exists.
RATIONAL_ANALYTIC = Semiring(
    "rational-analytic", Fraction(0), Fraction(1),
    lambda x, y: x + y,
    lambda x, y: x * y,
    lambda k: None if k == 1 else 1 / (1 - Fraction(k)),
    _parse_fraction,
    _format_fraction,
)

# (min, +) over rationals extended with +inf; star only on k >= 0.
MINPLUS = Semiring(
    "minplus", math.inf, 0,
    lambda x, y: x if x <= y else y,
    _tropical_mul,
    lambda k: 0 if k >= 0 else None,
    _parse_tropical,
    _format_tropical,
)

SEMIRINGS = {
    "boolean": BOOLEAN,
    "int": INTEGER,
    "rational": RATIONAL,
    "minplus": MINPLUS,
}


def get_semiring(name: str, rational_star: str = "zero") -> Semiring:
    """Look a semiring up by its CLI name.

    ``rational_star="analytic"`` widens the rational star domain to every
    ``k != 1``.
    """
    if name == "rational" and rational_star == "analytic":
        return RATIONAL_ANALYTIC
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueError(f"unknown semiring {name!r}; expected one of {', '.join(SEMIRINGS)}") from None
