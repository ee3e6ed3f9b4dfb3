"""Polynomials over a graded monoid and truncated series.

:func:`denote` computes the series of an expression by structural induction
on coefficients, with no automaton involved; it is the oracle every
construction in the package is checked against.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from . import expr as ex
from .expr import Expr, InvalidExpression
from .semiring import Semiring


class Polynomial:
    """Finite linear combination ``sum k_m m`` with no zero coefficients stored."""

    __slots__ = ("sr", "terms")

    def __init__(self, sr: Semiring, terms=None):
        self.sr = sr
        self.terms = {}
        if terms:
            for m, k in (terms.items() if isinstance(terms, dict) else terms):
                self._accumulate(m, k)

    def _accumulate(self, m, k):
        sr = self.sr
        if m in self.terms:
            k = sr.add(self.terms[m], k)
        if sr.is_zero(k):
            self.terms.pop(m, None)
        else:
            self.terms[m] = k

    @classmethod
    def monomial(cls, sr: Semiring, m, k=None) -> "Polynomial":
        return cls(sr, {m: sr.one if k is None else k})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.sr.eq(k, other.terms[m]) for m, k in self.terms.items())

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"

    def items(self):
        return self.terms.items()

    def coefficient(self, m):
        return self.terms.get(m, self.sr.zero)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = Polynomial(self.sr, self.terms)
        for m, k in other.terms.items():
            out._accumulate(m, k)
        return out

    def lmul(self, k) -> "Polynomial":
        """``k . P``"""
        return Polynomial(self.sr, [(m, self.sr.mul(k, w)) for m, w in self.terms.items()])

    def rmul(self, k) -> "Polynomial":
        """``P . k``"""
        return Polynomial(self.sr, [(m, self.sr.mul(w, k)) for m, w in self.terms.items()])

    def cauchy(self, other: "Polynomial", monoid) -> "Polynomial":
        out = Polynomial(self.sr)
        for m, k in self.terms.items():
            for n, h in other.terms.items():
                out._accumulate(monoid.concat(m, n), self.sr.mul(k, h))
        return out

    def format(self, monoid) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=monoid.sort_key):
            k = self.terms[m]
            label = monoid.format(m)
            parts.append(label if k == self.sr.one else f"<{self.sr.format(k)}>{label}")
        return "+".join(parts)


def poly_sum(sr: Semiring, polys: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial(sr)
    for p in polys:
        for m, k in p.terms.items():
            out._accumulate(m, k)
    return out


class TruncatedSeries:
    """Coefficients of a series on every element of length at most ``bound``."""

    __slots__ = ("monoid", "sr", "bound", "coeffs")

    def __init__(self, monoid, sr: Semiring, bound: int, coeffs=None):
        self.monoid = monoid
        self.sr = sr
        self.bound = bound
        self.coeffs = {}
        for m, k in (coeffs or {}).items():
            if monoid.length(m) <= bound and not sr.is_zero(k):
                self.coeffs[m] = k

    def __getitem__(self, m):
        if self.monoid.length(m) > self.bound:
            raise KeyError(f"{m!r} is beyond the truncation bound {self.bound}")
        return self.coeffs.get(m, self.sr.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.bound == other.bound and self.coeffs.keys() == other.coeffs.keys()
                and all(self.sr.eq(k, other.coeffs[m]) for m, k in self.coeffs.items()))

    def __repr__(self) -> str:
        return f"TruncatedSeries(bound={self.bound}, {self.coeffs!r})"

    def constant(self):
        return self[self.monoid.identity]

    def restrict(self, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(self.monoid, self.sr, min(bound, self.bound), self.coeffs)

    def items(self):
        """Nonzero coefficients in (length, lexicographic) order."""
        for m in sorted(self.coeffs, key=self.monoid.sort_key):
            yield m, self.coeffs[m]

    def differences(self, other: "TruncatedSeries"):
        """Elements on which the two series disagree."""
        keys = set(self.coeffs) | set(other.coeffs)
        return sorted((m for m in keys if not self.sr.eq(self[m], other[m])),
                      key=self.monoid.sort_key)

    # arithmetic, all truncated at the smaller bound
    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        sr = self.sr
        out = dict(self.coeffs)
        for m, k in other.coeffs.items():
            out[m] = sr.add(out[m], k) if m in out else k
        return TruncatedSeries(self.monoid, sr, min(self.bound, other.bound), out)

    def lmul(self, k) -> "TruncatedSeries":
        sr = self.sr
        return TruncatedSeries(self.monoid, sr, self.bound,
                               {m: sr.mul(k, w) for m, w in self.coeffs.items()})

    def rmul(self, k) -> "TruncatedSeries":
        sr = self.sr
        return TruncatedSeries(self.monoid, sr, self.bound,
                               {m: sr.mul(w, k) for m, w in self.coeffs.items()})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, bucketed by length so only pairs within the bound meet."""
        sr, mon = self.sr, self.monoid
        bound = min(self.bound, other.bound)
        right = defaultdict(list)
        for n, h in other.coeffs.items():
            right[mon.length(n)].append((n, h))
        out = {}
        for m, k in self.coeffs.items():
            room = bound - mon.length(m)
            for length in range(room + 1):
                for n, h in right.get(length, ()):
                    mn = mon.concat(m, n)
                    w = sr.mul(k, h)
                    out[mn] = sr.add(out[mn], w) if mn in out else w
        return TruncatedSeries(mon, sr, bound, out)

    def proper_part(self) -> "TruncatedSeries":
        ident = self.monoid.identity
        return TruncatedSeries(self.monoid, self.sr, self.bound,
                               {m: k for m, k in self.coeffs.items() if m != ident})

    def star(self, order: str = "right") -> "TruncatedSeries":
        """``s*`` through the scalar star of the constant term.

        ``order="right"`` evaluates ``s0* (sp s0*)*``, ``order="left"``
        evaluates ``(s0* sp)* s0*``; both are exact because the proper part
        has no coefficient on the identity, so its ``k``-th power vanishes
        below length ``k``.
        """
        sr, mon = self.sr, self.monoid
        s0 = self.constant()
        s0_star = sr.star(s0)
        if s0_star is None:
            raise ValueError(f"constant term {sr.format(s0)} is not starrable")
        unit = TruncatedSeries(mon, sr, self.bound, {mon.identity: sr.one})
        sp = self.proper_part()
        acc = unit
        if order == "right":
            step = sp.rmul(s0_star)
            for _ in range(self.bound):
                acc = unit + step * acc
            return acc.lmul(s0_star)
        step = sp.lmul(s0_star)
        for _ in range(self.bound):
            acc = unit + step * acc
        return acc.rmul(s0_star)


def unit_series(monoid, sr: Semiring, bound: int) -> TruncatedSeries:
    return TruncatedSeries(monoid, sr, bound, {monoid.identity: sr.one})


def polynomial_series(p: Polynomial, monoid, bound: int) -> TruncatedSeries:
    return TruncatedSeries(monoid, p.sr, bound, p.terms)


def denote(e: Expr, n: int, monoid, sr: Semiring, star_order: str = "right") -> TruncatedSeries:
    """Coefficients of the series denoted by ``e`` on all elements of length <= n."""
    memo: dict = {}

    def go(f: Expr) -> TruncatedSeries:
        if f in memo:
            return memo[f]
        kind = f.kind
        if kind == ex.ZERO:
            s = TruncatedSeries(monoid, sr, n)
        elif kind == ex.ONE:
            s = unit_series(monoid, sr, n)
        elif kind == ex.ATOM:
            s = TruncatedSeries(monoid, sr, n, {f.value: sr.one})
        elif kind == ex.LSCALE:
            s = go(f.child).lmul(f.value)
        elif kind == ex.RSCALE:
            s = go(f.child).rmul(f.value)
        elif kind == ex.SUM:
            s = go(f.left) + go(f.right)
        elif kind == ex.PROD:
            s = go(f.left) * go(f.right)
        elif kind == ex.STAR:
            inner = go(f.child)
            if sr.star(inner.constant()) is None:
                raise InvalidExpression(f.child, inner.constant(), sr)
            s = inner.star(star_order)
        else:
            raise AssertionError(kind)
        memo[f] = s
        return s

    return go(e)


class UnsupportedOperation(ValueError):
    pass


def quotient(s: TruncatedSeries, u) -> TruncatedSeries:
    """Left quotient ``u^-1 s``: the coefficient of ``v`` is that of ``u v`` in ``s``."""
    mon = s.monoid
    if not mon.is_free:
        raise UnsupportedOperation("series quotients are only defined over free monoids")
    mon.check(u)
    if len(u) > s.bound:
        raise ValueError(f"|u| = {len(u)} exceeds the series bound {s.bound}")
    out = {m[len(u):]: k for m, k in s.coeffs.items() if m.startswith(u)}
    return TruncatedSeries(mon, s.sr, s.bound - len(u), out)
