"""Antimirov-style derivation over free monoids, and the differential.

:func:`derive` has its own recursion and shares no code with
:mod:`derterm.derived` beyond the constant term and the ``1 . G = G``
re-indexing rule, so :func:`reconcile` compares two independent
computations.
"""
from __future__ import annotations

from . import expr as ex
from .derived import n_vector
from .expr import Expr, require_valid, times_right
from .semiring import Semiring
from .series import UnsupportedOperation


class LinearCombination:
    """Finite ``sum k_H H`` over interned expressions; zero weights are dropped."""

    __slots__ = ("sr", "terms")

    def __init__(self, sr: Semiring, terms=()):
        self.sr = sr
        self.terms = {}
        for h, k in (terms.items() if isinstance(terms, dict) else terms):
            self._accumulate(h, k)

    def _accumulate(self, h: Expr, k):
        sr = self.sr
        if h in self.terms:
            k = sr.add(self.terms[h], k)
        if sr.is_zero(k):
            self.terms.pop(h, None)
        else:
            self.terms[h] = k

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        out = LinearCombination(self.sr, self.terms)
        for h, k in other.terms.items():
            out._accumulate(h, k)
        return out

    def lmul(self, k) -> "LinearCombination":
        return LinearCombination(self.sr, [(h, self.sr.mul(k, w)) for h, w in self.terms.items()])

    def times_expr(self, g: Expr) -> "LinearCombination":
        """Right-multiply every expression of the combination by ``g``."""
        return LinearCombination(self.sr, [(times_right(h, g), w) for h, w in self.terms.items()])

    def times_weight(self, k) -> "LinearCombination":
        """Right-multiply every expression by the scalar ``k`` (``H -> H k``)."""
        return LinearCombination(self.sr, [(ex.rscale(h, k, self.sr), w) for h, w in self.terms.items()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return (self.terms.keys() == other.terms.keys()
                and all(self.sr.eq(k, other.terms[h]) for h, k in self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def __repr__(self) -> str:
        inner = " + ".join(f"<{self.sr.format(k)}>({h})" for h, k in self.terms.items())
        return f"LinearCombination({inner or '0'})"


def _require_free(monoid):
    if not monoid.is_free:
        raise UnsupportedOperation("derivation is only defined over free monoids")


def derive(e: Expr, a: str, monoid, sr: Semiring) -> LinearCombination:
    """The derivation of ``e`` with respect to the letter ``a``."""
    _require_free(monoid)
    if a not in monoid.alphabet:
        raise ValueError(f"{a!r} is not a letter of {monoid!r}")
    require_valid(e, sr)
    memo = {}

    def go(f: Expr) -> LinearCombination:
        if f in memo:
            return memo[f]
        kind = f.kind
        if kind in (ex.ZERO, ex.ONE):
            out = LinearCombination(sr)
        elif kind == ex.ATOM:
            if len(f.value) != 1:
                raise UnsupportedOperation(
                    f"derivation needs single-letter atoms, found {monoid.format(f.value)}")
            out = LinearCombination(sr, {ex.one(): sr.one} if f.value == a else {})
        elif kind == ex.LSCALE:
            out = go(f.child).lmul(f.value)
        elif kind == ex.RSCALE:
            out = go(f.child).times_weight(f.value)
        elif kind == ex.SUM:
            out = go(f.left) + go(f.right)
        elif kind == ex.PROD:
            cf = ex.constant_term(f.left, sr)
            out = go(f.left).times_expr(f.right) + go(f.right).lmul(cf)
        elif kind == ex.STAR:
            cs = ex.constant_term(f, sr)
            out = go(f.child).times_expr(f).lmul(cs)
        else:
            raise AssertionError(kind)
        memo[f] = out
        return out

    return go(e)


def differential(e: Expr, sr: Semiring) -> list:
    """``dE`` as ``[(polynomial N(E)_H, H), ...]`` over the derived terms ``H``."""
    require_valid(e, sr)
    return list((p, h) for h, p in n_vector(e, sr).items())


def letter_slice(e: Expr, a: str, monoid, sr: Semiring) -> LinearCombination:
    """Coefficient of the letter ``a`` in ``dE``: ``sum_H N(E)_H(a) H``."""
    _require_free(monoid)
    out = LinearCombination(sr)
    for p, h in differential(e, sr):
        for m, k in p.items():
            if len(m) != 1:
                raise UnsupportedOperation(
                    f"letter slices need single-letter labels, found {monoid.format(m)}")
            if m == a:
                out._accumulate(h, k)
    return out


def reconcile(e: Expr, a: str, monoid, sr: Semiring) -> bool:
    """Whether ``derive(e, a)`` equals the ``a``-slice of the differential."""
    return derive(e, a, monoid, sr) == letter_slice(e, a, monoid, sr)
