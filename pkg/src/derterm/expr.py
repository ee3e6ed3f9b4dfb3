"""Weighted rational expressions: hash-consed AST, parser, printer.

Nodes are interned, so two expressions are structurally equal exactly when
they are the same object; ``==`` and ``hash`` are identity-based and O(1).
Build nodes through the constructor functions (``zero``, ``one``, ``atom``,
``lscale``, ``rscale``, ``plus``, ``prod``, ``star``), never directly.
"""
from __future__ import annotations

import re
import threading
import weakref
from typing import Optional

from .semiring import Semiring, WeightSyntaxError

ZERO = "zero"
ONE = "one"
ATOM = "atom"
LSCALE = "lscale"
RSCALE = "rscale"
SUM = "sum"
PROD = "prod"
STAR = "star"


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


class InvalidExpression(ValueError):
    """Raised when a starred subexpression has a non-starrable constant term."""

    def __init__(self, sub: "Expr", constant, semiring: Semiring):
        self.sub = sub
        self.constant = constant
        super().__init__(
            f"invalid expression: constant term {semiring.format(constant)} of "
            f"{sub.to_text()} is not starrable in {semiring.name}")


class Expr:
    __slots__ = ("kind", "value", "args", "_fmt", "memo", "__weakref__")

    def __init__(self, kind, value, args, fmt):
        self.kind = kind
        self.value = value
        self.args = args
        self._fmt = fmt
        self.memo = {}

    @property
    def child(self) -> "Expr":
        return self.args[0]

    @property
    def left(self) -> "Expr":
        return self.args[0]

    @property
    def right(self) -> "Expr":
        return self.args[1]

    def to_text(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Expr({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __reduce__(self):
        raise TypeError("interned expressions are not picklable")


_table: "weakref.WeakValueDictionary[tuple, Expr]" = weakref.WeakValueDictionary()
_lock = threading.Lock()


def _value_key(value):
    # bool/int/Fraction compare equal across types; keep them apart.
    return (type(value).__name__, value)


def _intern(kind, value, args, fmt=None) -> Expr:
    key = (kind, _value_key(value), args)
    e = _table.get(key)
    if e is not None:
        return e
    with _lock:
        e = _table.get(key)
        if e is None:
            e = Expr(kind, value, args, fmt)
            _table[key] = e
        return e


def zero() -> Expr:
    return _intern(ZERO, None, ())


def one() -> Expr:
    return _intern(ONE, None, ())


def atom(m, monoid) -> Expr:
    monoid.check(m)
    if monoid.length(m) == 0:
        raise ValueError("atom must have positive length")
    return _intern(ATOM, m, (), monoid.format)


def lscale(k, e: Expr, semiring: Semiring) -> Expr:
    return _intern(LSCALE, k, (e,), semiring.format)


def rscale(e: Expr, k, semiring: Semiring) -> Expr:
    return _intern(RSCALE, k, (e,), semiring.format)


def plus(e: Expr, f: Expr) -> Expr:
    return _intern(SUM, None, (e, f))


def prod(e: Expr, f: Expr) -> Expr:
    return _intern(PROD, None, (e, f))


def star(e: Expr) -> Expr:
    return _intern(STAR, None, (e,))


def times_right(k: Expr, g: Expr) -> Expr:
    """``K . G`` as used when re-indexing derived terms: ``1 . G`` is ``G``."""
    if k.kind == ONE:
        return g
    return prod(k, g)


# -- measures ---------------------------------------------------------------

def literal_length(e: Expr) -> int:
    """Number of atom leaves."""
    if e.kind == ATOM:
        return 1
    return sum(literal_length(c) for c in e.args)


def subexpressions(e: Expr):
    """Post-order traversal (children before parents, duplicates included)."""
    for c in e.args:
        yield from subexpressions(c)
    yield e


def depth(e: Expr) -> int:
    return 1 + max((depth(c) for c in e.args), default=0)


_INVALID = object()


def constant_term(e: Expr, sr: Semiring):
    """Constant term of ``e``, or ``None`` if ``e`` is not valid."""
    key = ("c", sr)
    hit = e.memo.get(key)
    if hit is None:
        hit = _constant_term(e, sr)
        e.memo[key] = _INVALID if hit is None else (hit,)
        return hit
    return None if hit is _INVALID else hit[0]


def _constant_term(e: Expr, sr: Semiring):
    kind = e.kind
    if kind == ZERO or kind == ATOM:
        return sr.zero
    if kind == ONE:
        return sr.one
    if kind == STAR:
        c = constant_term(e.child, sr)
        return None if c is None else sr.star(c)
    cs = [constant_term(c, sr) for c in e.args]
    if any(c is None for c in cs):
        return None
    if kind == LSCALE:
        return sr.mul(e.value, cs[0])
    if kind == RSCALE:
        return sr.mul(cs[0], e.value)
    if kind == SUM:
        return sr.add(cs[0], cs[1])
    if kind == PROD:
        return sr.mul(cs[0], cs[1])
    raise AssertionError(kind)


def find_invalid(e: Expr, sr: Semiring) -> Optional[Expr]:
    """Innermost starred subexpression whose constant term is not starrable."""
    for sub in subexpressions(e):
        if sub.kind == STAR and constant_term(sub.child, sr) is not None \
                and constant_term(sub, sr) is None:
            return sub.child
    return None


def require_valid(e: Expr, sr: Semiring):
    """Return ``c(e)``, raising :class:`InvalidExpression` if undefined."""
    c = constant_term(e, sr)
    if c is None:
        bad = find_invalid(e, sr)
        raise InvalidExpression(bad, constant_term(bad, sr), sr)
    return c


# -- printing ---------------------------------------------------------------

_LEVEL = {SUM: 0, PROD: 1, LSCALE: 2, STAR: 3, RSCALE: 3, ZERO: 4, ONE: 4, ATOM: 4}


def to_text(e: Expr, level: int = 0) -> str:
    """Render ``e`` in the concrete syntax accepted by :func:`parse`."""
    kind = e.kind
    if kind == ZERO:
        s = "\\z"
    elif kind == ONE:
        s = "\\e"
    elif kind == ATOM:
        s = e._fmt(e.value)
    elif kind == SUM:
        s = f"{to_text(e.left, 0)}+{to_text(e.right, 1)}"
    elif kind == PROD:
        s = f"{to_text(e.left, 1)}.{to_text(e.right, 2)}"
    elif kind == LSCALE:
        s = f"<{e._fmt(e.value)}>{to_text(e.child, 2)}"
    elif kind == STAR:
        s = f"{to_text(e.child, 3)}*"
    elif kind == RSCALE:
        s = f"{to_text(e.child, 3)}<{e._fmt(e.value)}>"
    else:
        raise AssertionError(kind)
    if _LEVEL[kind] < level:
        return f"({s})"
    return s


# -- parsing ----------------------------------------------------------------

_WORD = r"(?:\\e|[A-Za-z0-9]+)"
_PAREN_ATOM = re.compile(rf"\(\s*({_WORD})\s*(?:\|\s*({_WORD})\s*)?\)")
_LETTER = re.compile(r"[A-Za-z0-9]")


class _Parser:
    def __init__(self, text: str, monoid, semiring: Semiring):
        self.text = text
        self.pos = 0
        self.monoid = monoid
        self.sr = semiring

    def error(self, message, pos=None):
        raise ExprSyntaxError(message, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() == "+":
            self.pos += 1
            e = plus(e, self.term())
        return e

    def starts_factor(self, ch: str) -> bool:
        return ch in ("<", "\\", "(") or bool(ch and _LETTER.match(ch))

    def term(self) -> Expr:
        e = self.factor()
        while True:
            ch = self.peek()
            if ch == ".":
                self.pos += 1
                e = prod(e, self.factor())
            elif self.starts_factor(ch):
                e = prod(e, self.factor())
            else:
                return e

    def weight(self):
        start = self.pos
        self.pos += 1  # '<'
        end = self.text.find(">", self.pos)
        if end < 0:
            self.error("unterminated weight", start)
        try:
            k = self.sr.parse(self.text[self.pos:end])
        except WeightSyntaxError as exc:
            self.error(str(exc), start + 1)
        self.pos = end + 1
        return k

    def factor(self) -> Expr:
        ch = self.peek()
        if ch == "<":
            k = self.weight()
            return lscale(k, self.factor(), self.sr)
        e = self.base()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                e = star(e)
            elif ch == "<":
                e = rscale(e, self.weight(), self.sr)
            else:
                return e

    def make_atom(self, m, pos) -> Expr:
        if not self.monoid.contains(m):
            self.error(f"{m!r} is not an element of {self.monoid!r}", pos)
        if self.monoid.length(m) == 0:
            self.error("atom must have positive length", pos)
        return atom(m, self.monoid)

    def word(self, w: str) -> str:
        return "" if w in ("\\e", None) else w

    def pair_or_letter(self, first: str, second: Optional[str], pos: int) -> Expr:
        mon = self.monoid
        if mon.is_free:
            if second is not None:
                self.error("pair atoms need a product monoid (--alphabet2)", pos)
            return self.make_atom(self.word(first), pos)
        if second is not None:
            return self.make_atom((self.word(first), self.word(second)), pos)
        w = self.word(first)
        in1 = all(a in mon.alphabet for a in w)
        in2 = all(a in mon.alphabet2 for a in w)
        if in1 and in2 and w:
            self.error(f"ambiguous atom {w!r}: write it as {w}|\\e or \\e|{w}", pos)
        return self.make_atom((w, "") if in1 else ("", w), pos)

    def component(self) -> str:
        if self.text.startswith("\\e", self.pos):
            self.pos += 2
            return "\\e"
        if self.pos < len(self.text) and _LETTER.match(self.text[self.pos]):
            self.pos += 1
            return self.text[self.pos - 1]
        self.error("expected a letter or \\e")

    def base(self) -> Expr:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            m = _PAREN_ATOM.match(self.text, self.pos)
            if m and not (m.group(2) is None and m.group(1) == "\\e"):
                self.pos = m.end()
                return self.pair_or_letter(m.group(1), m.group(2), start)
            self.pos += 1
            e = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return e
        if ch == "\\":
            nxt = self.text[self.pos:self.pos + 2]
            if nxt == "\\z":
                self.pos += 2
                return zero()
            if nxt == "\\e":
                if self.text.startswith("|", self.pos + 2):
                    first = self.component()
                    self.pos += 1
                    return self.pair_or_letter(first, self.component(), start)
                self.pos += 2
                return one()
            self.error(f"unknown escape {nxt!r}")
        if ch and _LETTER.match(ch):
            first = self.component()
            if self.text.startswith("|", self.pos):
                self.pos += 1
                return self.pair_or_letter(first, self.component(), start)
            return self.pair_or_letter(first, None, start)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse(text: str, monoid, semiring: Semiring) -> Expr:
    """Parse ``text`` into an interned expression over ``monoid``/``semiring``."""
    return _Parser(text, monoid, semiring).parse()
