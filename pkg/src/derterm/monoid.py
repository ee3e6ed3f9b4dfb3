"""Graded monoids: free monoids ``A*`` and binary products ``A* x B*``.

Free-monoid elements are ``str`` words over single-character letters;
product elements are pairs ``(u, v)`` of such words.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional


class MonoidError(ValueError):
    pass


def _check_alphabet(letters: Iterable[str]) -> tuple[str, ...]:
    letters = tuple(letters)
    if not letters:
        raise MonoidError("alphabet must not be empty")
    for a in letters:
        if len(a) != 1 or not a.isalnum():
            raise MonoidError(f"letters must be single alphanumeric characters, got {a!r}")
    if len(set(letters)) != len(letters):
        raise MonoidError(f"alphabet letters must be distinct: {letters}")
    return tuple(sorted(letters))


def _words(alphabet: tuple[str, ...], n: int) -> Iterator[str]:
    for length in range(n + 1):
        for t in itertools.product(alphabet, repeat=length):
            yield "".join(t)


class FreeMonoid:
    is_free = True

    def __init__(self, alphabet: Iterable[str]):
        self.alphabet = _check_alphabet(alphabet)
        self.identity = ""

    def __eq__(self, other):
        return isinstance(other, FreeMonoid) and other.alphabet == self.alphabet

    def __hash__(self):
        return hash(("free", self.alphabet))

    def __repr__(self):
        return f"FreeMonoid({','.join(self.alphabet)})"

    def contains(self, m) -> bool:
        return isinstance(m, str) and all(a in self.alphabet for a in m)

    def check(self, m):
        if not self.contains(m):
            raise MonoidError(f"{m!r} is not an element of {self!r}")
        return m

    def length(self, m: str) -> int:
        return len(m)

    def multiply(self, m: str, n: str) -> str:
        self.check(m)
        self.check(n)
        return m + n

    def concat(self, m: str, n: str) -> str:
        return m + n

    def strip_prefix(self, prefix: str, m: str) -> Optional[str]:
        """Return ``r`` with ``prefix . r == m``, or ``None``."""
        return m[len(prefix):] if m.startswith(prefix) else None

    def enumerate_up_to(self, n: int) -> list[str]:
        if n < 0:
            raise MonoidError("length bound must be non-negative")
        return list(_words(self.alphabet, n))

    def sort_key(self, m: str):
        return (len(m), m)

    def format(self, m: str) -> str:
        """Atom syntax for ``m`` (``\\e`` for the identity)."""
        if m == "":
            return "\\e"
        return m if len(m) == 1 else f"({m})"

    def format_word(self, m: str) -> str:
        return m

    def parse_word(self, text: str) -> str:
        text = text.strip()
        if text in ("\\e", "ε"):
            return ""
        return self.check(text)


class ProductMonoid:
    """``A* x B*`` with componentwise concatenation and ``|u|+|v|`` as length."""

    is_free = False

    def __init__(self, alphabet: Iterable[str], alphabet2: Iterable[str]):
        self.alphabet = _check_alphabet(alphabet)
        self.alphabet2 = _check_alphabet(alphabet2)
        self.identity = ("", "")

    def __eq__(self, other):
        return (isinstance(other, ProductMonoid) and other.alphabet == self.alphabet
                and other.alphabet2 == self.alphabet2)

    def __hash__(self):
        return hash(("product", self.alphabet, self.alphabet2))

    def __repr__(self):
        return f"ProductMonoid({','.join(self.alphabet)} | {','.join(self.alphabet2)})"

    def contains(self, m) -> bool:
        return (isinstance(m, tuple) and len(m) == 2
                and isinstance(m[0], str) and isinstance(m[1], str)
                and all(a in self.alphabet for a in m[0])
                and all(b in self.alphabet2 for b in m[1]))

    def check(self, m):
        if not self.contains(m):
            raise MonoidError(f"{m!r} is not an element of {self!r}")
        return m

    def length(self, m) -> int:
        return len(m[0]) + len(m[1])

    def multiply(self, m, n):
        self.check(m)
        self.check(n)
        return (m[0] + n[0], m[1] + n[1])

    def concat(self, m, n):
        return (m[0] + n[0], m[1] + n[1])

    def strip_prefix(self, prefix, m):
        u, v = prefix
        if m[0].startswith(u) and m[1].startswith(v):
            return (m[0][len(u):], m[1][len(v):])
        return None

    def enumerate_up_to(self, n: int) -> list:
        if n < 0:
            raise MonoidError("length bound must be non-negative")
        out = []
        for total in range(n + 1):
            for i in range(total, -1, -1):
                for u in itertools.product(self.alphabet, repeat=i):
                    for v in itertools.product(self.alphabet2, repeat=total - i):
                        out.append(("".join(u), "".join(v)))
        return out

    def sort_key(self, m):
        return (len(m[0]) + len(m[1]), -len(m[0]), m[0], m[1])

    def format(self, m) -> str:
        u, v = m
        su = u or "\\e"
        sv = v or "\\e"
        if len(u) <= 1 and len(v) <= 1:
            return f"{su}|{sv}"
        return f"({su}|{sv})"

    def format_word(self, m) -> str:
        return f"{m[0]}|{m[1]}"

    def parse_word(self, text: str):
        text = text.strip()
        if "|" not in text:
            if text in ("", "\\e", "ε"):
                return ("", "")
            raise MonoidError(f"product-monoid words are written u|v, got {text!r}")
        u, v = text.split("|", 1)
        u = "" if u.strip() in ("\\e", "ε") else u.strip()
        v = "" if v.strip() in ("\\e", "ε") else v.strip()
        return self.check((u, v))


def make_monoid(alphabet: Iterable[str], alphabet2: Optional[Iterable[str]] = None):
    if alphabet2 is None:
        return FreeMonoid(alphabet)
    return ProductMonoid(alphabet, alphabet2)
