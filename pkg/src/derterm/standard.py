"""Standard automata and the position (Glushkov) automaton of an expression.

A standard automaton is stored by blocks: the initial row ``J`` towards the
core states, the core matrix ``F``, the constant term ``c`` and the core
final vector ``U``.  The initial state is implicit and always comes first
when the automaton is flattened.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import expr as ex
from .automaton import WeightedAutomaton
from .expr import Expr, require_valid
from .semiring import Semiring
from .series import Polynomial


@dataclass(frozen=True)
class StandardAutomaton:
    monoid: object
    sr: Semiring
    J: tuple            # Polynomial per core state
    F: dict             # (i, j) -> nonzero Polynomial, core indices
    c: object
    U: tuple            # weight per core state
    labels: tuple = ()  # core state labels
    initial_label: object = "i"

    def __post_init__(self):
        if len(self.J) != len(self.U):
            raise ValueError("J and U must have the same dimension")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, len(self.J) + 1)))

    @property
    def dim(self) -> int:
        """Number of core states (the initial state is not counted)."""
        return len(self.J)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.F.get((i, j)) or Polynomial(self.sr)

    def row(self, i: int) -> dict:
        return {j: p for (s, j), p in self.F.items() if s == i and p}

    def to_automaton(self) -> WeightedAutomaton:
        sr = self.sr
        n = self.dim
        transitions = {(0, j + 1): p for j, p in enumerate(self.J) if p}
        transitions.update({(i + 1, j + 1): p for (i, j), p in self.F.items() if p})
        return WeightedAutomaton(
            self.monoid, sr, (self.initial_label,) + tuple(self.labels),
            [sr.one] + [sr.zero] * n, transitions, [self.c] + list(self.U))

    def relabel(self, labels, initial_label=None) -> "StandardAutomaton":
        return replace(self, labels=tuple(labels),
                       initial_label=self.initial_label if initial_label is None else initial_label)


def from_automaton(a: WeightedAutomaton) -> StandardAutomaton:
    """Read the blocks back off a flattened standard automaton (state 0 initial)."""
    if not is_standard(a):
        raise ValueError("automaton is not standard")
    n = a.dim - 1
    J = tuple(a.entry(0, j + 1) for j in range(n))
    F = {(i - 1, j - 1): p for (i, j), p in a.transitions.items() if i != 0}
    return StandardAutomaton(a.monoid, a.sr, J, F, a.final[0], tuple(a.final[1:]),
                             tuple(a.labels[1:]), a.labels[0])


def is_standard(a: WeightedAutomaton) -> bool:
    """Unit initial vector at state 0 and no transition entering state 0."""
    sr = a.sr
    if a.dim == 0 or not sr.eq(a.initial[0], sr.one):
        return False
    if any(not sr.is_zero(k) for k in a.initial[1:]):
        return False
    return all(q != 0 for (_, q) in a.transitions)


# -- base cases -------------------------------------------------------------

def standard_zero(monoid, sr: Semiring) -> StandardAutomaton:
    return StandardAutomaton(monoid, sr, (), {}, sr.zero, ())


def standard_one(monoid, sr: Semiring) -> StandardAutomaton:
    return StandardAutomaton(monoid, sr, (), {}, sr.one, ())


def standard_atom(m, monoid, sr: Semiring) -> StandardAutomaton:
    return StandardAutomaton(monoid, sr, (Polynomial.monomial(sr, m),), {}, sr.zero, (sr.one,))


# -- operations -------------------------------------------------------------

def scale_left(k, a: StandardAutomaton) -> StandardAutomaton:
    sr = a.sr
    return replace(a, J=tuple(p.lmul(k) for p in a.J), c=sr.mul(k, a.c))


def scale_right(a: StandardAutomaton, k) -> StandardAutomaton:
    sr = a.sr
    return replace(a, c=sr.mul(a.c, k), U=tuple(sr.mul(u, k) for u in a.U))


def _check_compatible(a: StandardAutomaton, b: StandardAutomaton):
    if a.sr is not b.sr or a.monoid != b.monoid:
        raise ValueError("standard automata over different semirings or monoids")


def _shifted(F: dict, offset: int) -> dict:
    return {(i + offset, j + offset): p for (i, j), p in F.items()}


def sum_(a: StandardAutomaton, b: StandardAutomaton) -> StandardAutomaton:
    _check_compatible(a, b)
    sr = a.sr
    F = dict(a.F)
    F.update(_shifted(b.F, a.dim))
    return StandardAutomaton(a.monoid, sr, a.J + b.J, F, sr.add(a.c, b.c), a.U + b.U,
                             a.labels + b.labels)


def product(a: StandardAutomaton, b: StandardAutomaton) -> StandardAutomaton:
    _check_compatible(a, b)
    sr = a.sr
    n = a.dim
    J = a.J + tuple(k.lmul(a.c) for k in b.J)
    F = dict(a.F)
    for i, u in enumerate(a.U):
        if sr.is_zero(u):
            continue
        for j, k in enumerate(b.J):
            p = k.lmul(u)
            if p:
                F[(i, n + j)] = p
    F.update(_shifted(b.F, n))
    U = tuple(sr.mul(u, b.c) for u in a.U) + b.U
    return StandardAutomaton(a.monoid, sr, J, F, sr.mul(a.c, b.c), U, a.labels + b.labels)


class NotStarrableError(ValueError):
    pass


def star(a: StandardAutomaton) -> StandardAutomaton:
    sr = a.sr
    cs = sr.star(a.c)
    if cs is None:
        raise NotStarrableError(f"constant term {sr.format(a.c)} is not starrable in {sr.name}")
    J = tuple(p.lmul(cs) for p in a.J)
    F = dict(a.F)
    for i, u in enumerate(a.U):
        if sr.is_zero(u):
            continue
        for j, p in enumerate(J):
            extra = p.lmul(u)
            if extra:
                q = F.get((i, j))
                q = extra if q is None else q + extra
                if q:
                    F[(i, j)] = q
                else:
                    F.pop((i, j), None)
    U = tuple(sr.mul(u, cs) for u in a.U)
    return replace(a, J=J, F=F, c=cs, U=U)


# -- position automaton -----------------------------------------------------

def position_automaton(e: Expr, monoid, sr: Semiring) -> StandardAutomaton:
    """The standard automaton of ``e``: one core state per atom occurrence."""
    require_valid(e, sr)

    def go(f: Expr) -> StandardAutomaton:
        kind = f.kind
        if kind == ex.ZERO:
            return standard_zero(monoid, sr)
        if kind == ex.ONE:
            return standard_one(monoid, sr)
        if kind == ex.ATOM:
            return standard_atom(f.value, monoid, sr)
        if kind == ex.LSCALE:
            return scale_left(f.value, go(f.child))
        if kind == ex.RSCALE:
            return scale_right(go(f.child), f.value)
        if kind == ex.SUM:
            return sum_(go(f.left), go(f.right))
        if kind == ex.PROD:
            return product(go(f.left), go(f.right))
        if kind == ex.STAR:
            return star(go(f.child))
        raise AssertionError(kind)

    a = go(e)
    return a.relabel(range(1, a.dim + 1), initial_label=0)
