"""Weighted automata ``<I, E, T>``, conjugacy, morphisms and quotients.

States are indexed ``0..n-1``; ``labels`` carries an opaque label per state.
The transition matrix is sparse: ``transitions[(p, q)]`` is a nonzero
:class:`~derterm.series.Polynomial` whose monomials all have positive length.
Transfer matrices are dense lists of rows of weights.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence

from .semiring import Semiring
from .series import Polynomial, TruncatedSeries, poly_sum


class AutomatonError(ValueError):
    pass


class NotAMorphism(AutomatonError):
    pass


class WeightedAutomaton:
    __slots__ = ("monoid", "sr", "labels", "initial", "transitions", "final")

    def __init__(self, monoid, sr: Semiring, labels, initial, transitions, final):
        self.monoid = monoid
        self.sr = sr
        self.labels = list(labels)
        self.initial = list(initial)
        self.final = list(final)
        n = len(self.labels)
        if len(self.initial) != n or len(self.final) != n:
            raise AutomatonError("vector dimensions disagree with the state list")
        self.transitions = {}
        for (p, q), poly in transitions.items():
            if not (0 <= p < n and 0 <= q < n):
                raise AutomatonError(f"transition ({p}, {q}) out of range")
            for m, _ in poly.items():
                if monoid.length(m) == 0:
                    raise AutomatonError(f"transition ({p}, {q}) carries the identity")
            if poly:
                self.transitions[(p, q)] = poly

    @property
    def dim(self) -> int:
        return len(self.labels)

    def entry(self, p: int, q: int) -> Polynomial:
        return self.transitions.get((p, q)) or Polynomial(self.sr)

    def out(self, p: int):
        return [(q, poly) for (s, q), poly in self.transitions.items() if s == p]

    def __eq__(self, other) -> bool:
        """Bit-exact equality of ``I``, ``E`` and ``T`` (labels ignored)."""
        if not isinstance(other, WeightedAutomaton) or self.dim != other.dim:
            return False
        eq = self.sr.eq
        return (all(eq(x, y) for x, y in zip(self.initial, other.initial))
                and all(eq(x, y) for x, y in zip(self.final, other.final))
                and self.transitions.keys() == other.transitions.keys()
                and all(p == other.transitions[k] for k, p in self.transitions.items()))

    def __repr__(self) -> str:
        return f"<WeightedAutomaton dim={self.dim} transitions={len(self.transitions)}>"

    def matrix_text(self) -> str:
        """Human-readable ``I``, ``E``, ``T`` dump used by the CLI text format."""
        sr, mon = self.sr, self.monoid
        lines = ["I = (" + " ".join(sr.format(k) for k in self.initial) + ")", "E ="]
        for p in range(self.dim):
            lines.append("  (" + " ".join(self.entry(p, q).format(mon) for q in range(self.dim)) + ")")
        lines.append("T = (" + " ".join(sr.format(k) for k in self.final) + ")")
        return "\n".join(lines)


# -- behaviour --------------------------------------------------------------

def behaviour_coeff(a: WeightedAutomaton, m):
    """Coefficient of ``m`` in ``I . E* . T`` by memoised path factorisation."""
    sr, mon = a.sr, a.monoid
    ident = mon.identity
    outs = defaultdict(list)
    for (p, q), poly in a.transitions.items():
        for label, w in poly.items():
            outs[p].append((q, label, w))
    memo = {}

    def from_state(p, rest):
        key = (p, rest)
        if key in memo:
            return memo[key]
        acc = a.final[p] if rest == ident else sr.zero
        for q, label, w in outs[p]:
            r = mon.strip_prefix(label, rest)
            if r is not None:
                acc = sr.add(acc, sr.mul(w, from_state(q, r)))
        memo[key] = acc
        return acc

    total = sr.zero
    for p, k in enumerate(a.initial):
        if not sr.is_zero(k):
            total = sr.add(total, sr.mul(k, from_state(p, m)))
    return total


def behaviour_series(a: WeightedAutomaton, n: int) -> TruncatedSeries:
    """All coefficients of the behaviour up to length ``n`` (forward propagation)."""
    sr, mon = a.sr, a.monoid
    outs = defaultdict(list)
    for (p, q), poly in a.transitions.items():
        for label, w in poly.items():
            outs[p].append((q, label, w, mon.length(label)))
    # layer[length] maps (state, word) -> accumulated left weight
    layers = [defaultdict(lambda: sr.zero) for _ in range(n + 1)]
    for p, k in enumerate(a.initial):
        if not sr.is_zero(k):
            layers[0][(p, mon.identity)] = k
    coeffs = {}
    for length in range(n + 1):
        for (p, word), w in layers[length].items():
            if sr.is_zero(w):
                continue
            t = sr.mul(w, a.final[p])
            if not sr.is_zero(t):
                coeffs[word] = sr.add(coeffs[word], t) if word in coeffs else t
            for q, label, x, ll in outs[p]:
                if length + ll <= n:
                    key = (q, mon.concat(word, label))
                    layer = layers[length + ll]
                    layer[key] = sr.add(layer[key], sr.mul(w, x))
    return TruncatedSeries(mon, sr, n, coeffs)


# -- matrices ---------------------------------------------------------------

def identity_matrix(sr: Semiring, n: int):
    return [[sr.one if i == j else sr.zero for j in range(n)] for i in range(n)]


def matmul(sr: Semiring, x, y):
    if not x:
        return []
    inner = len(y)
    cols = len(y[0]) if y else 0
    out = []
    for row in x:
        if len(row) != inner:
            raise AutomatonError("matrix dimensions do not chain")
        nz = [(k, w) for k, w in enumerate(row) if not sr.is_zero(w)]
        out.append([sr.sum(sr.mul(w, y[k][j]) for k, w in nz) for j in range(cols)])
    return out


def block_diagonal(sr: Semiring, *blocks):
    rows = sum(len(b) for b in blocks)
    cols = sum(len(b[0]) if b else 0 for b in blocks)
    out = [[sr.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, w in enumerate(row):
                out[r0 + i][c0 + j] = w
        r0 += len(b)
        c0 += len(b[0]) if b else 0
    return out


def is_conjugate(a: WeightedAutomaton, b: WeightedAutomaton, x) -> bool:
    """True iff ``I X = J``, ``E X = X F`` and ``T = X U`` hold exactly."""
    return not conjugacy_failures(a, b, x)


def conjugacy_failures(a: WeightedAutomaton, b: WeightedAutomaton, x) -> list[str]:
    sr = a.sr
    if len(x) != a.dim or any(len(row) != b.dim for row in x):
        raise AutomatonError(f"transfer matrix must be {a.dim} x {b.dim}")
    bad = []
    for j in range(b.dim):
        ix = sr.sum(sr.mul(a.initial[i], x[i][j]) for i in range(a.dim))
        if not sr.eq(ix, b.initial[j]):
            bad.append(f"(I X)[{j}] != J[{j}]")
    for i in range(a.dim):
        xu = sr.sum(sr.mul(x[i][k], b.final[k]) for k in range(b.dim))
        if not sr.eq(a.final[i], xu):
            bad.append(f"T[{i}] != (X U)[{i}]")
    ex_ = defaultdict(list)
    for (i, k), poly in a.transitions.items():
        for j in range(b.dim):
            if not sr.is_zero(x[k][j]):
                ex_[(i, j)].append(poly.rmul(x[k][j]))
    xf = defaultdict(list)
    for (k, j), poly in b.transitions.items():
        for i in range(a.dim):
            if not sr.is_zero(x[i][k]):
                xf[(i, j)].append(poly.lmul(x[i][k]))
    for key in set(ex_) | set(xf):
        if poly_sum(sr, ex_.get(key, ())) != poly_sum(sr, xf.get(key, ())):
            bad.append(f"(E X)[{key}] != (X F)[{key}]")
    return bad


# -- morphisms --------------------------------------------------------------

@dataclass(frozen=True)
class StateMap:
    """Surjective map from ``range(len(image))`` onto ``range(size)``."""

    image: tuple
    size: int

    def __post_init__(self):
        if set(self.image) != set(range(self.size)):
            raise AutomatonError("state map is not surjective onto its codomain")

    @classmethod
    def identity(cls, n: int) -> "StateMap":
        return cls(tuple(range(n)), n)

    @classmethod
    def from_keys(cls, keys: Sequence) -> "StateMap":
        """Merge states with equal keys; classes are numbered by first occurrence."""
        index = {}
        image = []
        for k in keys:
            if k not in index:
                index[k] = len(index)
            image.append(index[k])
        return cls(tuple(image), len(index))

    def classes(self):
        out = [[] for _ in range(self.size)]
        for q, r in enumerate(self.image):
            out[r].append(q)
        return out

    def then(self, other: "StateMap") -> "StateMap":
        """Composition: first ``self``, then ``other``."""
        return StateMap(tuple(other.image[r] for r in self.image), other.size)

    def amalgamation(self, sr: Semiring):
        return [[sr.one if self.image[q] == r else sr.zero for r in range(self.size)]
                for q in range(len(self.image))]

    def selection(self, sr: Semiring, representatives: Optional[Sequence[int]] = None):
        reps = self.representatives(representatives)
        return [[sr.one if q == reps[r] else sr.zero for q in range(len(self.image))]
                for r in range(self.size)]

    def representatives(self, representatives=None) -> list[int]:
        if representatives is None:
            return [cls[0] for cls in self.classes()]
        reps = list(representatives)
        if len(reps) != self.size or any(self.image[q] != r for r, q in enumerate(reps)):
            raise AutomatonError("representatives must pick one state per class")
        return reps


def _ex_rows(a: WeightedAutomaton, phi: StateMap):
    """Rows of ``E . X_phi`` as dicts class -> Polynomial."""
    rows = [defaultdict(list) for _ in range(a.dim)]
    for (p, q), poly in a.transitions.items():
        rows[p][phi.image[q]].append(poly)
    return [{r: poly_sum(a.sr, ps) for r, ps in row.items()} for row in rows]


def _same_row(x: dict, y: dict) -> bool:
    keys = {k for k, p in x.items() if p} | {k for k, p in y.items() if p}
    return all(x.get(k) == y.get(k) for k in keys)


def check_morphism(a: WeightedAutomaton, phi: StateMap) -> tuple[bool, str]:
    """Whether ``phi`` is a morphism of ``a``, with a diagnostic naming the first violation."""
    if len(phi.image) != a.dim:
        return False, f"map has {len(phi.image)} sources, automaton has {a.dim} states"
    rows = _ex_rows(a, phi)
    for cls in phi.classes():
        p = cls[0]
        for q in cls[1:]:
            if not a.sr.eq(a.final[p], a.final[q]):
                return False, (f"states {p} and {q} have different final weights "
                               f"{a.sr.format(a.final[p])} and {a.sr.format(a.final[q])}")
            if not _same_row(rows[p], rows[q]):
                return False, f"states {p} and {q} have different rows in E.X"
    return True, ""


def quotient_by(a: WeightedAutomaton, phi: StateMap, representatives=None,
                labels=None) -> WeightedAutomaton:
    """``phi(A) = <I X, Y E X, Y T>``; raises :class:`NotAMorphism` otherwise."""
    ok, why = check_morphism(a, phi)
    if not ok:
        raise NotAMorphism(f"not a morphism: {why}")
    sr = a.sr
    reps = phi.representatives(representatives)
    initial = [sr.zero] * phi.size
    for q, k in enumerate(a.initial):
        r = phi.image[q]
        initial[r] = sr.add(initial[r], k)
    rows = _ex_rows(a, phi)
    transitions = {}
    for r, q in enumerate(reps):
        for s, poly in rows[q].items():
            if poly:
                transitions[(r, s)] = poly
    final = [a.final[q] for q in reps]
    if labels is None:
        labels = [a.labels[q] for q in reps]
    return WeightedAutomaton(a.monoid, sr, labels, initial, transitions, final)


# -- export -----------------------------------------------------------------

def _label_text(label) -> str:
    return label if isinstance(label, str) else str(label)


def to_json(a: WeightedAutomaton) -> str:
    sr, mon = a.sr, a.monoid
    names = [_label_text(l) for l in a.labels]
    if len(set(names)) != len(names):
        # T_E: the initial state carries the same expression as a core state
        names = [f"{i}:{n}" for i, n in enumerate(names)]
    doc = {
        "states": names,
        "initial": {names[p]: sr.format(k) for p, k in enumerate(a.initial) if not sr.is_zero(k)},
        "final": {names[p]: sr.format(k) for p, k in enumerate(a.final) if not sr.is_zero(k)},
        "transitions": [
            {"from": names[p], "to": names[q], "weight": sr.format(w), "label": mon.format(m)}
            for (p, q) in sorted(a.transitions)
            for m, w in sorted(a.transitions[(p, q)].items(), key=lambda t: mon.sort_key(t[0]))
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _weight_prefix(sr, w) -> str:
    if sr.eq(w, sr.one):
        return ""
    neg = sr.name in ("int", "rational", "rational-analytic") and sr.eq(sr.add(w, sr.one), sr.zero)
    return "-" if neg else sr.format(w)


def to_dot(a: WeightedAutomaton, name: str = "A") -> str:
    """Graphviz rendering: initial arrows from invisible points, finals as double circles."""
    sr, mon = a.sr, a.monoid
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=circle];']
    for p, label in enumerate(a.labels):
        shape = "doublecircle" if not sr.is_zero(a.final[p]) else "circle"
        xlabel = ""
        if not sr.is_zero(a.final[p]) and a.final[p] != sr.one:
            xlabel = f", xlabel={_dot_quote(sr.format(a.final[p]))}"
        lines.append(f"  {p} [label={_dot_quote(_label_text(label))}, shape={shape}{xlabel}];")
    for p, k in enumerate(a.initial):
        if not sr.is_zero(k):
            lines.append(f"  i{p} [shape=point];")
            weight = "" if k == sr.one else f" [label={_dot_quote(sr.format(k))}]"
            lines.append(f"  i{p} -> {p}{weight};")
    for (p, q) in sorted(a.transitions):
        for m, w in sorted(a.transitions[(p, q)].items(), key=lambda t: mon.sort_key(t[0])):
            text = f"{_weight_prefix(sr, w)}{mon.format(m)}"
            lines.append(f"  {p} -> {q} [label={_dot_quote(text)}];")
    lines.append("}")
    return "\n".join(lines)
