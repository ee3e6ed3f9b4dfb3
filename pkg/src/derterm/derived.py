"""Derived terms, N-vectors and the derived-term automata ``T_E`` and ``D_E``.

``T_E`` is built by the same induction as the position automaton, but after
every sum and product the states carrying equal derived terms are merged by
a morphism.  Each step also records its amalgamation matrix, so the result
carries a transfer matrix ``X`` with ``S_E`` conjugate to ``T_E`` (and to
``D_E``) by ``X``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import expr as ex
from . import standard as st
from .automaton import (StateMap, WeightedAutomaton, block_diagonal, matmul,
                        quotient_by)
from .expr import Expr, require_valid, times_right
from .semiring import Semiring
from .series import Polynomial


class ClaimViolation(RuntimeError):
    """An invariant of the construction failed; always a bug."""


def derived_terms(e: Expr, sr: Semiring) -> tuple:
    """``D(E)`` as a tuple in construction order (left operand first)."""
    key = ("D", sr)
    hit = e.memo.get(key)
    if hit is not None:
        return hit
    kind = e.kind
    if kind in (ex.ZERO, ex.ONE):
        out = ()
    elif kind == ex.ATOM:
        out = (ex.one(),)
    elif kind == ex.LSCALE:
        out = derived_terms(e.child, sr)
    elif kind == ex.RSCALE:
        out = tuple(ex.rscale(k, e.value, sr) for k in derived_terms(e.child, sr))
    elif kind == ex.SUM:
        out = _union(derived_terms(e.left, sr), derived_terms(e.right, sr))
    elif kind == ex.PROD:
        out = _union(tuple(times_right(k, e.right) for k in derived_terms(e.left, sr)),
                     derived_terms(e.right, sr))
    elif kind == ex.STAR:
        out = tuple(times_right(k, e) for k in derived_terms(e.child, sr))
    else:
        raise AssertionError(kind)
    e.memo[key] = out
    return out


def _union(xs: tuple, ys: tuple) -> tuple:
    seen = set(xs)
    return xs + tuple(y for y in ys if y not in seen)


def n_vector(e: Expr, sr: Semiring) -> dict:
    """``N(E)``: derived term -> nonzero Polynomial, in ``D(E)`` order."""
    key = ("N", sr)
    hit = e.memo.get(key)
    if hit is not None:
        return hit
    kind = e.kind
    if kind in (ex.ZERO, ex.ONE):
        raw = {}
    elif kind == ex.ATOM:
        raw = {ex.one(): Polynomial.monomial(sr, e.value)}
    elif kind == ex.LSCALE:
        raw = {k: p.lmul(e.value) for k, p in n_vector(e.child, sr).items()}
    elif kind == ex.RSCALE:
        raw = {ex.rscale(k, e.value, sr): p for k, p in n_vector(e.child, sr).items()}
    elif kind == ex.SUM:
        raw = _add_vectors(n_vector(e.left, sr), n_vector(e.right, sr))
    elif kind == ex.PROD:
        f, g = e.left, e.right
        cf = require_valid(f, sr)
        left = {times_right(k, g): p for k, p in n_vector(f, sr).items()}
        right = {k: p.lmul(cf) for k, p in n_vector(g, sr).items()}
        raw = _add_vectors(left, right)
    elif kind == ex.STAR:
        cs = require_valid(e, sr)
        raw = {times_right(k, e): p.lmul(cs) for k, p in n_vector(e.child, sr).items()}
    else:
        raise AssertionError(kind)
    out = {k: raw[k] for k in derived_terms(e, sr) if k in raw and raw[k]}
    e.memo[key] = out
    return out


def _add_vectors(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, p in y.items():
        out[k] = out[k] + p if k in out else p
    return out


# -- the standard derived-term automaton ------------------------------------

@dataclass(frozen=True)
class DerivedTermAutomaton:
    """A derived-term automaton together with its witness back to ``S_E``.

    ``transfer`` is the composed amalgamation matrix; ``S_E`` (flattened,
    initial state first) is conjugate to ``automaton`` by it.  ``standard``
    holds the block form when the automaton is ``T_E``, and is ``None`` for
    ``D_E`` after the initial state was merged.
    """

    expression: Expr
    terms: tuple
    automaton: WeightedAutomaton
    transfer: list
    standard: Optional[st.StandardAutomaton]

    @property
    def merged_initial(self) -> bool:
        return self.standard is None


_INITIAL = object()


def _merge(a: st.StandardAutomaton) -> tuple[st.StandardAutomaton, list]:
    """Quotient a standard automaton by equality of its core labels.

    Returns the quotient and the core amalgamation matrix.
    """
    phi = StateMap.from_keys((_INITIAL,) + tuple(a.labels))
    flat = quotient_by(a.to_automaton(), phi)
    merged = st.from_automaton(flat)
    core = StateMap(tuple(r - 1 for r in phi.image[1:]), phi.size - 1)
    return merged, core.amalgamation(a.sr)


def check_claims(e: Expr, t: st.StandardAutomaton, sr: Semiring) -> list[str]:
    """Failures of the running invariants of ``T_E`` (empty list when all hold).

    Checks the state set against ``D(E)``, ``c = c(E)``, ``J = N(E)``,
    ``U_K = c(K)`` and, for every ``K``, that row ``K`` of the core matrix is
    ``N(K)``.
    """
    bad = []
    terms = derived_terms(e, sr)
    if tuple(t.labels) != terms:
        return [f"states of T_E are not D(E) for {e}"]
    index = {k: i for i, k in enumerate(terms)}
    if not sr.eq(t.c, ex.constant_term(e, sr)):
        bad.append(f"constant term mismatch for {e}")
    nv = n_vector(e, sr)
    for i, k in enumerate(terms):
        want = nv.get(k, Polynomial(sr))
        if t.J[i] != want:
            bad.append(f"initial row: J[{k}] != N({e})[{k}]")
        if not sr.eq(t.U[i], ex.constant_term(k, sr)):
            bad.append(f"final vector: U[{k}] != c({k})")
        nk = n_vector(k, sr)
        outside = [h for h in nk if h not in index]
        if outside:
            bad.append(f"core rows: N({k}) has support outside D({e}): {outside[0]}")
        row = t.row(i)
        for j, h in enumerate(terms):
            if row.get(j, Polynomial(sr)) != nk.get(h, Polynomial(sr)):
                bad.append(f"core rows: F[{k}, {h}] != N({k})[{h}]")
    return bad


def _standard_derived(e: Expr, monoid, sr: Semiring, check: bool):
    """``(T_E, X)`` where ``X`` is the core transfer matrix from ``S_E``."""
    kind = e.kind
    if kind == ex.ZERO:
        t, x = st.standard_zero(monoid, sr), []
    elif kind == ex.ONE:
        t, x = st.standard_one(monoid, sr), []
    elif kind == ex.ATOM:
        t = st.standard_atom(e.value, monoid, sr).relabel((ex.one(),))
        x = [[sr.one]]
    elif kind == ex.LSCALE:
        tf, x = _standard_derived(e.child, monoid, sr, check)
        t = st.scale_left(e.value, tf)
    elif kind == ex.RSCALE:
        tf, x = _standard_derived(e.child, monoid, sr, check)
        t = st.scale_right(tf, e.value).relabel(ex.rscale(k, e.value, sr) for k in tf.labels)
    elif kind == ex.STAR:
        tf, x = _standard_derived(e.child, monoid, sr, check)
        t = st.star(tf).relabel(times_right(k, e) for k in tf.labels)
    elif kind in (ex.SUM, ex.PROD):
        tf, xf = _standard_derived(e.left, monoid, sr, check)
        tg, xg = _standard_derived(e.right, monoid, sr, check)
        if kind == ex.SUM:
            joined = st.sum_(tf, tg)
        else:
            tf = tf.relabel(times_right(k, e.right) for k in tf.labels)
            joined = st.product(tf, tg)
        t, amalgamation = _merge(joined)
        x = matmul(sr, block_diagonal(sr, xf, xg), amalgamation)
    else:
        raise AssertionError(kind)
    t = t.relabel(t.labels, initial_label=e)
    if check:
        bad = check_claims(e, t, sr)
        if bad:
            raise ClaimViolation("; ".join(bad))
    return t, x


def standard_derived_term_automaton(e: Expr, monoid, sr: Semiring,
                                    check: bool = __debug__) -> DerivedTermAutomaton:
    """``T_E``, with the invariants re-checked at every inductive step when ``check``."""
    require_valid(e, sr)
    t, x = _standard_derived(e, monoid, sr, check)
    transfer = block_diagonal(sr, [[sr.one]], x)
    return DerivedTermAutomaton(e, tuple(t.labels), t.to_automaton(), transfer, t)


def derived_term_automaton(e: Expr, monoid, sr: Semiring,
                           check: bool = __debug__) -> DerivedTermAutomaton:
    """``D_E``: ``T_E`` with its initial state merged into the core state ``E`` if present."""
    t = standard_derived_term_automaton(e, monoid, sr, check)
    if e not in t.terms:
        return t
    pos = t.terms.index(e)
    omega = StateMap((pos,) + tuple(range(len(t.terms))), len(t.terms))
    d = quotient_by(t.automaton, omega, labels=list(t.terms))
    transfer = matmul(sr, t.transfer, omega.amalgamation(sr))
    return DerivedTermAutomaton(e, t.terms, d, transfer, None)
