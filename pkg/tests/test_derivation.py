import pytest
from hypothesis import given, strategies as st

from derterm import expr as ex
from derterm.derivation import LinearCombination, derive, differential, reconcile
from derterm.derived import derived_terms
from derterm.expr import constant_term, parse
from derterm.semiring import BOOLEAN, INTEGER, MINPLUS
from derterm.series import UnsupportedOperation, denote, quotient

from conftest import AB, AX, E1_TEXT, G1_TEXT, expressions

SEMIRINGS = [INTEGER, BOOLEAN, MINPLUS]


def p(text):
    return parse(text, AB, INTEGER)


def test_derive_examples():
    assert derive(p(E1_TEXT), "a", AB, INTEGER) == LinearCombination(INTEGER, {p("a*." + G1_TEXT): 2})
    assert derive(p("b"), "b", AB, INTEGER) == LinearCombination(INTEGER, {ex.one(): 1})
    assert not derive(ex.one(), "a", AB, INTEGER)


def test_differential_examples():
    d = differential(p(E1_TEXT), INTEGER)
    assert [(dict(q.items()), h) for q, h in d] == [
        ({"a": 2}, p("a*." + G1_TEXT)), ({"b": -1}, p("b*." + G1_TEXT))]
    assert differential(ex.one(), INTEGER) == []
    assert [(dict(q.items()), h) for q, h in differential(p("a"), INTEGER)] == [({"a": 1}, ex.one())]


def test_reconcile_examples():
    assert reconcile(p(E1_TEXT), "a", AB, INTEGER)
    assert reconcile(p(E1_TEXT), "b", AB, INTEGER)
    assert reconcile(ex.zero(), "a", AB, INTEGER)


def test_unsupported_inputs():
    with pytest.raises(UnsupportedOperation):
        derive(ex.one(), "a", AX, INTEGER)
    with pytest.raises(UnsupportedOperation):
        derive(p("(ab)"), "a", AB, INTEGER)


def expand(combo, n, sr):
    """Series of sum_H k_H [[H]] truncated at n."""
    out = denote(ex.zero(), n, AB, sr)
    for h, k in combo.items():
        out = out + denote(h, n, AB, sr).lmul(k)
    return out


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_reconcile_random(sr, data):
    e = data.draw(expressions(AB, sr, 5))
    assert all(reconcile(e, a, AB, sr) for a in "ab")


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_quotient_identity(sr, data):
    e = data.draw(expressions(AB, sr, 4))
    s = denote(e, 4, AB, sr)
    for a in "ab":
        assert quotient(s, a) == expand(derive(e, a, AB, sr), 3, sr)


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_first_order_development(sr, data):
    e = data.draw(expressions(AB, sr, 4))
    n = 4
    total = denote(ex.one(), n, AB, sr).lmul(constant_term(e, sr))
    for poly, h in differential(e, sr):
        for m, k in poly.items():
            total = total + (denote(ex.atom(m, AB), n, AB, sr) * denote(h, n, AB, sr)).lmul(k)
    assert total == denote(e, n, AB, sr)
