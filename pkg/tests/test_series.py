import pytest
from hypothesis import given, strategies as st

from derterm import expr as ex
from derterm.expr import constant_term, parse
from derterm.semiring import BOOLEAN, INTEGER, MINPLUS, get_semiring
from derterm.series import Polynomial, TruncatedSeries, UnsupportedOperation, denote, quotient

from conftest import AB, AX, E1_TEXT, expressions

SEMIRINGS = [INTEGER, BOOLEAN, MINPLUS]


def test_denote_e1():
    e = parse(E1_TEXT, AB, INTEGER)
    assert denote(e, 0, AB, INTEGER)[""] == 1
    s1 = denote(e, 1, AB, INTEGER)
    assert (s1["a"], s1["b"]) == (2, -1)


def test_denote_one():
    s = denote(ex.one(), 3, AB, INTEGER)
    assert dict(s.items()) == {"": 1}


def test_quotient_examples():
    s = denote(parse(E1_TEXT, AB, INTEGER), 2, AB, INTEGER)
    assert quotient(s, "a")[""] == 2
    assert quotient(s, "") == s
    assert quotient(denote(parse("b", AB, INTEGER), 1, AB, INTEGER), "a")[""] == 0
    with pytest.raises(UnsupportedOperation):
        quotient(denote(ex.one(), 2, AX, INTEGER), ("a", ""))


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_constant_term_coherence(sr, data):
    e = data.draw(expressions(AB, sr))
    assert sr.eq(denote(e, 0, AB, sr)[""], constant_term(e, sr))


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_truncation_coherence(sr, data):
    e = data.draw(expressions(AB, sr))
    assert denote(e, 4, AB, sr).restrict(2) == denote(e, 2, AB, sr)


@pytest.mark.parametrize("sr", SEMIRINGS + [get_semiring("rational", "analytic")], ids=lambda s: s.name)
@given(data=st.data())
def test_star_orders_agree(sr, data):
    e = data.draw(expressions(AB, sr))
    assert denote(e, 4, AB, sr, "left") == denote(e, 4, AB, sr, "right")


@given(st.dictionaries(st.text("ab", max_size=3), st.integers(-3, 3), max_size=5),
       st.dictionaries(st.text("ab", max_size=3), st.integers(-3, 3), max_size=5))
def test_cauchy_product_against_naive(x, y):
    s = TruncatedSeries(AB, INTEGER, 4, x) * TruncatedSeries(AB, INTEGER, 4, y)
    naive = {}
    for u, k in x.items():
        for v, h in y.items():
            if len(u + v) <= 4:
                naive[u + v] = naive.get(u + v, 0) + k * h
    assert s == TruncatedSeries(AB, INTEGER, 4, naive)
    p = Polynomial(INTEGER, x).cauchy(Polynomial(INTEGER, y), AB)
    assert all(p.coefficient(m) == k for m, k in naive.items())


def test_star_of_nonstarrable_constant_fails():
    s = TruncatedSeries(AB, INTEGER, 2, {"": 1})
    with pytest.raises(ValueError):
        s.star()


def test_analytic_rational_star():
    sr = get_semiring("rational", "analytic")
    e = parse("(<1/2>\\e + a)*", AB, sr)
    s = denote(e, 2, AB, sr)
    # (1/2 + a)* = 2 (a 2)* : coefficients 2, 4, 8
    assert [s[m] for m in ("", "a", "aa")] == [2, 4, 8]
