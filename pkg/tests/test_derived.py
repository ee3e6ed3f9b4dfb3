import pytest
from hypothesis import given, strategies as st

from derterm import expr as ex
from derterm.automaton import behaviour_series, is_conjugate
from derterm.derived import (check_claims, derived_term_automaton, derived_terms, n_vector,
                             standard_derived_term_automaton)
from derterm.expr import literal_length, parse
from derterm.semiring import BOOLEAN, INTEGER, MINPLUS
from derterm.series import Polynomial
from derterm.standard import position_automaton

from conftest import AB, AX, E1_TEXT, G1_TEXT, expressions
from helpers import d_e1, t_e1

SEMIRINGS = [INTEGER, BOOLEAN, MINPLUS]


def p(text):
    return parse(text, AB, INTEGER)


def test_derived_terms_of_e1():
    g1 = p(G1_TEXT)
    assert derived_terms(p("a*"), INTEGER) == (p("a*"),)
    assert derived_terms(g1, INTEGER) == (p("a*." + G1_TEXT), p("b*." + G1_TEXT))
    assert derived_terms(p(E1_TEXT), INTEGER) == derived_terms(g1, INTEGER)
    assert derived_terms(ex.one(), INTEGER) == ()


def test_n_vectors():
    assert n_vector(p("a"), INTEGER) == {ex.one(): Polynomial(INTEGER, {"a": 1})}
    assert n_vector(p(E1_TEXT), INTEGER) == {
        p("a*." + G1_TEXT): Polynomial(INTEGER, {"a": 2}),
        p("b*." + G1_TEXT): Polynomial(INTEGER, {"b": -1}),
    }
    assert n_vector(ex.one(), INTEGER) == {}


def test_t_e1_and_d_e1():
    e = p(E1_TEXT)
    t = standard_derived_term_automaton(e, AB, INTEGER)
    assert t.automaton == t_e1(AB, INTEGER)
    s = position_automaton(e, AB, INTEGER).to_automaton()
    assert is_conjugate(s, t.automaton, t.transfer)
    d = derived_term_automaton(e, AB, INTEGER)
    assert d.automaton == d_e1(AB, INTEGER)
    assert list(d.automaton.labels) == list(derived_terms(e, INTEGER))


def test_base_cases():
    assert standard_derived_term_automaton(p("a"), AB, INTEGER).automaton.dim == 2
    one = ex.one()
    assert derived_term_automaton(one, AB, INTEGER).automaton == \
        standard_derived_term_automaton(one, AB, INTEGER).automaton


def test_strict_cardinality_witness():
    e = p("a+a")
    assert len(derived_terms(e, INTEGER)) == 1 < literal_length(e) == 2
    assert derived_term_automaton(e, AB, INTEGER).automaton.dim == 2


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_cardinality_and_closure(sr, data):
    e = data.draw(expressions(AB, sr, 5))
    terms = derived_terms(e, sr)
    assert len(terms) <= literal_length(e)
    assert derived_term_automaton(e, AB, sr).automaton.dim <= literal_length(e) + 1
    for k in terms:
        assert set(derived_terms(k, sr)) <= set(terms)


@pytest.mark.parametrize("sr", SEMIRINGS, ids=lambda s: s.name)
@given(data=st.data())
def test_claims_hold(sr, data):
    e = data.draw(expressions(AB, sr, 4))
    t = standard_derived_term_automaton(e, AB, sr, check=True)
    assert check_claims(e, t.standard, sr) == []


@given(expressions(AX, INTEGER, 4))
def test_product_monoid_conjugacy(e):
    s = position_automaton(e, AX, INTEGER).to_automaton()
    d = derived_term_automaton(e, AX, INTEGER)
    assert is_conjugate(s, d.automaton, d.transfer)
    assert behaviour_series(s, 3) == behaviour_series(d.automaton, 3)


def test_sum_merge_is_a_morphism():
    # F = G = a: both derived-term sets are {1}, so the two core states merge
    t = standard_derived_term_automaton(p("a+a"), AB, INTEGER)
    assert t.automaton.dim == 2
    assert t.transfer == [[1, 0], [0, 1], [0, 1]]
