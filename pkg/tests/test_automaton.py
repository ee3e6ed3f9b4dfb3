import random

import pytest
from hypothesis import given, strategies as st

from derterm.automaton import (NotAMorphism, StateMap, behaviour_coeff, behaviour_series,
                               check_morphism, identity_matrix, is_conjugate, matmul,
                               quotient_by, to_dot, to_json)
from derterm.derived import derived_term_automaton, standard_derived_term_automaton
from derterm.expr import parse
from derterm.semiring import BOOLEAN, INTEGER, MINPLUS
from derterm.series import Polynomial, denote
from derterm.standard import position_automaton, sum_

from conftest import AB, E1_TEXT, expressions
from helpers import automaton, d_e1, s_e1, t_e1


def test_behaviour_examples():
    assert behaviour_coeff(d_e1(AB, INTEGER), "a") == 2
    assert behaviour_coeff(s_e1(AB, INTEGER), "b") == -1
    # identity coefficient is I.T
    assert behaviour_coeff(d_e1(AB, INTEGER), "") == 1


def test_labels_must_be_proper():
    with pytest.raises(ValueError):
        automaton(AB, INTEGER, [1], [[{"": 1}]], [1])


def test_conjugacy_examples():
    s, d = s_e1(AB, INTEGER), d_e1(AB, INTEGER)
    assert is_conjugate(s, s, identity_matrix(INTEGER, 4))
    zero = [[0, 0] for _ in range(4)]
    assert not is_conjugate(s, d, zero)
    assert is_conjugate(s, d, [[1, 0], [1, 0], [1, 0], [0, 1]])


def test_merge_equal_rows_gives_t_e1():
    # product step of the derived construction: states 1 and 2 both carry a*.G1
    s = s_e1(AB, INTEGER)
    phi = StateMap((0, 1, 1, 2), 3)
    assert quotient_by(s, phi) == t_e1(AB, INTEGER)
    assert quotient_by(s, StateMap.identity(4)) == s


def test_merge_different_finals_is_rejected():
    a = automaton(AB, INTEGER, [1, 0, 0], [[{}, {"a": 1}, {"a": 1}], [{}] * 3, [{}] * 3], [0, 1, 2])
    with pytest.raises(NotAMorphism, match="final"):
        quotient_by(a, StateMap((0, 1, 1), 2))


def test_check_morphism_examples():
    a = position_automaton(parse("a", AB, INTEGER), AB, INTEGER)
    both = sum_(a, a).to_automaton()
    assert check_morphism(both, StateMap((0, 1, 1), 2))[0]
    assert check_morphism(both, StateMap.identity(3))[0]
    # merging the initial state with a state it points to
    ok, why = check_morphism(a.to_automaton(), StateMap((0, 0), 1))
    assert not ok and why


@given(st.integers(0, 2**32 - 1))
def test_conjugacy_implies_equivalence(seed):
    rng = random.Random(seed)
    sr = rng.choice([INTEGER, BOOLEAN, MINPLUS])
    from derterm.randexpr import random_expression
    e = random_expression(rng, AB, sr, 3)
    s = position_automaton(e, AB, sr).to_automaton()
    d = derived_term_automaton(e, AB, sr)
    assert is_conjugate(s, d.automaton, d.transfer)
    assert behaviour_series(s, 5) == behaviour_series(d.automaton, 5)


@given(expressions(AB, INTEGER, 3), st.integers(0, 2**32 - 1))
def test_quotient_representative_independence(e, seed):
    rng = random.Random(seed)
    d = derived_term_automaton(e, AB, INTEGER)
    s = position_automaton(e, AB, INTEGER).to_automaton()
    # the transfer matrix of D_E is an amalgamation: read the state map off it
    phi = _as_map(d.transfer)
    reps = [rng.choice(c) for c in phi.classes()]
    assert quotient_by(s, phi, reps) == quotient_by(s, phi)


def _as_map(x):
    return StateMap(tuple(row.index(1) for row in x), len(x[0]))


@given(expressions(AB, INTEGER, 3))
def test_morphism_composition(e):
    s = position_automaton(e, AB, INTEGER).to_automaton()
    t = standard_derived_term_automaton(e, AB, INTEGER)
    d = derived_term_automaton(e, AB, INTEGER)
    phi, psi = _as_map(t.transfer), _as_map(d.transfer)
    t_aut = quotient_by(s, phi)
    assert t_aut == t.automaton
    if d.merged_initial:
        omega = StateMap((t.terms.index(e),) + tuple(range(len(t.terms))), len(t.terms))
        assert phi.then(omega) == psi
        assert quotient_by(t_aut, omega) == quotient_by(s, psi) == d.automaton
    else:
        assert psi == phi


def test_exports_are_deterministic():
    d = derived_term_automaton(parse(E1_TEXT, AB, INTEGER), AB, INTEGER).automaton
    assert to_json(d) == to_json(d)
    dot = to_dot(d)
    assert '0 -> 0 [label="2a"]' in dot and '0 -> 1 [label="-b"]' in dot and '1 -> 0 [label="a"]' in dot


def test_behaviour_series_matches_coefficients():
    s = s_e1(AB, INTEGER)
    series = behaviour_series(s, 4)
    for m in AB.enumerate_up_to(4):
        assert series[m] == behaviour_coeff(s, m)
    assert series == denote(parse(E1_TEXT, AB, INTEGER), 4, AB, INTEGER)
