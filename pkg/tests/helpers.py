"""Builders for hand-written automata used as golden values."""
from derterm.automaton import WeightedAutomaton
from derterm.series import Polynomial


def automaton(monoid, sr, initial, rows, final, labels=None):
    """``rows[p][q]`` is a dict element -> weight, or empty for no transition."""
    transitions = {}
    for p, row in enumerate(rows):
        for q, entry in enumerate(row):
            if entry:
                transitions[(p, q)] = Polynomial(sr, entry)
    labels = labels or list(range(len(initial)))
    return WeightedAutomaton(monoid, sr, labels, initial, transitions, final)


def s_e1(monoid, sr):
    a, b = {"a": 1}, {"b": -1}
    return automaton(monoid, sr, [1, 0, 0, 0],
                     [[{}, a, a, b], [{}, a, a, b], [{}, {}, {"a": 2}, b], [{}, {}, a, {}]],
                     [1, 1, 1, 1])


def t_e1(monoid, sr):
    return automaton(monoid, sr, [1, 0, 0],
                     [[{}, {"a": 2}, {"b": -1}], [{}, {"a": 2}, {"b": -1}], [{}, {"a": 1}, {}]],
                     [1, 1, 1])


def d_e1(monoid, sr):
    return automaton(monoid, sr, [1, 0],
                     [[{"a": 2}, {"b": -1}], [{"a": 1}, {}]],
                     [1, 1])
