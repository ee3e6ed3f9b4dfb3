import random

import pytest
from hypothesis import settings, strategies as st

from derterm.expr import parse
from derterm.monoid import make_monoid
from derterm.randexpr import random_expression
from derterm.semiring import get_semiring

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

E1_TEXT = "a*.(a*+<-1>b*)*"
G1_TEXT = "(a*+<-1>b*)*"

AB = make_monoid(["a", "b"])
AX = make_monoid(["a"], ["x"])
ZZ = get_semiring("int")


def e1():
    return parse(E1_TEXT, AB, ZZ)


def expressions(monoid, sr, max_depth=4):
    """Hypothesis strategy: seeded random valid expressions."""
    return st.integers(0, 2**32 - 1).map(
        lambda seed: random_expression(random.Random(seed), monoid, sr, max_depth))


@pytest.fixture
def int_ab():
    return AB, ZZ


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
