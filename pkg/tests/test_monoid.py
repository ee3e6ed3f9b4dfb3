import pytest
from hypothesis import given, strategies as st

from derterm.monoid import MonoidError, make_monoid

AB = make_monoid(["a", "b"])
AX = make_monoid(["a"], ["b"])
words = st.text("ab", max_size=5)


def test_multiply_examples():
    assert AB.multiply("ab", "ba") == "abba"
    assert AX.multiply(("a", ""), ("", "b")) == ("a", "b")
    assert AB.multiply("", "ab") == "ab"


def test_enumerate_examples():
    assert AB.enumerate_up_to(1) == ["", "a", "b"]
    assert AX.enumerate_up_to(1) == [("", ""), ("a", ""), ("", "b")]
    assert len(AB.enumerate_up_to(2)) == 1 + 2 + 4


@given(words, words)
def test_gradation(u, v):
    assert AB.length(AB.multiply(u, v)) == AB.length(u) + AB.length(v)
    assert AB.strip_prefix(u, AB.multiply(u, v)) == v


@given(words, words, words, words)
def test_product_gradation(u1, v1, u2, v2):
    m = make_monoid(["a", "b"], ["a", "b"])
    assert m.length(m.multiply((u1, v1), (u2, v2))) == len(u1 + u2) + len(v1 + v2)


def test_enumeration_is_sorted_and_complete():
    elems = AX.enumerate_up_to(3)
    assert len(elems) == len(set(elems)) == sum(k + 1 for k in range(4))
    assert elems == sorted(elems, key=AX.sort_key)


def test_word_syntax():
    assert AB.parse_word("abba") == "abba"
    assert AX.parse_word("a|bb") == ("a", "bb")
    assert AX.parse_word(AX.format_word(("", "b"))) == ("", "b")


def test_bad_letters():
    with pytest.raises(MonoidError):
        AB.multiply("ac", "")
    with pytest.raises(MonoidError):
        make_monoid(["ab"])
