"""Tests for Word."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tamepres import SpecParseError, Word
from tamepres.words import commutator, conjugate, free_reduce

letters = st.lists(st.tuples(st.sampled_from(["a", "x", "y"]), st.integers(-3, 3)), max_size=12)


def test_free_reduce_merges_and_cancels():
    """Test free reduction of adjacent powers."""
    assert free_reduce([("x", 1), ("x", 2), ("y", 1), ("y", -1), ("x", -3)]) == ()
    assert free_reduce([("x", 1), ("y", 0), ("x", 1)]) == (("x", 2),)


def test_word_rejects_unreduced_letters():
    """Test that Word validates its letters."""
    with pytest.raises(ValueError):
        Word((("x", 0),))
    with pytest.raises(ValueError):
        Word((("x", 1), ("x", 1)))


def test_parse_and_render():
    """Test parsing the token format."""
    word = Word.parse("a^-1 x1^1 a^1 x1^-1")
    assert word.letters == (("a", -1), ("x1", 1), ("a", 1), ("x1", -1))
    assert word.render() == "a^-1 x1^1 a^1 x1^-1"
    assert Word.parse("") == Word()


def test_parse_rejects_malformed_token():
    """Test parse errors on bad tokens."""
    with pytest.raises(SpecParseError):
        Word.parse("x1")
    with pytest.raises(SpecParseError):
        Word.parse("x^a")


def test_commutator_and_conjugate():
    """Test the commutator and conjugation conventions."""
    a, x = Word.symbol("a"), Word.symbol("x")
    assert commutator(a, x).render() == "a^-1 x^-1 a^1 x^1"
    assert conjugate(a, x).render() == "x^-1 a^1 x^1"
    assert commutator(a, a) == Word()


@given(letters, letters)
def test_product_with_inverse_is_empty(first, second):
    """Test that w * w^-1 reduces to the empty word."""
    word = Word.reduce(first) * Word.reduce(second)
    assert not word * word.inverse()
    assert word.inverse().inverse() == word


@given(letters)
def test_reduce_is_idempotent(raw):
    """Test that reducing a reduced word changes nothing."""
    word = Word.reduce(raw)
    assert Word.reduce(word.letters) == word
    assert Word.parse(word.render()) == word
