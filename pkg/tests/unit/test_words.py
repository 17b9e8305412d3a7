# tests/unit/test_words.py

from __future__ import annotations
import random
import sys
from fractions import Fraction
from pathlib import Path
import pytest
from hypothesis import given, settings, strategies as st

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.core.errors import AlphabetError, ErbaInputError, NotRbwError, ParseError  # type: ignore
from erba.words.bracketed import Alphabet, Bracket, BracketedWord, Letter, compare, is_rbw  # type: ignore
from erba.words.parser import parse_terms, parse_word, print_word  # type: ignore
from erba.words.sampling import random_word  # type: ignore

ABC = Alphabet.of("wxyz")


def w(text: str) -> BracketedWord:
    return parse_word(text, ABC)


@st.composite
def rb_words(draw, depth: int = 3) -> BracketedWord:
    factors = []
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        after_bracket = bool(factors) and isinstance(factors[-1], Bracket)
        if depth > 0 and not after_bracket and draw(st.booleans()):
            factors.append(Bracket(draw(rb_words(depth - 1))))
        else:
            factors.append(Letter(draw(st.sampled_from("wxyz"))))
    return BracketedWord(factors)


def _levels_ok(word: BracketedWord, max_depth: int, max_breadth: int) -> bool:
    if word.depth > max_depth or word.breadth > max_breadth:
        return False
    return all(_levels_ok(f.inner, max_depth - 1, max_breadth) for f in word.factors if isinstance(f, Bracket))


# ----- alphabet -----

def test_alphabet_is_sorted_and_validated():
    assert Alphabet.of("zyx").letters == ("x", "y", "z")
    assert str(Alphabet.of("yxy")) == "xy"
    with pytest.raises(AlphabetError):
        Alphabet.of("")
    with pytest.raises(AlphabetError):
        Alphabet.of("xY")


# ----- bracketed words -----

def test_word_shape():
    word = w("x[y[z]]w")
    assert (word.depth, word.breadth, word.head, word.tail) == (2, 3, 0, 0)
    assert (w("[x]y").head, w("[x]y").tail) == (1, 0)
    assert list(word.letters()) == ["x", "y", "z", "w"]
    assert str(word.bracketed()) == "[x[y[z]]w]"


def test_adjacent_brackets_are_not_rota_baxter_words():
    with pytest.raises(NotRbwError):
        BracketedWord([Bracket(w("x")), Bracket(w("y"))])
    with pytest.raises(ErbaInputError):
        BracketedWord([])


def test_canonical_order():
    assert compare(w("x"), w("[x]")) == -1  # depth first
    assert compare(w("xy"), w("z")) == 1  # then breadth
    assert compare(w("x"), w("y")) == -1
    assert compare(w("x[y]"), w("[x]y")) == -1  # letter before bracket
    assert compare(w("[x]z"), w("[y]x")) == -1  # brackets by their inner words
    assert compare(w("x[y]"), w("x[y]")) == 0
    assert sorted([w("[x]"), w("xy"), w("y")]) == [w("y"), w("xy"), w("[x]")]


def test_equal_words_hash_equal():
    assert w("x[y]") == BracketedWord([Letter("x"), Bracket(BracketedWord.letter("y"))])
    assert len({w("x[y]"), w("x[y]"), w("[x]y")}) == 2


# ----- parser -----

def test_parse_terms_signs_and_coefficients():
    terms = parse_terms("2*x - 3/4*[y] + z", ABC)
    assert terms == [(Fraction(2), w("x")), (Fraction(-3, 4), w("[y]")), (Fraction(1), w("z"))]
    assert parse_terms("-x", ABC) == [(Fraction(-1), w("x"))]
    assert parse_terms("  [x] +   y ", ABC) == [(Fraction(1), w("[x]")), (Fraction(1), w("y"))]


@pytest.mark.parametrize("text", ["x + -y", "x - -y", "x - - 2*y", "x + -"])
def test_sign_after_an_operator_must_start_a_coefficient(text):
    with pytest.raises(ParseError, match="Expected a coefficient"):
        parse_terms(text, ABC)


def test_negative_coefficient_after_an_operator():
    assert parse_terms("x - -2*y", ABC) == parse_terms("x + 2*y", ABC)
    assert parse_terms("x + -1/2*[y]", ABC) == [(Fraction(1), w("x")), (Fraction(-1, 2), w("[y]"))]


def test_parse_empty_input():
    with pytest.raises(ParseError, match="Empty input"):
        parse_terms("   ", ABC)


def test_parse_adjacent_brackets_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_word("[x][y]", ABC)
    assert exc.value.position == 3
    assert "Adjacent brackets" in str(exc.value)


def test_parse_unknown_letter():
    with pytest.raises(AlphabetError):
        parse_word("xq", Alphabet.of("xyz"))


@pytest.mark.parametrize("text", ["[x", "x]", "[]", "1/0*x", "2 x", "x + ", "x * y"])
def test_parse_malformed(text):
    with pytest.raises(ParseError):
        parse_terms(text, ABC)


@settings(max_examples=200, deadline=None)
@given(rb_words())
def test_print_then_parse_is_identity(word):
    assert parse_word(print_word(word), ABC) == word


# ----- sampling -----

def test_random_word_respects_bounds_and_seed():
    assert random_word(random.Random(11), "xyz", 3, 3) == random_word(random.Random(11), "xyz", 3, 3)
    rng = random.Random(5)
    for _ in range(200):
        word = random_word(rng, "xyz", 2, 3)
        assert is_rbw(word)
        assert _levels_ok(word, 2, 3)


def test_random_word_depth_zero_is_letters_only():
    rng = random.Random(0)
    for _ in range(50):
        assert random_word(rng, "xy", 0, 4).depth == 0
