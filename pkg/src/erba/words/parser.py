"""
Recursive-descent parser for bracketed words and linear expressions.

    expr    := term (('+'|'-') term)*
    term    := [rat '*'] word
    word    := factor+
    factor  := letter | '[' word ']'
    rat     := ['-'] digits ['/' digits]

Whitespace is allowed between terms and around operators, not inside words.
A leading '-' on the first term is accepted as a sign. After '+' or '-' a
minus sign must start a coefficient, as in "x - -2*y"; "x + -y" is rejected.
"""

from __future__ import annotations
from fractions import Fraction
from typing import List, Tuple

from ..core.errors import AlphabetError, ParseError
from .bracketed import Alphabet, Bracket, BracketedWord, Factor, Letter


_DIGITS = frozenset("0123456789")


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet) -> None:
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    # ----- helpers -----
    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def fail(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    # ----- grammar -----
    def expression(self) -> List[Tuple[Fraction, BracketedWord]]:
        self.skip_ws()
        if self.at_end():
            raise self.fail("Empty input")
        terms = [self.term(first=True)]
        self.skip_ws()
        while not self.at_end():
            op = self.peek()
            if op not in "+-":
                raise self.fail(f"Unexpected character {op!r}")
            self.pos += 1
            self.skip_ws()
            coeff, word = self.term()
            terms.append((-coeff if op == "-" else coeff, word))
            self.skip_ws()
        return terms

    def term(self, first: bool = False) -> Tuple[Fraction, BracketedWord]:
        sign = 1
        if self.peek() == "-":
            if not first and not self.text[self.pos + 1 : self.pos + 2].isdigit():
                raise self.fail("Expected a coefficient after the sign")
            sign = -1
            self.pos += 1
            if first:
                self.skip_ws()
        coeff = Fraction(1)
        if self.peek() in _DIGITS:
            coeff = self.rational()
            self.skip_ws()
            if self.peek() != "*":
                raise self.fail("Expected '*' after coefficient")
            self.pos += 1
            self.skip_ws()
        return sign * coeff, self.word()

    def rational(self) -> Fraction:
        num = self.digits()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            start = self.pos
            den = self.digits()
            if den == 0:
                raise ParseError("Zero denominator", start)
        return Fraction(num, den)

    def digits(self) -> int:
        start = self.pos
        while self.peek() in _DIGITS:
            self.pos += 1
        if start == self.pos:
            raise self.fail("Expected digits")
        return int(self.text[start:self.pos])

    def word(self) -> BracketedWord:
        factors: List[Factor] = []
        while True:
            c = self.peek()
            if c == "[":
                if factors and isinstance(factors[-1], Bracket):
                    raise self.fail("Adjacent brackets are not allowed")
                self.pos += 1
                inner = self.word()
                if self.peek() != "]":
                    raise self.fail("Expected ']'")
                self.pos += 1
                factors.append(Bracket(inner))
            elif c and "a" <= c <= "z":
                if c not in self.alphabet:
                    raise AlphabetError(
                        f"Letter {c!r} at position {self.pos} is not in the alphabet {{{', '.join(self.alphabet)}}}"
                    )
                self.pos += 1
                factors.append(Letter(c))
            else:
                break
        if not factors:
            if self.at_end():
                raise self.fail("Expected a word")
            raise self.fail(f"Expected a letter or '[' but found {self.peek()!r}")
        return BracketedWord(factors)


def parse_word(text: str, alphabet: Alphabet) -> BracketedWord:
    """Parse a single bracketed word such as "x[y]z"."""
    p = _Parser(text, alphabet)
    p.skip_ws()
    if p.at_end():
        raise p.fail("Empty input")
    word = p.word()
    p.skip_ws()
    if not p.at_end():
        raise p.fail(f"Unexpected character {p.peek()!r}")
    return word


def parse_terms(text: str, alphabet: Alphabet) -> List[Tuple[Fraction, BracketedWord]]:
    """Parse a linear expression into (coefficient, word) pairs, unmerged."""
    return _Parser(text, alphabet).expression()


def print_word(word: BracketedWord) -> str:
    return str(word)
