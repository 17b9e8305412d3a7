from __future__ import annotations
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from ..core.errors import AlphabetError
from ..core.rational import RationalLike, as_rational, format_rational
from ..words.bracketed import Alphabet, BracketedWord
from ..words.parser import parse_terms

# integral coefficients produced by products may be plain ints
Coefficient = Union[int, Fraction]

Terms = Union[Mapping[BracketedWord, Fraction], Iterable[Tuple[RationalLike, BracketedWord]]]


def _print_key(word: BracketedWord) -> tuple:
    # deepest words first, then the canonical word order
    return (-word.depth, word.sort_key)


class TermSum:
    """
    A finite linear combination of bracketed words with exact rational
    coefficients (Fraction, or int when integral). Zero coefficients are never stored.
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Terms = ()) -> None:
        self.alphabet = alphabet
        acc: Dict[BracketedWord, Fraction] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else ((w, c) for c, w in terms)
        for word, coeff in pairs:
            alphabet.check_word(word)
            c = acc.get(word, Fraction(0)) + as_rational(coeff)
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
        self._terms = acc

    @classmethod
    def _trusted(cls, alphabet: Alphabet, terms: Dict[BracketedWord, Coefficient]) -> "TermSum":
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "TermSum":
        return cls._trusted(alphabet, {})

    @classmethod
    def of_word(cls, alphabet: Alphabet, word: BracketedWord, coeff: RationalLike = 1) -> "TermSum":
        return cls(alphabet, [(coeff, word)])

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "TermSum":
        return cls(alphabet, parse_terms(text, alphabet))

    # ----- inspection -----
    def __iter__(self) -> Iterator[Tuple[BracketedWord, Coefficient]]:
        return iter(self.items())

    def items(self) -> List[Tuple[BracketedWord, Coefficient]]:
        """Terms in printing order."""
        return sorted(self._terms.items(), key=lambda kv: _print_key(kv[0]))

    def words(self) -> List[BracketedWord]:
        """Support in the canonical word order."""
        return sorted(self._terms)

    def unordered_items(self) -> Iterable[Tuple[BracketedWord, Coefficient]]:
        return self._terms.items()

    def coefficient(self, word: BracketedWord) -> Coefficient:
        return self._terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ----- linear structure -----
    def _check_alphabet(self, other: "TermSum") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetError(
                f"Operands use different alphabets: {{{self.alphabet}}} vs {{{other.alphabet}}}"
            )

    def __add__(self, other: "TermSum") -> "TermSum":
        self._check_alphabet(other)
        acc = dict(self._terms)
        accumulate(acc, other._terms.items())
        return TermSum._trusted(self.alphabet, acc)

    def __sub__(self, other: "TermSum") -> "TermSum":
        return self + (-other)

    def __neg__(self) -> "TermSum":
        return TermSum._trusted(self.alphabet, {w: -c for w, c in self._terms.items()})

    def scale(self, c: RationalLike) -> "TermSum":
        c = as_rational(c)
        if not c:
            return TermSum.zero(self.alphabet)
        if c == 1:
            return self
        if c == -1:
            return -self
        return TermSum._trusted(self.alphabet, {w: c * v for w, v in self._terms.items()})

    def map_words(self, fn: Callable[[BracketedWord], Iterable[Tuple[BracketedWord, Fraction]]]) -> "TermSum":
        """Linear extension of fn, which sends a word to (word, coefficient) pairs."""
        acc: Dict[BracketedWord, Fraction] = {}
        for word, coeff in self._terms.items():
            accumulate(acc, ((w, coeff * c) for w, c in fn(word)))
        return TermSum._trusted(self.alphabet, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TermSum):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # ----- text -----
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for i, (word, coeff) in enumerate(self.items()):
            mag = abs(coeff)
            body = str(word) if mag == 1 else f"{format_rational(mag)}*{word}"
            if i == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"TermSum({str(self)!r})"


def accumulate(acc: Dict[BracketedWord, Coefficient], pairs: Iterable[Tuple[BracketedWord, Coefficient]]) -> None:
    """Add (word, coefficient) pairs into acc in place, dropping cancelled words."""
    for word, coeff in pairs:
        c = acc.get(word, 0) + coeff
        if c:
            acc[word] = c
        else:
            acc.pop(word, None)
