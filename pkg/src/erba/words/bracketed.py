from __future__ import annotations
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Tuple, Union

from ..core.errors import AlphabetError, ErbaInputError, NotRbwError


@dataclass(frozen=True)
class Alphabet:
    """A finite set of single lowercase letters, kept sorted so position = ASCII order."""

    letters: Tuple[str, ...]

    @classmethod
    def of(cls, letters: Union[str, Iterable[str]]) -> "Alphabet":
        symbols = sorted(set(letters))
        if not symbols:
            raise AlphabetError("Alphabet must contain at least one letter")
        for s in symbols:
            if len(s) != 1 or not ("a" <= s <= "z"):
                raise AlphabetError(f"Alphabet letters must be single lowercase ASCII characters, got {s!r}")
        return cls(tuple(symbols))

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.letters

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)

    def check_word(self, word: "BracketedWord") -> None:
        for symbol in word.letters():
            if symbol not in self:
                raise AlphabetError(f"Letter {symbol!r} is not in the alphabet {{{', '.join(self.letters)}}}")


@dataclass(frozen=True)
class Letter:
    symbol: str

    def __post_init__(self) -> None:
        if len(self.symbol) != 1 or not ("a" <= self.symbol <= "z"):
            raise AlphabetError(f"Letters are single lowercase ASCII characters, got {self.symbol!r}")

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class Bracket:
    inner: "BracketedWord"

    def __str__(self) -> str:
        return f"[{self.inner}]"


Factor = Union[Letter, Bracket]


def _factor_key(factor: Factor) -> tuple:
    if isinstance(factor, Letter):
        return (0, factor.symbol)
    return (1, factor.inner.sort_key)


@total_ordering
class BracketedWord:
    """
    A Rota-Baxter bracketed word: a nonempty sequence of letters and bracketed
    subwords in which no two brackets are adjacent, at any nesting level.

    Words are immutable; hash and sort key are computed once, text on first use.
    Ordering: depth, then breadth, then factor by factor (Letter < Bracket,
    letters alphabetically, brackets by their inner words).
    """

    __slots__ = ("factors", "depth", "_key", "_hash", "_text")

    def __init__(self, factors: Iterable[Factor]) -> None:
        factors = tuple(factors)
        if not factors:
            raise ErbaInputError("A bracketed word needs at least one factor")
        for left, right in zip(factors, factors[1:]):
            if isinstance(left, Bracket) and isinstance(right, Bracket):
                raise NotRbwError(f"Adjacent brackets in {''.join(map(str, factors))}")
        self.factors: Tuple[Factor, ...] = factors
        self.depth: int = max(
            (f.inner.depth + 1 if isinstance(f, Bracket) else 0) for f in factors
        )
        self._key = (self.depth, len(factors), tuple(_factor_key(f) for f in factors))
        # from the cached hashes of inner words
        self._hash = hash(
            (self.depth, tuple(f.inner._hash if isinstance(f, Bracket) else f.symbol for f in factors))
        )
        self._text: Optional[str] = None

    @classmethod
    def letter(cls, symbol: str) -> "BracketedWord":
        return cls((Letter(symbol),))

    @classmethod
    def of_letters(cls, symbols: str) -> "BracketedWord":
        return cls(Letter(s) for s in symbols)

    def bracketed(self) -> "BracketedWord":
        """The single-factor word [self]."""
        return BracketedWord((Bracket(self),))

    @property
    def breadth(self) -> int:
        return len(self.factors)

    @property
    def head(self) -> int:
        return 1 if isinstance(self.factors[0], Bracket) else 0

    @property
    def tail(self) -> int:
        return 1 if isinstance(self.factors[-1], Bracket) else 0

    @property
    def sort_key(self) -> tuple:
        return self._key

    def letters(self) -> Iterator[str]:
        for f in self.factors:
            if isinstance(f, Letter):
                yield f.symbol
            else:
                yield from f.inner.letters()

    def compare(self, other: "BracketedWord") -> int:
        if self._key < other._key:
            return -1
        return 1 if self._key > other._key else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BracketedWord):
            return NotImplemented
        return self is other or (self._hash == other._hash and self._key == other._key)

    def __lt__(self, other: "BracketedWord") -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self._text is None:
            self._text = "".join(str(f) for f in self.factors)
        return self._text

    def __repr__(self) -> str:
        return f"BracketedWord({str(self)!r})"


def compare(w1: BracketedWord, w2: BracketedWord) -> int:
    """-1, 0 or 1 under the canonical word order."""
    return w1.compare(w2)


def is_rbw(word: BracketedWord) -> bool:
    for left, right in zip(word.factors, word.factors[1:]):
        if isinstance(left, Bracket) and isinstance(right, Bracket):
            return False
    return all(is_rbw(f.inner) for f in word.factors if isinstance(f, Bracket))
