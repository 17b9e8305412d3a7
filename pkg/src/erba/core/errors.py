from __future__ import annotations
from typing import Optional


class ErbaError(Exception):
    """Base class for erba failures."""


class ErbaInputError(ErbaError):
    """
    Caller input is malformed: expression text, rational literals, carrier files.
    The fix is to change the input. The CLI maps these to exit code 2.
    """


class ParseError(ErbaInputError):
    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class RationalFormatError(ErbaInputError):
    """Not of the form [-]digits[/digits], or a zero denominator."""


class AlphabetError(ErbaInputError):
    """A letter outside the declared alphabet, or operands over different alphabets."""


class NotRbwError(ErbaInputError):
    """Two bracket factors are adjacent, so the word is not a Rota-Baxter bracketed word."""


class CarrierFormatError(ErbaInputError):
    """A carrier document does not follow the structure-constant JSON layout."""


class TableError(ErbaInputError):
    """A base-algebra multiplication table that is incomplete or not associative."""


class ErbaStructureError(ErbaError):
    """
    Operands are well-formed but cannot be combined (different weights,
    wrong algebra kind, unbound operation symbols...).
    """


class WeightMismatchError(ErbaStructureError):
    pass


class KindMismatchError(ErbaStructureError):
    pass


class DimensionMismatchError(ErbaStructureError):
    pass


class UnboundSymbolError(ErbaStructureError):
    pass


class UnassignedLetterError(ErbaStructureError):
    pass


class ModeMismatchError(ErbaStructureError):
    pass


class UnknownSuiteError(ErbaStructureError):
    pass
