from __future__ import annotations
import re
from fractions import Fraction
from typing import Union

from .errors import RationalFormatError

RationalLike = Union[int, str, Fraction]

_RATIONAL = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse "[-]p" or "[-]p/q" into a reduced Fraction."""
    raw = str(text).strip()
    m = _RATIONAL.fullmatch(raw)
    if not m:
        raise RationalFormatError(f"Not a rational number: {text!r} (expected p or p/q)")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalFormatError(f"Zero denominator in {text!r}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalFormatError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalFormatError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    # Fraction already prints reduced "p/q", or "p" when q == 1
    return str(value)
