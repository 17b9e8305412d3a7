from __future__ import annotations
from fractions import Fraction
from typing import TYPE_CHECKING, Protocol, TypeVar

if TYPE_CHECKING:
    from ..algebra.weight import Weight

E = TypeVar("E")


class ErbaCarrier(Protocol[E]):
    """
    Anything the derived structures and the lifting map can compute in:
    a vector space with a bilinear product and a linear operator of a fixed weight.
    Implemented by the free algebra (TermSum elements) and by finite-dimensional
    carriers (coefficient tuples).
    """

    weight: "Weight"

    def zero(self) -> E:
        ...

    def add(self, a: E, b: E) -> E:
        ...

    def negate(self, a: E) -> E:
        ...

    def scale(self, c: Fraction, a: E) -> E:
        ...

    def mul(self, a: E, b: E) -> E:
        ...

    def apply_p(self, a: E) -> E:
        ...

    def is_zero(self, a: E) -> bool:
        ...
