"""
Generator spaces and relation vectors.

Monomial order (fixed): every left-associated pair (a, b) first, then every
right-associated pair (a, b), each block in generator order with a outer.
tri: 2 * 3 * 3 = 18 coordinates, di: 2 * 2 * 2 = 8.

A relation vector r stands for  sum_left r_i (x a y) b z = sum_right r_j x a (y b z).
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..core.errors import DimensionMismatchError
from ..core.rational import format_rational
from ..structures.identities import DOT, PREC, SUCC, Arity3Monomial, QuadraticIdentity, Side

RelationVector = Tuple[Fraction, ...]


class Mode(str, Enum):
    TRI = "tri"
    DI = "di"


@dataclass(frozen=True)
class GeneratorSpace:
    """
    Formal binary operations and their operator realizations:
    prec -> x P(y), succ -> P(x) y, and in tri mode dot -> x y.
    """

    mode: Mode
    symbols: Tuple[str, ...]

    @classmethod
    def for_mode(cls, mode: Mode) -> "GeneratorSpace":
        mode = Mode(mode)
        return cls(mode, (PREC, SUCC, DOT) if mode is Mode.TRI else (PREC, SUCC))

    def monomials(self) -> List[Arity3Monomial]:
        return [
            Arity3Monomial(side, a, b)
            for side in (Side.LEFT, Side.RIGHT)
            for a in self.symbols
            for b in self.symbols
        ]

    @property
    def size(self) -> int:
        return 2 * len(self.symbols) ** 2


def to_relation_vector(identity: QuadraticIdentity, space: GeneratorSpace) -> RelationVector:
    """Identity sum c_i m_i = 0 read as left = right: left entries c, right entries -c."""
    index = {m: k for k, m in enumerate(space.monomials())}
    vec = [Fraction(0)] * space.size
    for c, m in identity.terms:
        if m not in index:
            raise DimensionMismatchError(f"Monomial {m.render()} is outside the {space.mode.value} generator space")
        vec[index[m]] += c if m.side is Side.LEFT else -c
    return tuple(vec)


def from_relation_vector(vec: Sequence[Fraction], space: GeneratorSpace, name: str = "relation") -> QuadraticIdentity:
    if len(vec) != space.size:
        raise DimensionMismatchError(f"Relation vector of length {len(vec)} in a space of size {space.size}")
    terms = [
        (c if m.side is Side.LEFT else -c, m)
        for c, m in zip(vec, space.monomials())
        if c
    ]
    return QuadraticIdentity.build(name, terms)


def _render_side(terms: List[Tuple[Fraction, Arity3Monomial]]) -> str:
    if not terms:
        return "0"
    parts: List[str] = []
    for c, m in terms:
        mag = abs(c)
        body = m.render() if mag == 1 else f"{format_rational(mag)} {m.render()}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def relation_pretty(vec: Sequence[Fraction], space: GeneratorSpace) -> str:
    """e.g. "(x ≻ y) ≺ z = x ≻ (y ≺ z)"; the zero vector prints "0 = 0"."""
    pairs = list(zip(vec, space.monomials()))
    lhs = [(c, m) for c, m in pairs if c and m.side is Side.LEFT]
    rhs = [(c, m) for c, m in pairs if c and m.side is Side.RIGHT]
    return f"{_render_side(lhs)} = {_render_side(rhs)}"
