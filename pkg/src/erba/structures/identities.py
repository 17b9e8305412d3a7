"""
Quadratic identities as data.

A monomial is ((a op1 b) op2 c) on the LEFT side or (a op1 (b op2 c)) on the
RIGHT side, where (a, b, c) is (x, y, z) permuted by `order`. An identity
asserts that a rational combination of monomials vanishes for all x, y, z.
"""

from __future__ import annotations
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Generic, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, TypeVar, Union

from ..core.errors import UnboundSymbolError
from ..core.ports import ErbaCarrier
from ..core.rational import RationalLike, as_rational

E = TypeVar("E")

XYZ = (0, 1, 2)

# Binary operation symbols
PREC = "prec"
SUCC = "succ"
DOT = "dot"
CIRC = "circ"
LBRK = "lbrk"
TRIL = "tril"
TRIR = "trir"

GLYPHS = {PREC: "≺", SUCC: "≻", DOT: "⊙", CIRC: "∘", LBRK: "[,]", TRIL: "⊳", TRIR: "⊲"}

# An operation argument to the builders: a symbol, or a linear combination of symbols
OpCombo = Union[str, Mapping[str, RationalLike]]


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Arity3Monomial:
    side: Side
    first_op: str
    second_op: str
    order: Tuple[int, int, int] = XYZ

    def evaluate(self, args: Sequence[E], bindings: "Bindings[E]") -> E:
        a, b, c = (args[i] for i in self.order)
        first = bindings.op(self.first_op)
        second = bindings.op(self.second_op)
        if self.side is Side.LEFT:
            return second(first(a, b), c)
        return first(a, second(b, c))

    def render(self) -> str:
        a, b, c = ("xyz"[i] for i in self.order)
        f, s = GLYPHS.get(self.first_op, self.first_op), GLYPHS.get(self.second_op, self.second_op)
        if self.side is Side.LEFT:
            return f"({a} {f} {b}) {s} {c}"
        return f"{a} {f} ({b} {s} {c})"


@dataclass(frozen=True)
class QuadraticIdentity:
    """sum(c * monomial(x, y, z)) = 0 for all x, y, z."""

    name: str
    terms: Tuple[Tuple[Fraction, Arity3Monomial], ...]

    @classmethod
    def build(cls, name: str, *parts: Iterable[Tuple[Fraction, Arity3Monomial]]) -> "QuadraticIdentity":
        merged: Dict[Arity3Monomial, Fraction] = {}
        for part in parts:
            for c, m in part:
                merged[m] = merged.get(m, Fraction(0)) + c
        return cls(name, tuple((c, m) for m, c in merged.items() if c))

    def symbols(self) -> set:
        return {s for _, m in self.terms for s in (m.first_op, m.second_op)}

    def scaled(self, c: RationalLike) -> "QuadraticIdentity":
        k = as_rational(c)
        return QuadraticIdentity(self.name, tuple((k * v, m) for v, m in self.terms if k * v))


def _combo(op: OpCombo) -> List[Tuple[str, Fraction]]:
    if isinstance(op, str):
        return [(op, Fraction(1))]
    return [(s, as_rational(c)) for s, c in op.items() if as_rational(c)]


def _expand(side: Side, a: OpCombo, b: OpCombo, coeff: RationalLike, order: Tuple[int, int, int]):
    k = as_rational(coeff)
    return [
        (k * ca * cb, Arity3Monomial(side, sa, sb, order))
        for sa, ca in _combo(a)
        for sb, cb in _combo(b)
        if k * ca * cb
    ]


def left(a: OpCombo, b: OpCombo, coeff: RationalLike = 1, order: Tuple[int, int, int] = XYZ):
    """coeff * ((x a y) b z), expanded bilinearly over combinations of symbols."""
    return _expand(Side.LEFT, a, b, coeff, order)


def right(a: OpCombo, b: OpCombo, coeff: RationalLike = 1, order: Tuple[int, int, int] = XYZ):
    """coeff * (x a (y b z)), expanded bilinearly over combinations of symbols."""
    return _expand(Side.RIGHT, a, b, coeff, order)


BinaryOp = Callable[[E, E], E]


class OpMemo:
    """
    Results of bound operations while a scope is open, keyed by the operation and
    the identity of its operands. Entries hold their operands, so ids are not
    reused before the outermost scope closes and clears the memo.
    """

    def __init__(self) -> None:
        self._depth = 0
        self._results: Dict[Tuple[Any, int, int], Tuple[Any, Any, Any]] = {}

    @contextmanager
    def scope(self) -> Iterator[None]:
        self._depth += 1
        try:
            yield
        finally:
            self._depth -= 1
            if not self._depth:
                self._results.clear()

    def __len__(self) -> int:
        return len(self._results)

    def wrap(self, fn: BinaryOp) -> BinaryOp:
        def call(a, b):
            if not self._depth:
                return fn(a, b)
            key = (fn, id(a), id(b))
            hit = self._results.get(key)
            if hit is not None:
                return hit[2]
            value = fn(a, b)
            self._results[key] = (a, b, value)
            return value

        return call


class Bindings(Generic[E]):
    """
    Operation symbols bound to bilinear operations on one carrier. Bindings
    derived from each other share one OpMemo.
    """

    def __init__(
        self, carrier: ErbaCarrier[E], ops: Mapping[str, BinaryOp], memo: Optional[OpMemo] = None
    ) -> None:
        self.carrier = carrier
        self.memo = memo if memo is not None else OpMemo()
        self.ops: Dict[str, BinaryOp] = {name: self.memo.wrap(fn) for name, fn in ops.items()}

    def op(self, name: str) -> BinaryOp:
        try:
            return self.ops[name]
        except KeyError:
            raise UnboundSymbolError(
                f"Operation {name!r} is not bound (bound: {', '.join(sorted(self.ops)) or 'none'})"
            ) from None

    def combine(self, terms: Iterable[Tuple[Fraction, E]]) -> E:
        car = self.carrier
        total = car.zero()
        for c, value in terms:
            total = car.add(total, car.scale(c, value))
        return total


def eval_identity(identity: QuadraticIdentity, x: E, y: E, z: E, bindings: Bindings[E]) -> E:
    """The value of the identity at (x, y, z); zero exactly when it holds there."""
    missing = sorted(s for s in identity.symbols() if s not in bindings.ops)
    if missing:
        raise UnboundSymbolError(f"Identity {identity.name!r} uses unbound operations: {', '.join(missing)}")
    args = (x, y, z)
    with bindings.memo.scope():
        return bindings.combine([(c, m.evaluate(args, bindings)) for c, m in identity.terms])


def identity_holds(identity: QuadraticIdentity, x: E, y: E, z: E, bindings: Bindings[E]) -> bool:
    return bindings.carrier.is_zero(eval_identity(identity, x, y, z, bindings))
