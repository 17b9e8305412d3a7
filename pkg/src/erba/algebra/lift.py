from __future__ import annotations
from typing import Dict, Generic, Mapping, Optional, TypeVar

from ..core.errors import UnassignedLetterError, WeightMismatchError
from ..core.ports import ErbaCarrier
from ..words.bracketed import BracketedWord, Letter
from .free_erba import FreeErba
from .term_sum import TermSum

E = TypeVar("E")


class Lift(Generic[E]):
    """
    The algebra homomorphism out of the free algebra determined by where the
    letters go: a letter maps by the assignment, a bracket [w] maps to P(f(w)),
    and the factors of a word are multiplied left to right in the target.
    Word images are cached for the lifetime of the lift.
    """

    def __init__(self, source: FreeErba, target: ErbaCarrier[E], assignment: Mapping[str, E]) -> None:
        if source.weight != target.weight:
            raise WeightMismatchError(
                f"Source weight {source.weight} differs from target weight {target.weight}"
            )
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        self._words: Dict[BracketedWord, E] = {}

    def word(self, w: BracketedWord) -> E:
        hit = self._words.get(w)
        if hit is not None:
            return hit
        value: Optional[E] = None
        for factor in w.factors:
            if isinstance(factor, Letter):
                if factor.symbol not in self.assignment:
                    raise UnassignedLetterError(f"No image assigned to letter {factor.symbol!r}")
                image = self.assignment[factor.symbol]
            else:
                image = self.target.apply_p(self.word(factor.inner))
            value = image if value is None else self.target.mul(value, image)
        assert value is not None
        self._words[w] = value
        return value

    def __call__(self, u: TermSum) -> E:
        total = self.target.zero()
        for w, c in u.unordered_items():
            total = self.target.add(total, self.target.scale(c, self.word(w)))
        return total

    def homomorphism_holds(self, u: TermSum, v: TermSum) -> bool:
        """f(u*v) = f(u)f(v) and f(P u) = P(f u)."""
        t = self.target
        fu, fv = self(u), self(v)
        product_ok = t.is_zero(t.add(self(self.source.mul(u, v)), t.negate(t.mul(fu, fv))))
        operator_ok = t.is_zero(t.add(self(self.source.apply_p(u)), t.negate(t.apply_p(fu))))
        return product_ok and operator_ok


def lift(assignment: Mapping[str, E], target: ErbaCarrier[E], source: FreeErba) -> Lift[E]:
    return Lift(source, target, assignment)
