from __future__ import annotations
import random
from typing import List, Sequence

from .bracketed import Bracket, BracketedWord, Factor, Letter


def random_word(
    rng: random.Random,
    alphabet: Sequence[str],
    max_depth: int,
    max_breadth: int,
) -> BracketedWord:
    """
    Seeded random bracketed word with depth <= max_depth and breadth <= max_breadth
    at every level. Each position picks a letter or, when allowed, a bracket with
    equal probability; a bracket is never allowed right after another bracket.
    """
    letters = list(alphabet)
    breadth = rng.randint(1, max(1, max_breadth))
    factors: List[Factor] = []
    for _ in range(breadth):
        can_bracket = max_depth > 0 and not (factors and isinstance(factors[-1], Bracket))
        if can_bracket and rng.random() < 0.5:
            factors.append(Bracket(random_word(rng, letters, max_depth - 1, max_breadth)))
        else:
            factors.append(Letter(rng.choice(letters)))
    return BracketedWord(factors)
