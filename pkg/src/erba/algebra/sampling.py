from __future__ import annotations
import random
from dataclasses import dataclass
from fractions import Fraction

from ..words.sampling import random_word
from .free_erba import FreeErba
from .term_sum import TermSum

_NUMERATORS = (-2, -1, 1, 1, 2, 3)
_DENOMINATORS = (1, 1, 2)


@dataclass(frozen=True)
class SamplingSettings:
    samples: int = 200
    max_depth: int = 3
    max_breadth: int = 3
    seed: int = 0
    max_terms: int = 1
    alphabet: str = "xyz"


def random_term_sum(
    rng: random.Random,
    algebra: FreeErba,
    max_depth: int,
    max_breadth: int,
    max_terms: int = 1,
) -> TermSum:
    """
    A random element with 1..max_terms words. A single word keeps coefficient 1;
    longer sums draw small nonzero rational coefficients.
    """
    count = rng.randint(1, max(1, max_terms))
    letters = list(algebra.alphabet)
    if count == 1:
        return algebra.from_word(random_word(rng, letters, max_depth, max_breadth))
    total = algebra.zero()
    for _ in range(count):
        coeff = Fraction(rng.choice(_NUMERATORS), rng.choice(_DENOMINATORS))
        word = random_word(rng, letters, max_depth, max_breadth)
        total = total + algebra.from_word(word).scale(coeff)
    return total


def random_elements(rng: random.Random, algebra: FreeErba, settings: SamplingSettings, count: int) -> tuple:
    return tuple(
        random_term_sum(rng, algebra, settings.max_depth, settings.max_breadth, settings.max_terms)
        for _ in range(count)
    )
