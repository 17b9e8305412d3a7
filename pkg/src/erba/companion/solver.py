"""
Companion relation spaces by exact linear algebra.

Every arity-3 monomial over the generator space is evaluated in the free algebra
on {x, y, z} with the operator realizations. The occurring bracketed words index
the rows of a coefficient matrix; the relation space is its kernel.
"""

from __future__ import annotations
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.free_erba import FreeErba
from ..algebra.sampling import SamplingSettings, random_elements
from ..algebra.term_sum import TermSum
from ..algebra.weight import Weight
from ..core.errors import ModeMismatchError
from ..structures.derived import derived_ops
from ..structures.identities import Arity3Monomial, Bindings, Side, identity_holds
from ..words.bracketed import BracketedWord
from . import linalg
from .reference import CompanionType, di_reference, tri_reference
from .space import GeneratorSpace, Mode, RelationVector, from_relation_vector, relation_pretty

log = logging.getLogger(__name__)

COMPANION_ALPHABET = "xyz"


@dataclass(frozen=True)
class RelationBasis:
    """Reduced row-echelon basis of a relation space."""

    vectors: Tuple[RelationVector, ...]
    weight: Weight
    mode: Mode

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def space(self) -> GeneratorSpace:
        return GeneratorSpace.for_mode(self.mode)

    def pretty(self) -> List[str]:
        return [relation_pretty(v, self.space) for v in self.vectors]


@dataclass(frozen=True)
class CoefficientMatrix:
    rows: Tuple[BracketedWord, ...]
    columns: Tuple[Arity3Monomial, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)


@dataclass(frozen=True)
class CompanionResult:
    basis: RelationBasis
    reference: RelationBasis
    matches_reference: bool
    classification: Optional[CompanionType] = None


def _realization(mode: Mode, weight: Weight, alphabet: str = COMPANION_ALPHABET) -> Bindings[TermSum]:
    space = GeneratorSpace.for_mode(mode)
    full = derived_ops(FreeErba(alphabet, weight))
    return Bindings(full.carrier, {s: full.op(s) for s in space.symbols}, full.memo)


def evaluate_monomial(m: Arity3Monomial, mode: Mode, weight: Weight) -> TermSum:
    """((x a y) b z) or (x a (y b z)) with a, b realized through the operator."""
    bindings = _realization(Mode(mode), weight)
    algebra: FreeErba = bindings.carrier  # type: ignore[assignment]
    args = tuple(algebra.letter(s) for s in COMPANION_ALPHABET)
    return m.evaluate(args, bindings)


def coefficient_matrix(mode: Mode, weight: Weight) -> CoefficientMatrix:
    """Rows: occurring words in canonical order. Right-associated columns are negated."""
    mode = Mode(mode)
    space = GeneratorSpace.for_mode(mode)
    bindings = _realization(mode, weight)
    algebra: FreeErba = bindings.carrier  # type: ignore[assignment]
    args = tuple(algebra.letter(s) for s in COMPANION_ALPHABET)
    columns = space.monomials()
    values = [m.evaluate(args, bindings) for m in columns]
    rows = sorted({w for v in values for w in v.words()})
    entries = tuple(
        tuple(
            v.coefficient(w) if m.side is Side.LEFT else -v.coefficient(w)
            for m, v in zip(columns, values)
        )
        for w in rows
    )
    log.debug("%s matrix at %s: %d x %d", mode.value, weight, len(rows), len(columns))
    return CoefficientMatrix(tuple(rows), tuple(columns), entries)


def nullspace(matrix: CoefficientMatrix, mode: Mode, weight: Weight) -> RelationBasis:
    vectors = linalg.nullspace(matrix.entries, len(matrix.columns))
    return RelationBasis(tuple(vectors), weight, Mode(mode))


def echelon_basis(vectors: Iterable[Sequence[Fraction]], mode: Mode, weight: Weight) -> RelationBasis:
    space = GeneratorSpace.for_mode(mode)
    return RelationBasis(tuple(linalg.rref_rows(list(vectors), space.size)), weight, Mode(mode))


def span_equal(a: RelationBasis, b: RelationBasis) -> bool:
    if a.mode != b.mode:
        raise ModeMismatchError(f"Cannot compare a {a.mode.value} basis with a {b.mode.value} basis")
    size = a.space.size
    return linalg.rref_rows(list(a.vectors), size) == linalg.rref_rows(list(b.vectors), size)


def in_span(basis: RelationBasis, vector: Sequence[Fraction]) -> bool:
    size = basis.space.size
    rows = list(basis.vectors)
    return linalg.rank(rows + [tuple(vector)], size) == linalg.rank(rows, size)


def _solve(mode: Mode, weight: Weight) -> RelationBasis:
    basis = nullspace(coefficient_matrix(mode, weight), mode, weight)
    log.info("%s-companion at %s: dimension %d", mode.value, weight, basis.dimension)
    return basis


def tri_companion(weight: Weight) -> CompanionResult:
    basis = _solve(Mode.TRI, weight)
    reference = echelon_basis(tri_reference(weight), Mode.TRI, weight)
    return CompanionResult(basis, reference, span_equal(basis, reference))


def di_companion(weight: Weight) -> CompanionResult:
    basis = _solve(Mode.DI, weight)
    kind, expected = di_reference(weight)
    reference = echelon_basis(expected, Mode.DI, weight)
    return CompanionResult(basis, reference, span_equal(basis, reference), kind)


def companion(mode: Mode, weight: Weight) -> CompanionResult:
    return tri_companion(weight) if Mode(mode) is Mode.TRI else di_companion(weight)


def sweep(weights: Iterable[Weight], modes: Sequence[Mode] = (Mode.TRI, Mode.DI)) -> List[CompanionResult]:
    weights = list(weights)
    return [companion(mode, w) for mode in modes for w in weights]


def verify_relations(basis: RelationBasis, settings: SamplingSettings) -> Dict[int, bool]:
    """
    Replay each basis relation as an identity on random elements of the free
    algebra with the operator realizations. Maps vector index -> holds on all samples.
    """
    space = basis.space
    bindings = _realization(basis.mode, basis.weight, settings.alphabet)
    algebra: FreeErba = bindings.carrier  # type: ignore[assignment]
    identities = [from_relation_vector(v, space, f"r{i + 1}") for i, v in enumerate(basis.vectors)]
    rng = random.Random(settings.seed)
    verdict = {i: True for i in range(len(identities))}
    for _ in range(settings.samples):
        x, y, z = random_elements(rng, algebra, settings, 3)
        with bindings.memo.scope():
            for i, identity in enumerate(identities):
                if verdict[i] and not identity_holds(identity, x, y, z, bindings):
                    verdict[i] = False
    return verdict
