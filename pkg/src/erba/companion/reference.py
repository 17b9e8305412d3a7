"""
Known relation spaces, written as pairs (left tensor, right tensor) of operation
pairs, independently of the axiom lists in erba.structures.axioms.
"""

from __future__ import annotations
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from ..algebra.weight import Weight
from ..core.rational import as_rational
from ..structures.identities import DOT, PREC, SUCC
from .space import GeneratorSpace, Mode, RelationVector

Tensor = Dict[Tuple[str, str], Fraction]
Operand = Union[str, Mapping[str, object]]


class CompanionType(str, Enum):
    """Regimes of the di-companion: I (lambda=0, kappa=0), II (lambda=0, kappa!=0), III (lambda!=0)."""

    I = "I"
    II = "II"
    III = "III"


def classify(weight: Weight) -> CompanionType:
    if weight.lambda_:
        return CompanionType.III
    return CompanionType.II if weight.kappa else CompanionType.I


def _expand(op: Operand) -> List[Tuple[str, Fraction]]:
    if isinstance(op, str):
        return [(op, Fraction(1))]
    return [(s, as_rational(c)) for s, c in op.items()]  # type: ignore[arg-type]


def tensor(a: Operand, b: Operand, coeff: object = 1) -> Tensor:
    k = as_rational(coeff)  # type: ignore[arg-type]
    out: Tensor = {}
    for sa, ca in _expand(a):
        for sb, cb in _expand(b):
            out[(sa, sb)] = out.get((sa, sb), Fraction(0)) + k * ca * cb
    return out


def tsum(*parts: Tensor) -> Tensor:
    out: Tensor = {}
    for part in parts:
        for key, c in part.items():
            out[key] = out.get(key, Fraction(0)) + c
    return out


def relation(lhs: Tensor, rhs: Tensor, space: GeneratorSpace) -> RelationVector:
    n = len(space.symbols)
    pos = {s: i for i, s in enumerate(space.symbols)}
    vec = [Fraction(0)] * space.size
    for (a, b), c in lhs.items():
        vec[pos[a] * n + pos[b]] += c
    for (a, b), c in rhs.items():
        vec[n * n + pos[a] * n + pos[b]] += c
    return tuple(vec)


def tri_reference(weight: Weight) -> List[RelationVector]:
    """The seven generating relations of the extended tridendriform operad."""
    space = GeneratorSpace.for_mode(Mode.TRI)
    star_l = {PREC: 1, SUCC: 1, DOT: weight.lambda_}
    kdd = tensor(DOT, DOT, weight.kappa)
    pairs = [
        (tensor(PREC, PREC), tsum(tensor(PREC, star_l), kdd)),
        (tensor(SUCC, PREC), tensor(SUCC, PREC)),
        (tsum(tensor(star_l, SUCC), kdd), tensor(SUCC, SUCC)),
        (tensor(SUCC, DOT), tensor(SUCC, DOT)),
        (tensor(PREC, DOT), tensor(DOT, SUCC)),
        (tensor(DOT, PREC), tensor(DOT, PREC)),
        (tensor(DOT, DOT), tensor(DOT, DOT)),
    ]
    return [relation(lhs, rhs, space) for lhs, rhs in pairs]


def di_reference(weight: Weight) -> Tuple[CompanionType, List[RelationVector]]:
    """Expected di-companion generators for the weight's regime."""
    space = GeneratorSpace.for_mode(Mode.DI)
    star = {PREC: 1, SUCC: 1}
    kind = classify(weight)
    middle = (tensor(SUCC, PREC), tensor(SUCC, PREC))
    if kind is CompanionType.I:
        pairs = [
            (tensor(PREC, PREC), tensor(PREC, star)),
            middle,
            (tensor(star, SUCC), tensor(SUCC, SUCC)),
        ]
    elif kind is CompanionType.II:
        pairs = [
            (tsum(tensor(PREC, PREC), tensor(star, SUCC)), tsum(tensor(PREC, star), tensor(SUCC, SUCC))),
            middle,
        ]
    else:
        pairs = [middle]
    return kind, [relation(lhs, rhs, space) for lhs, rhs in pairs]
