"""Built-in carriers."""

from __future__ import annotations
from fractions import Fraction
from typing import List, Optional

from sympy import Rational, Symbol, solve

from ..algebra.weight import Weight
from ..core.errors import ErbaStructureError
from .carrier import AlgebraKind, FinDimCarrier, OperatorMatrix, StructureConstants

SL2_OPERATOR = (
    ("-2", "0", "-3/2"),
    ("0", "1", "-2"),
    ("1", "3/4", "-1/2"),
)


def sl2_structure() -> StructureConstants:
    """sl(2) in the basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    F = Fraction
    e, f, h = 0, 1, 2
    constants = {
        (h, e): (F(2), F(0), F(0)),
        (e, h): (F(-2), F(0), F(0)),
        (h, f): (F(0), F(-2), F(0)),
        (f, h): (F(0), F(2), F(0)),
        (e, f): (F(0), F(0), F(1)),
        (f, e): (F(0), F(0), F(-1)),
    }
    return StructureConstants(("e", "f", "h"), AlgebraKind.LIE, constants)


def sl2_example() -> FinDimCarrier:
    """sl(2) with an extended Rota-Baxter operator of weight (1,1)."""
    return FinDimCarrier(sl2_structure(), OperatorMatrix.of(SL2_OPERATOR), Weight.of(1, 1))


def scalar_operator_roots(weight: Weight) -> List[Fraction]:
    """Rational alpha with alpha^2 + lambda alpha + kappa = 0, i.e. alpha*id is an operator of this weight."""
    a = Symbol("alpha")
    lam, kap = Rational(weight.lambda_.numerator, weight.lambda_.denominator), Rational(
        weight.kappa.numerator, weight.kappa.denominator
    )
    roots = solve(a**2 + lam * a + kap, a)
    out = {Fraction(int(r.p), int(r.q)) for r in roots if r.is_Rational}
    return sorted(out)


def idempotent_example(weight: Optional[Weight] = None, alpha: Optional[Fraction] = None) -> FinDimCarrier:
    """The 1-dimensional algebra r*r = r with P = alpha*id; defaults to weight (0,-1), alpha = 1."""
    weight = weight or Weight.of(0, -1)
    if alpha is None:
        roots = scalar_operator_roots(weight)
        if not roots:
            raise ErbaStructureError(f"No rational scalar operator exists at weight {weight}")
        alpha = roots[-1]
    sc = StructureConstants(("r",), AlgebraKind.ASSOCIATIVE, {(0, 0): (Fraction(1),)})
    return FinDimCarrier(sc, OperatorMatrix.scalar(1, alpha), weight)
