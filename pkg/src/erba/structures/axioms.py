"""Axiom families of the operator-derived structures, each a list of QuadraticIdentity."""

from __future__ import annotations
from typing import Dict, List

from ..algebra.weight import Weight
from .identities import (
    CIRC,
    DOT,
    LBRK,
    PREC,
    SUCC,
    TRIL,
    TRIR,
    QuadraticIdentity,
    left,
    right,
)

YXZ = (1, 0, 2)
YZX = (1, 2, 0)
ZXY = (2, 0, 1)
ZYX = (2, 1, 0)


def star_lambda_combo(weight: Weight) -> Dict[str, object]:
    """prec + succ + lambda dot."""
    return {PREC: 1, SUCC: 1, DOT: weight.lambda_}


STAR = {PREC: 1, SUCC: 1}
ASTERISK = {TRIL: 1, TRIR: 1}


def etd_axioms(weight: Weight) -> List[QuadraticIdentity]:
    """The seven extended tridendriform identities with star_lambda expanded."""
    star = star_lambda_combo(weight)
    kappa = weight.kappa
    return [
        QuadraticIdentity.build("e1", left(PREC, PREC), right(PREC, star, -1), right(DOT, DOT, -kappa)),
        QuadraticIdentity.build("e2", left(SUCC, PREC), right(SUCC, PREC, -1)),
        QuadraticIdentity.build("e3", left(star, SUCC), left(DOT, DOT, kappa), right(SUCC, SUCC, -1)),
        QuadraticIdentity.build("e4", left(SUCC, DOT), right(SUCC, DOT, -1)),
        QuadraticIdentity.build("e5", left(PREC, DOT), right(DOT, SUCC, -1)),
        QuadraticIdentity.build("e6", left(DOT, PREC), right(DOT, PREC, -1)),
        QuadraticIdentity.build("e7", left(DOT, DOT), right(DOT, DOT, -1)),
    ]


def ed_axioms() -> List[QuadraticIdentity]:
    return [
        QuadraticIdentity.build(
            "ed1",
            left(PREC, PREC),
            left(STAR, SUCC),
            right(PREC, STAR, -1),
            right(SUCC, SUCC, -1),
        ),
        QuadraticIdentity.build("ed2", left(SUCC, PREC), right(SUCC, PREC, -1)),
    ]


def dendriform_axioms() -> List[QuadraticIdentity]:
    return [
        QuadraticIdentity.build("dd1", left(PREC, PREC), right(PREC, STAR, -1)),
        QuadraticIdentity.build("dd2", left(SUCC, PREC), right(SUCC, PREC, -1)),
        QuadraticIdentity.build("dd3", left(STAR, SUCC), right(SUCC, SUCC, -1)),
    ]


def post_lie_axioms(weight: Weight) -> List[QuadraticIdentity]:
    """Extended post-Lie identities in circ and lbrk."""
    post1 = QuadraticIdentity.build(
        "post1",
        left(CIRC, CIRC),
        left(CIRC, CIRC, -1, YXZ),
        left(LBRK, CIRC, weight.lambda_),
        left(LBRK, LBRK, weight.kappa),
        right(CIRC, CIRC, -1),
        right(CIRC, CIRC, 1, YXZ),
    )
    post2 = QuadraticIdentity.build(
        "post2",
        right(CIRC, LBRK),
        left(CIRC, LBRK, -1),
        right(LBRK, CIRC, -1, YXZ),
    )
    return [post1, post2]


def pre_lie_axioms() -> List[QuadraticIdentity]:
    """Extended pre-Lie identities in tril, trir and circ, with asterisk = tril + trir."""

    def associator_part(order, sign):
        # (a ⊳ b) ⊳ c - a ⊳ (b * c) + (a * b) ⊲ c - a ⊲ (b ⊲ c)
        return [
            *left(TRIL, TRIL, sign, order),
            *right(TRIL, ASTERISK, -sign, order),
            *left(ASTERISK, TRIR, sign, order),
            *right(TRIR, TRIR, -sign, order),
        ]

    epre1 = QuadraticIdentity.build("epre1", associator_part((0, 1, 2), 1), associator_part(YXZ, -1))

    def circ_part(order_xyz, order_zyx, sign):
        # (a∘b)∘c - a∘(b∘c) + (a⊳b)⊳c - a⊳(b*c) + c⊲(b⊲a) - (c*b)⊲a
        return [
            *left(CIRC, CIRC, sign, order_xyz),
            *right(CIRC, CIRC, -sign, order_xyz),
            *left(TRIL, TRIL, sign, order_xyz),
            *right(TRIL, ASTERISK, -sign, order_xyz),
            *right(TRIR, TRIR, sign, order_zyx),
            *left(ASTERISK, TRIR, -sign, order_zyx),
        ]

    epre2 = QuadraticIdentity.build("epre2", circ_part((0, 1, 2), ZYX, 1), circ_part(YXZ, ZXY, -1))
    return [epre1, epre2]


def classical_pre_lie_axiom(op: str = CIRC) -> QuadraticIdentity:
    """(x∘y)∘z - x∘(y∘z) = (y∘x)∘z - y∘(x∘z)."""
    return QuadraticIdentity.build(
        "pre-lie",
        left(op, op),
        right(op, op, -1),
        left(op, op, -1, YXZ),
        right(op, op, 1, YXZ),
    )


def jacobi_identity(op: str = LBRK) -> QuadraticIdentity:
    return QuadraticIdentity.build(
        "jacobi",
        left(op, op),
        left(op, op, 1, YZX),
        left(op, op, 1, ZXY),
    )


def associativity(op) -> QuadraticIdentity:
    return QuadraticIdentity.build("assoc", left(op, op), right(op, op, -1))


def etd_variant_name(weight: Weight) -> str:
    lam, kap = weight.lambda_, weight.kappa
    if not lam and not kap:
        return "tridendriform algebra of weight 0"
    if not kap:
        return f"tridendriform algebra of weight {lam}"
    if not lam:
        return f"modified tridendriform algebra of weight {kap}"
    return f"extended tridendriform algebra of weight {weight}"


def post_lie_variant_name(weight: Weight) -> str:
    lam, kap = weight.lambda_, weight.kappa
    if not kap:
        return f"post-Lie algebra of weight {lam}"
    if not lam:
        return f"modified post-Lie algebra of weight {kap}"
    return f"extended post-Lie algebra of weight {weight}"
