"""Operations induced by an operator P on a carrier, and the brackets built from them."""

from __future__ import annotations
from typing import TypeVar

from ..algebra.weight import Weight
from ..core.ports import ErbaCarrier
from .axioms import associativity, star_lambda_combo, STAR
from .identities import CIRC, DOT, LBRK, PREC, SUCC, TRIL, TRIR, Bindings, identity_holds

E = TypeVar("E")


def derived_ops(carrier: ErbaCarrier[E]) -> Bindings[E]:
    """x ≺ y = x P(y), x ≻ y = P(x) y, x ⊙ y = x y."""
    c = carrier
    return Bindings(
        c,
        {
            PREC: lambda x, y: c.mul(x, c.apply_p(y)),
            SUCC: lambda x, y: c.mul(c.apply_p(x), y),
            DOT: c.mul,
        },
    )


def derived_ed_ops(carrier: ErbaCarrier[E]) -> Bindings[E]:
    """x ≺' y = x P(y) + lambda x y, x ≻' y = P(x) y."""
    c = carrier
    lam = c.weight.lambda_
    return Bindings(
        c,
        {
            PREC: lambda x, y: c.add(c.mul(x, c.apply_p(y)), c.scale(lam, c.mul(x, y))),
            SUCC: lambda x, y: c.mul(c.apply_p(x), y),
        },
    )


def star_lambda(x: E, y: E, bindings: Bindings[E], weight: Weight) -> E:
    """x ≺ y + x ≻ y + lambda x ⊙ y."""
    return bindings.combine(
        (coeff, bindings.op(sym)(x, y)) for sym, coeff in star_lambda_combo(weight).items() if coeff
    )


def star(x: E, y: E, bindings: Bindings[E]) -> E:
    """x ≺ y + x ≻ y, the product of an extended dendriform algebra."""
    return bindings.combine((1, bindings.op(sym)(x, y)) for sym in STAR)


def star_lambda_associative(x: E, y: E, z: E, bindings: Bindings[E], weight: Weight) -> bool:
    return identity_holds(associativity(star_lambda_combo(weight)), x, y, z, bindings)


def star_associative(x: E, y: E, z: E, bindings: Bindings[E]) -> bool:
    return identity_holds(associativity(STAR), x, y, z, bindings)


def post_lie_from_etd(bindings: Bindings[E]) -> Bindings[E]:
    """[x, y] = x⊙y - y⊙x and x∘y = x≻y - y≺x."""
    c = bindings.carrier
    dot, prec, succ = bindings.op(DOT), bindings.op(PREC), bindings.op(SUCC)
    return Bindings(
        c,
        {
            LBRK: lambda x, y: c.add(dot(x, y), c.negate(dot(y, x))),
            CIRC: lambda x, y: c.add(succ(x, y), c.negate(prec(y, x))),
        },
        bindings.memo,
    )


def lie_from_postlie(bindings: Bindings[E], weight: Weight) -> Bindings[E]:
    """{x, y} = x∘y - y∘x + lambda [x, y], bound as lbrk."""
    c = bindings.carrier
    circ, lbrk = bindings.op(CIRC), bindings.op(LBRK)
    lam = weight.lambda_
    return Bindings(
        c,
        {LBRK: lambda x, y: bindings.combine([(1, circ(x, y)), (-1, circ(y, x)), (lam, lbrk(x, y))])},
        bindings.memo,
    )


def pre_lie_from_ed(bindings: Bindings[E]) -> Bindings[E]:
    """x⊳y = x≺y, x⊲y = x≻y, x∘y = x≻y - y≺x."""
    c = bindings.carrier
    prec, succ = bindings.op(PREC), bindings.op(SUCC)
    return Bindings(
        c,
        {
            TRIL: prec,
            TRIR: succ,
            CIRC: lambda x, y: c.add(succ(x, y), c.negate(prec(y, x))),
        },
        bindings.memo,
    )


def lie_from_prelie(bindings: Bindings[E]) -> Bindings[E]:
    """[x, y] = x∘y - y∘x, bound as lbrk."""
    c = bindings.carrier
    circ = bindings.op(CIRC)
    return Bindings(c, {LBRK: lambda x, y: c.add(circ(x, y), c.negate(circ(y, x)))}, bindings.memo)


def _commutator(product, carrier: ErbaCarrier[E], x: E, y: E) -> E:
    return carrier.add(product(x, y), carrier.negate(product(y, x)))


def diagram_commutes(x: E, y: E, carrier: ErbaCarrier[E]) -> bool:
    """
    The Lie brackets reached along both paths agree on (x, y):
    tridendriform -> star_lambda -> commutator vs tridendriform -> post-Lie -> bracket,
    and dendriform -> star -> commutator vs dendriform -> pre-Lie -> bracket.
    The two star products coincide, so all four brackets must be equal.
    """
    weight = carrier.weight
    etd = derived_ops(carrier)
    ed = derived_ed_ops(carrier)

    via_star_lambda = _commutator(lambda a, b: star_lambda(a, b, etd, weight), carrier, x, y)
    via_post_lie = lie_from_postlie(post_lie_from_etd(etd), weight).op(LBRK)(x, y)
    via_star = _commutator(lambda a, b: star(a, b, ed), carrier, x, y)
    via_pre_lie = lie_from_prelie(pre_lie_from_ed(ed)).op(LBRK)(x, y)

    def same(a: E, b: E) -> bool:
        return carrier.is_zero(carrier.add(a, carrier.negate(b)))

    return same(via_star_lambda, via_post_lie) and same(via_star, via_pre_lie) and same(via_star_lambda, via_star)
