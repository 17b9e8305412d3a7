"""Built-in axiom suites over the free algebra, addressable by name."""

from __future__ import annotations
from typing import List

from ..algebra.free_erba import FreeErba
from ..structures.axioms import (
    dendriform_axioms,
    ed_axioms,
    etd_axioms,
    jacobi_identity,
    post_lie_axioms,
    pre_lie_axioms,
)
from ..structures.derived import (
    derived_ed_ops,
    derived_ops,
    diagram_commutes,
    lie_from_postlie,
    lie_from_prelie,
    post_lie_from_etd,
    pre_lie_from_ed,
    star_associative,
    star_lambda_associative,
)
from ..structures.identities import LBRK, Bindings, QuadraticIdentity, identity_holds
from .registry import AxiomCheck, SuiteRegistry


def _identity_checks(identities: List[QuadraticIdentity], bindings: Bindings) -> List[AxiomCheck]:
    def check(identity: QuadraticIdentity) -> AxiomCheck:
        return AxiomCheck(
            identity.name, 3, lambda x, y, z: identity_holds(identity, x, y, z, bindings), bindings.memo
        )

    return [check(i) for i in identities]


def _skew(name: str, bindings: Bindings) -> AxiomCheck:
    br = bindings.op(LBRK)
    return AxiomCheck(name, 2, lambda x, y: (br(x, y) + br(y, x)).is_zero(), bindings.memo)


@SuiteRegistry.register("assoc")
def assoc_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return [AxiomCheck("associativity", 3, algebra.check_assoc)]


@SuiteRegistry.register("erb")
def erb_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return [AxiomCheck("extended Rota-Baxter identity", 2, algebra.check_erb_identity)]


@SuiteRegistry.register("erbal")
def erbal_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return [AxiomCheck("commutator Lie identity", 2, algebra.check_erbal)]


@SuiteRegistry.register("etd")
def etd_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return _identity_checks(etd_axioms(algebra.weight), derived_ops(algebra))


@SuiteRegistry.register("ed")
def ed_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return _identity_checks(ed_axioms(), derived_ed_ops(algebra))


@SuiteRegistry.register("dendriform")
def dendriform_suite(algebra: FreeErba) -> List[AxiomCheck]:
    # classical dendriform axioms on x P(y), P(x) y; only weight (0,0) satisfies them
    return _identity_checks(dendriform_axioms(), derived_ops(algebra))


@SuiteRegistry.register("post-lie")
def post_lie_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return _identity_checks(post_lie_axioms(algebra.weight), post_lie_from_etd(derived_ops(algebra)))


@SuiteRegistry.register("pre-lie")
def pre_lie_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return _identity_checks(pre_lie_axioms(), pre_lie_from_ed(derived_ed_ops(algebra)))


@SuiteRegistry.register("star-assoc")
def star_assoc_suite(algebra: FreeErba) -> List[AxiomCheck]:
    etd, ed = derived_ops(algebra), derived_ed_ops(algebra)
    w = algebra.weight
    return [
        AxiomCheck(
            "star_lambda associativity", 3, lambda x, y, z: star_lambda_associative(x, y, z, etd, w), etd.memo
        ),
        AxiomCheck("star associativity", 3, lambda x, y, z: star_associative(x, y, z, ed), ed.memo),
    ]


@SuiteRegistry.register("jacobi")
def jacobi_suite(algebra: FreeErba) -> List[AxiomCheck]:
    post = lie_from_postlie(post_lie_from_etd(derived_ops(algebra)), algebra.weight)
    pre = lie_from_prelie(pre_lie_from_ed(derived_ed_ops(algebra)))
    jacobi = jacobi_identity(LBRK)
    return [
        AxiomCheck("post-Lie bracket jacobi", 3, lambda x, y, z: identity_holds(jacobi, x, y, z, post), post.memo),
        AxiomCheck("pre-Lie bracket jacobi", 3, lambda x, y, z: identity_holds(jacobi, x, y, z, pre), pre.memo),
        _skew("post-Lie bracket skew", post),
        _skew("pre-Lie bracket skew", pre),
    ]


@SuiteRegistry.register("diagram")
def diagram_suite(algebra: FreeErba) -> List[AxiomCheck]:
    return [AxiomCheck("bracket diagram", 2, lambda x, y: diagram_commutes(x, y, algebra))]
