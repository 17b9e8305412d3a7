# tests/unit/test_companion.py

from __future__ import annotations
import sys
from fractions import Fraction
from pathlib import Path
import pytest

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.algebra.free_erba import FreeErba  # type: ignore
from erba.algebra.sampling import SamplingSettings  # type: ignore
from erba.algebra.weight import STANDARD_WEIGHTS, Weight  # type: ignore
from erba.companion import linalg  # type: ignore
from erba.companion.reference import CompanionType, classify  # type: ignore
from erba.companion.solver import (  # type: ignore
    coefficient_matrix,
    companion,
    di_companion,
    echelon_basis,
    evaluate_monomial,
    in_span,
    span_equal,
    sweep,
    tri_companion,
    verify_relations,
)
from erba.companion.space import GeneratorSpace, Mode, from_relation_vector, relation_pretty, to_relation_vector  # type: ignore
from erba.core.errors import ModeMismatchError  # type: ignore
from erba.structures.axioms import associativity, dendriform_axioms, ed_axioms, etd_axioms  # type: ignore
from erba.structures.derived import derived_ops  # type: ignore
from erba.structures.identities import DOT, PREC, SUCC, Arity3Monomial, Side, eval_identity  # type: ignore
from erba.words.bracketed import Alphabet  # type: ignore
from erba.words.parser import parse_word  # type: ignore

F = Fraction
DI_DIMENSIONS = {"(0,0)": 3, "(1,0)": 1, "(0,1)": 2, "(1,1)": 1, "(-3,2)": 1}


# ----- exact linear algebra -----

def test_nullspace_and_rank():
    rows = [(F(1), F(1), F(0)), (F(2), F(2), F(0))]
    assert linalg.rank(rows, 3) == 1
    kernel = linalg.nullspace(rows, 3)
    assert len(kernel) == 2
    for v in kernel:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0
    assert linalg.nullspace([], 2) == [(F(1), F(0)), (F(0), F(1))]
    assert linalg.nullspace([(F(1), F(0)), (F(0), F(1))], 2) == []


def test_rref_is_a_span_invariant():
    a = [(F(1), F(2)), (F(0), F(1))]
    b = [(F(3), F(1)), (F(1), F(1))]
    assert linalg.rref_rows(a, 2) == linalg.rref_rows(b, 2) == [(F(1), F(0)), (F(0), F(1))]


# ----- generator spaces -----

def test_generator_spaces():
    tri, di = GeneratorSpace.for_mode(Mode.TRI), GeneratorSpace.for_mode(Mode.DI)
    assert (tri.size, di.size) == (18, 8)
    assert len(tri.monomials()) == 18
    assert di.monomials()[0] == Arity3Monomial(Side.LEFT, PREC, PREC)
    assert di.monomials()[4] == Arity3Monomial(Side.RIGHT, PREC, PREC)


def test_relation_vectors_read_left_equals_right():
    di = GeneratorSpace.for_mode(Mode.DI)
    vec = to_relation_vector(ed_axioms()[1], di)
    assert relation_pretty(vec, di) == "(x ≻ y) ≺ z = x ≻ (y ≺ z)"
    assert to_relation_vector(from_relation_vector(vec, di), di) == vec
    assert relation_pretty((F(0),) * 8, di) == "0 = 0"


def test_operator_realizations():
    m = Arity3Monomial(Side.LEFT, SUCC, PREC)
    assert str(evaluate_monomial(m, Mode.DI, Weight.of(0, 0))) == "[x]y[z]"
    dot = Arity3Monomial(Side.RIGHT, DOT, DOT)
    assert str(evaluate_monomial(dot, Mode.TRI, Weight.of(1, 1))) == "xyz"


def test_coefficient_matrix_shape():
    tri = coefficient_matrix(Mode.TRI, Weight.of(1, 1))
    di = coefficient_matrix(Mode.DI, Weight.of(1, 1))
    assert tri.shape[1] == 18 and di.shape[1] == 8
    assert list(tri.rows) == sorted(tri.rows)


TRI_WORDS = ["x[y[z]]", "x[[y]z]", "x[yz]", "xyz", "[x[y]]z", "x[y]z", "[x]y[z]", "[[x]y]z", "[x]yz", "xy[z]", "[xy]z"]
DI_WORDS = ["x[y[z]]", "x[[y]z]", "x[yz]", "xyz", "[x[y]]z", "[x]y[z]", "[[x]y]z", "[xy]z"]


@pytest.mark.parametrize("mode, words", [(Mode.TRI, TRI_WORDS), (Mode.DI, DI_WORDS)])
def test_coefficient_matrix_rows_and_entries(mode, words):
    matrix = coefficient_matrix(mode, Weight.of(1, 1))
    xyz = Alphabet.of("xyz")
    assert matrix.shape == (len(words), GeneratorSpace.for_mode(mode).size)
    assert set(matrix.rows) == {parse_word(t, xyz) for t in words}
    assert {e for row in matrix.entries for e in row} <= {0, 1, -1}


# ----- companion relation spaces -----

def test_classification():
    assert classify(Weight.of(0, 0)) is CompanionType.I
    assert classify(Weight.of(0, 5)) is CompanionType.II
    assert classify(Weight.of(-3, 2)) is CompanionType.III


@pytest.mark.parametrize("weight", STANDARD_WEIGHTS, ids=str)
def test_tri_companion_is_the_tridendriform_operad(weight):
    result = tri_companion(weight)
    assert result.basis.dimension == 7
    assert result.matches_reference
    # the hand-written axiom list spans the same space
    axioms = echelon_basis(
        [to_relation_vector(a, result.basis.space) for a in etd_axioms(weight)], Mode.TRI, weight
    )
    assert span_equal(axioms, result.basis)


@pytest.mark.parametrize("weight", STANDARD_WEIGHTS, ids=str)
def test_di_companion_dimension_and_type(weight):
    result = di_companion(weight)
    assert result.basis.dimension == DI_DIMENSIONS[str(weight)]
    assert result.classification is classify(weight)
    assert result.matches_reference


def test_type_three_relation():
    result = companion(Mode.DI, Weight.of(1, 0))
    assert result.basis.pretty() == ["(x ≻ y) ≺ z = x ≻ (y ≺ z)"]


def test_extended_dendriform_relations_at_type_two():
    result = di_companion(Weight.of(0, 1))
    space = result.basis.space
    for identity in ed_axioms():
        assert in_span(result.basis, to_relation_vector(identity, space))


def test_non_relations_are_outside_the_span():
    di = di_companion(Weight.of(1, 0))
    assert not in_span(di.basis, to_relation_vector(associativity(PREC), di.basis.space))
    tri = tri_companion(Weight.of(0, 0))
    assert in_span(tri.basis, to_relation_vector(associativity(DOT), tri.basis.space))
    assert not in_span(tri.basis, to_relation_vector(associativity(PREC), tri.basis.space))


@pytest.mark.parametrize(
    "lam, kappa, value",
    [
        (0, 0, "x[[y]z]"),
        (1, 0, "x[[y]z] + x[yz]"),
        (0, 1, "x[[y]z] + xyz"),
        (1, 1, "x[[y]z] + x[yz] + xyz"),
        (-3, 2, "x[[y]z] - 3*x[yz] + 2*xyz"),
    ],
)
def test_prec_is_not_associative(lam, kappa, value):
    alg = FreeErba("xyz", Weight.of(lam, kappa))
    x, y, z = (alg.letter(s) for s in "xyz")
    assert str(eval_identity(associativity(PREC), x, y, z, derived_ops(alg))) == value


def test_extended_dendriform_axioms_inside_the_dendriform_span():
    weight = Weight.of(0, 0)
    di = GeneratorSpace.for_mode(Mode.DI)
    dendriform = echelon_basis([to_relation_vector(a, di) for a in dendriform_axioms()], Mode.DI, weight)
    extended = echelon_basis([to_relation_vector(a, di) for a in ed_axioms()], Mode.DI, weight)
    assert (dendriform.dimension, extended.dimension) == (3, 2)
    assert all(in_span(dendriform, v) for v in extended.vectors)
    assert not span_equal(dendriform, extended)
    assert span_equal(dendriform, di_companion(weight).basis)
    assert span_equal(extended, di_companion(Weight.of(0, 1)).basis)


def test_bases_of_different_modes_do_not_compare():
    with pytest.raises(ModeMismatchError):
        span_equal(tri_companion(Weight.of(0, 0)).basis, di_companion(Weight.of(0, 0)).basis)


def test_relations_replay_on_random_elements():
    settings = SamplingSettings(samples=8, max_depth=2, max_breadth=2, seed=2, max_terms=2)
    for result in (tri_companion(Weight.of(1, 1)), di_companion(Weight.of(0, 1))):
        verdict = verify_relations(result.basis, settings)
        assert len(verdict) == result.basis.dimension
        assert all(verdict.values())


def test_sweep_visits_every_weight_and_mode():
    weights = [Weight.of(0, 0), Weight.of(1, 0)]
    results = sweep(iter(weights))
    assert [(r.basis.mode, str(r.basis.weight)) for r in results] == [
        (Mode.TRI, "(0,0)"),
        (Mode.TRI, "(1,0)"),
        (Mode.DI, "(0,0)"),
        (Mode.DI, "(1,0)"),
    ]
    assert all(r.matches_reference for r in results)
