# tests/unit/test_lift.py

from __future__ import annotations
import random
import sys
from fractions import Fraction
from pathlib import Path
import pytest

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.algebra.free_erba import FreeErba  # type: ignore
from erba.algebra.lift import Lift, lift  # type: ignore
from erba.algebra.sampling import SamplingSettings, random_elements  # type: ignore
from erba.algebra.weight import Weight  # type: ignore
from erba.core.errors import ErbaStructureError, UnassignedLetterError, WeightMismatchError  # type: ignore
from erba.findim.examples import idempotent_example, scalar_operator_roots  # type: ignore

MINUS_ONE = Weight.of(0, -1)


def test_scalar_operator_roots():
    assert scalar_operator_roots(MINUS_ONE) == [Fraction(-1), Fraction(1)]
    assert scalar_operator_roots(Weight.of(-3, 2)) == [Fraction(1), Fraction(2)]
    assert scalar_operator_roots(Weight.of(1, 0)) == [Fraction(-1), Fraction(0)]
    assert scalar_operator_roots(Weight.of(0, 1)) == []
    with pytest.raises(ErbaStructureError):
        idempotent_example(Weight.of(0, 1))


def test_lift_into_the_idempotent_line():
    target = idempotent_example()
    source = FreeErba("xy", MINUS_ONE)
    f = lift({"x": (Fraction(1),), "y": (Fraction(1),)}, target, source)
    assert f(source.element("x[y]")) == (Fraction(1),)
    assert f(source.element("x - y")) == (Fraction(0),)
    # [x][y] = [x[y]] + [[x]y] - xy in the source; both sides map to 1
    assert f(source.mul(source.element("[x]"), source.element("[y]"))) == (Fraction(1),)


def test_negative_scalar_operator_flips_odd_depths():
    target = idempotent_example(alpha=Fraction(-1))
    source = FreeErba("x", MINUS_ONE)
    f = Lift(source, target, {"x": (Fraction(1),)})
    assert f(source.element("[x]")) == (Fraction(-1),)
    assert f(source.element("[[x]]x")) == (Fraction(1),)


def test_homomorphism_on_sampled_pairs():
    target = idempotent_example()
    source = FreeErba("xy", MINUS_ONE)
    f = Lift(source, target, {"x": (Fraction(1),), "y": (Fraction(-2),)})
    settings = SamplingSettings(samples=30, max_depth=3, max_breadth=3, max_terms=3, alphabet="xy")
    rng = random.Random(9)
    for _ in range(settings.samples):
        u, v = random_elements(rng, source, settings, 2)
        assert f.homomorphism_holds(u, v)


def test_lift_between_free_algebras():
    weight = Weight.of(1, 1)
    source = FreeErba("x", weight)
    target = FreeErba("yz", weight)
    f = Lift(source, target, {"x": target.element("y + [z]")})
    assert str(f(source.element("[x]"))) == "[[z]] + [y]"
    assert f.homomorphism_holds(source.element("[x]x"), source.element("[x]"))


def test_weights_must_match():
    with pytest.raises(WeightMismatchError):
        Lift(FreeErba("xy", Weight.of(1, 0)), idempotent_example(), {"x": (Fraction(1),)})


def test_every_letter_needs_an_image():
    source = FreeErba("xyz", MINUS_ONE)
    f = Lift(source, idempotent_example(), {"x": (Fraction(1),)})
    with pytest.raises(UnassignedLetterError):
        f(source.element("x[z]"))


@pytest.mark.parametrize("weight", [Weight.of(1, 1), Weight.of(-3, 2)], ids=str)
def test_lift_of_the_letters_into_their_own_algebra_is_the_identity(weight):
    source = FreeErba("xy", weight)
    f = Lift(source, source, {s: source.letter(s) for s in "xy"})
    settings = SamplingSettings(samples=25, max_depth=2, max_breadth=3, seed=4, max_terms=3, alphabet="xy")
    rng = random.Random(settings.seed)
    for _ in range(settings.samples):
        (u,) = random_elements(rng, source, settings, 1)
        assert f(u) == u
