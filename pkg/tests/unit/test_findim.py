# tests/unit/test_findim.py

from __future__ import annotations
import json
import sys
from fractions import Fraction
from pathlib import Path
import pytest

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.algebra.weight import Weight  # type: ignore
from erba.core.errors import CarrierFormatError, DimensionMismatchError, KindMismatchError  # type: ignore
from erba.findim.carrier import (  # type: ignore
    AlgebraKind,
    FinDimCarrier,
    OperatorMatrix,
    StructureConstants,
    bracket,
    cayley_table,
    check_erbo,
    check_erbo_sampled,
    check_extended_postlie,
    check_structure,
    circle,
    format_vector,
)
from erba.findim.examples import SL2_OPERATOR, idempotent_example, sl2_example, sl2_structure  # type: ignore
from erba.findim.loader import carrier_from_dict, load_carrier, load_lift_target  # type: ignore

CARRIERS = Path(__file__).resolve().parents[2] / "config" / "carriers"

# Rows e, f, h; columns e, f, h. h∘e works out to -e + 2h from the operator matrix.
SL2_CIRCLE = [
    ["2*e", "-2*f - 2*h", "4*e"],
    ["3/2*e - h", "-3/2*f", "2*f"],
    ["-e + 2*h", "f - 3/2*h", "3*e - 4*f"],
]


def named(carrier: FinDimCarrier, vec) -> str:
    return format_vector(vec, carrier.basis_names)


def test_sl2_brackets():
    sl2 = sl2_example()
    e, f, h = (sl2.basis(n) for n in "efh")
    assert named(sl2, bracket(sl2, h, e)) == "2*e"
    assert named(sl2, bracket(sl2, e, f)) == "h"
    assert named(sl2, bracket(sl2, f, e)) == "-h"
    assert check_structure(sl2.structure)


def test_sl2_operator_identity_and_post_lie():
    sl2 = sl2_example()
    assert sl2.weight == Weight.of(1, 1)
    assert check_erbo(sl2)
    assert check_erbo_sampled(sl2, samples=10, seed=4)
    assert check_extended_postlie(sl2)


def test_sl2_circle_table():
    sl2 = sl2_example()
    table = cayley_table(sl2, "circle")
    assert [[named(sl2, v) for v in row] for row in table] == SL2_CIRCLE
    e, f = sl2.basis("e"), sl2.basis("f")
    assert named(sl2, circle(sl2, e, f)) == "-2*f - 2*h"


def test_sl2_operator_at_the_wrong_weight_fails():
    wrong = FinDimCarrier(sl2_structure(), OperatorMatrix.of(SL2_OPERATOR), Weight.of(0, 0))
    assert not check_erbo(wrong)
    assert not check_extended_postlie(wrong)


def test_zero_operator_has_weight_zero():
    zero = FinDimCarrier(sl2_structure(), OperatorMatrix.scalar(3, 0), Weight.of(0, 0))
    assert check_erbo(zero)


def test_operator_columns_are_images():
    sl2 = sl2_example()
    assert sl2.apply_p(sl2.basis("e")) == (Fraction(-2), Fraction(0), Fraction(1))
    assert sl2.operator.column(1) == (Fraction(0), Fraction(1), Fraction(3, 4))


def test_kind_guards():
    sl2 = sl2_example()
    with pytest.raises(KindMismatchError):
        sl2.mul(sl2.basis("e"), sl2.basis("f"))
    with pytest.raises(KindMismatchError):
        sl2.commutator_carrier()
    line = idempotent_example()
    with pytest.raises(KindMismatchError):
        line.bracket(line.basis("r"), line.basis("r"))
    with pytest.raises(KindMismatchError):
        check_extended_postlie(line)
    with pytest.raises(KindMismatchError):
        cayley_table(sl2, "star")


def test_associative_operator_passes_to_the_commutator_algebra():
    line = idempotent_example()
    assert check_erbo(line)
    lie = line.commutator_carrier()
    assert lie.kind is AlgebraKind.LIE
    assert check_erbo(lie)


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        FinDimCarrier(sl2_structure(), OperatorMatrix.scalar(2, 1), Weight.of(0, 0))
    with pytest.raises(DimensionMismatchError):
        OperatorMatrix.of([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        StructureConstants(("a", "a"), AlgebraKind.ASSOCIATIVE, {})


def test_non_jacobi_constants_are_detected():
    bad = StructureConstants(
        ("a", "b", "c"),
        AlgebraKind.LIE,
        {
            (0, 1): (Fraction(0), Fraction(0), Fraction(1)),
            (1, 0): (Fraction(0), Fraction(0), Fraction(-1)),
            (0, 2): (Fraction(1), Fraction(0), Fraction(0)),
            (2, 0): (Fraction(-1), Fraction(0), Fraction(0)),
        },
    )
    assert not check_structure(bad)


def test_format_vector():
    assert format_vector((Fraction(0), Fraction(0)), ("a", "b")) == "0"
    assert format_vector((Fraction(-1), Fraction(1, 2)), ("a", "b")) == "-a + 1/2*b"


# ----- carrier files -----

def test_shipped_sl2_file_matches_the_builtin_example():
    loaded = load_carrier(CARRIERS / "sl2.json")
    builtin = sl2_example()
    assert loaded.structure.constants == builtin.structure.constants
    assert loaded.operator == builtin.operator
    assert loaded.weight == builtin.weight


def test_shipped_lift_target():
    carrier, assignment = load_lift_target(CARRIERS / "idempotent.json")
    assert carrier.weight == Weight.of(0, -1)
    assert assignment == {"x": (Fraction(1),), "y": (Fraction(1),)}
    assert check_erbo(carrier)


def _doc(**changes):
    doc = {
        "kind": "associative",
        "basis": ["r"],
        "products": {"r,r": {"r": "1"}},
        "operator": [["1"]],
        "lambda": "0",
        "kappa": "-1",
    }
    doc.update(changes)
    return {k: v for k, v in doc.items() if v is not None}


@pytest.mark.parametrize(
    "changes",
    [
        {"colour": "red"},
        {"kappa": None},
        {"kind": "jordan"},
        {"basis": []},
        {"products": {"r,s": {"r": "1"}}},
        {"products": {"r,r": {"s": "1"}}},
        {"operator": [["1", "0"]]},
        {"lambda": "1/0"},
    ],
)
def test_malformed_carrier_documents(changes):
    with pytest.raises(CarrierFormatError):
        carrier_from_dict(_doc(**changes))


def test_carrier_file_errors(tmp_path: Path):
    with pytest.raises(FileNotFoundError):
        load_carrier(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(CarrierFormatError):
        load_carrier(broken)
    no_assignment = tmp_path / "plain.json"
    no_assignment.write_text(json.dumps(_doc()), encoding="utf-8")
    with pytest.raises(CarrierFormatError):
        load_lift_target(no_assignment)
