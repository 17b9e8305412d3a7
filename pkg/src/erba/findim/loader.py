"""
Carrier documents (JSON):

    {"kind": "lie" | "associative",
     "basis": ["e", "f", "h"],
     "products": {"h,e": {"e": "2"}, ...},
     "operator": [["-2", "0", "-3/2"], ...],     # columns are images: P(b_j) = sum_i M[i][j] b_i
     "lambda": "1", "kappa": "1",
     "assignment": {"x": {"e": "1"}}}            # lift targets only

Omitted products are zero. For a Lie carrier a missing (j,i) entry is filled in
as the negative of (i,j).
"""

from __future__ import annotations
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple

from ..algebra.weight import Weight
from ..core.errors import CarrierFormatError, ErbaInputError, ErbaStructureError
from ..core.rational import as_rational
from .carrier import AlgebraKind, FinDimCarrier, OperatorMatrix, StructureConstants, Vector

_ALLOWED = {"kind", "basis", "products", "operator", "lambda", "kappa", "assignment", "description"}


def _rational(value: Any, where: str) -> Fraction:
    try:
        return as_rational(value)
    except ErbaInputError as e:
        raise CarrierFormatError(f"{where}: {e}") from None


def _coords(raw: Any, names: Tuple[str, ...], where: str) -> Vector:
    if not isinstance(raw, dict):
        raise CarrierFormatError(f"{where} must be a mapping from basis names to rationals")
    out = [Fraction(0)] * len(names)
    for name, value in raw.items():
        if name not in names:
            raise CarrierFormatError(f"{where} mentions unknown basis element {name!r}")
        out[names.index(name)] += _rational(value, f"{where}.{name}")
    return tuple(out)


def carrier_from_dict(doc: Mapping[str, Any]) -> FinDimCarrier:
    if not isinstance(doc, dict):
        raise CarrierFormatError("Carrier document must be a JSON object")
    for k in doc:
        if k not in _ALLOWED:
            raise CarrierFormatError(f"Unknown carrier key: {k}")
    for k in ("kind", "basis", "operator", "lambda", "kappa"):
        if k not in doc:
            raise CarrierFormatError(f"Missing carrier key: {k}")

    kind_raw = str(doc["kind"]).lower()
    try:
        kind = AlgebraKind(kind_raw)
    except ValueError:
        raise CarrierFormatError(f"Unknown kind {doc['kind']!r} (expected 'lie' or 'associative')") from None

    basis = doc["basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise CarrierFormatError("'basis' must be a nonempty list of names")
    names = tuple(basis)

    products = doc.get("products") or {}
    if not isinstance(products, dict):
        raise CarrierFormatError("'products' must be a mapping")
    constants: Dict[Tuple[int, int], Vector] = {}
    for key, image in products.items():
        parts = [p.strip() for p in str(key).split(",")]
        if len(parts) != 2 or any(p not in names for p in parts):
            raise CarrierFormatError(f"Product key {key!r} must be 'a,b' with basis names")
        i, j = names.index(parts[0]), names.index(parts[1])
        constants[(i, j)] = _coords(image, names, f"products[{key}]")
    if kind is AlgebraKind.LIE:
        for (i, j), vec in list(constants.items()):
            constants.setdefault((j, i), tuple(-v for v in vec))

    rows = doc["operator"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise CarrierFormatError("'operator' must be a list of rows")
    matrix = tuple(
        tuple(_rational(v, f"operator[{r}][{c}]") for c, v in enumerate(row)) for r, row in enumerate(rows)
    )
    weight = Weight(_rational(doc["lambda"], "lambda"), _rational(doc["kappa"], "kappa"))
    try:
        return FinDimCarrier(StructureConstants(names, kind, constants), OperatorMatrix(matrix), weight)
    except ErbaStructureError as e:
        raise CarrierFormatError(str(e)) from None


def _read(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"Carrier file not found: {path}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise CarrierFormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def load_carrier(path: Path) -> FinDimCarrier:
    return carrier_from_dict(_read(path))


def load_lift_target(path: Path) -> Tuple[FinDimCarrier, Dict[str, Vector]]:
    """A carrier plus its letter assignment {letter: vector}."""
    doc = _read(path)
    carrier = carrier_from_dict(doc)
    raw = doc.get("assignment")
    if not isinstance(raw, dict) or not raw:
        raise CarrierFormatError("A lift target needs a nonempty 'assignment' mapping")
    assignment = {}
    for letter, coords in raw.items():
        if not (isinstance(letter, str) and len(letter) == 1 and "a" <= letter <= "z"):
            raise CarrierFormatError(f"Assignment key {letter!r} is not a single lowercase letter")
        assignment[letter] = _coords(coords, carrier.basis_names, f"assignment.{letter}")
    return carrier, assignment
