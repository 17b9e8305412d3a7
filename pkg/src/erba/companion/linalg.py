"""Exact rational kernels and echelon forms, on sympy Rational matrices."""

from __future__ import annotations
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

Row = Tuple[Fraction, ...]


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> sympy.Matrix:
    return sympy.Matrix(len(rows), ncols, [_to_sympy(v) for row in rows for v in row])


def rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Row]:
    """Nonzero rows of the reduced row-echelon form; unique for a given row span."""
    if not rows:
        return []
    reduced, pivots = _matrix(rows, ncols).rref()
    return [tuple(_to_fraction(v) for v in reduced.row(i)) for i in range(len(pivots))]


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref_rows(rows, ncols))


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Row]:
    """Echelon basis of {v : M v = 0}; a matrix without rows has the whole space as kernel."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    kernel = _matrix(rows, ncols).nullspace()
    if not kernel:
        return []
    basis = [[_to_fraction(v) for v in vec] for vec in kernel]
    return rref_rows(basis, ncols)
