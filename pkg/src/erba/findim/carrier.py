from __future__ import annotations
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from ..algebra.weight import Weight
from ..core.errors import DimensionMismatchError, KindMismatchError
from ..core.rational import RationalLike, as_rational, format_rational
from ..structures.axioms import post_lie_axioms
from ..structures.identities import CIRC, LBRK, Bindings, identity_holds

Vector = Tuple[Fraction, ...]


class AlgebraKind(str, Enum):
    ASSOCIATIVE = "associative"
    LIE = "lie"


def _zero(n: int) -> Vector:
    return (Fraction(0),) * n


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def _is_zero(x: Vector) -> bool:
    return not any(x)


@dataclass(frozen=True)
class StructureConstants:
    """constants[(i, j)] = product (or bracket) of basis i with basis j; missing pairs are 0."""

    basis_names: Tuple[str, ...]
    kind: AlgebraKind
    constants: Mapping[Tuple[int, int], Vector]

    def __post_init__(self) -> None:
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise DimensionMismatchError(f"Duplicate basis names in {self.basis_names}")
        for (i, j), vec in self.constants.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatchError(f"Product index ({i},{j}) outside a basis of size {n}")
            if len(vec) != n:
                raise DimensionMismatchError(f"Product ({i},{j}) has {len(vec)} coordinates, expected {n}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise DimensionMismatchError(f"Unknown basis element {name!r}") from None

    def basis(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def product(self, i: int, j: int) -> Vector:
        return self.constants.get((i, j), _zero(self.dim))

    def multiply(self, x: Vector, y: Vector) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatchError(f"Expected vectors of length {n}, got {len(x)} and {len(y)}")
        out = [Fraction(0)] * n
        for (i, j), vec in self.constants.items():
            c = x[i] * y[j]
            if c:
                for k, v in enumerate(vec):
                    if v:
                        out[k] += c * v
        return tuple(out)


def check_structure(sc: StructureConstants) -> bool:
    """Antisymmetry and Jacobi (lie) or associativity (associative) on basis elements."""
    basis = [sc.basis(i) for i in range(sc.dim)]
    m = sc.multiply
    if sc.kind is AlgebraKind.LIE:
        for i, j in cartesian(range(sc.dim), repeat=2):
            if not _is_zero(_add(sc.product(i, j), sc.product(j, i))):
                return False
        for x, y, z in cartesian(basis, repeat=3):
            total = _add(_add(m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y))
            if not _is_zero(total):
                return False
        return True
    return all(m(m(x, y), z) == m(x, m(y, z)) for x, y, z in cartesian(basis, repeat=3))


@dataclass(frozen=True)
class OperatorMatrix:
    """Columns hold images: P(b_j) = sum_i entries[i][j] b_i."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[RationalLike]]) -> "OperatorMatrix":
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))

    @classmethod
    def scalar(cls, n: int, alpha: RationalLike) -> "OperatorMatrix":
        a = as_rational(alpha)
        return cls(tuple(tuple(a if i == j else Fraction(0) for j in range(n)) for i in range(n)))

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise DimensionMismatchError(f"Operator matrix must be square, got a row of length {len(row)} for {n} rows")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def apply(self, x: Vector) -> Vector:
        if len(x) != self.dim:
            raise DimensionMismatchError(f"Operator of size {self.dim} applied to a vector of length {len(x)}")
        return tuple(sum((row[j] * x[j] for j in range(self.dim)), Fraction(0)) for row in self.entries)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)


class FinDimCarrier:
    """
    A finite-dimensional associative or Lie algebra with an operator matrix and
    a weight. Elements are coefficient tuples over the basis. The operator
    identity is checked on demand, never assumed.
    """

    def __init__(self, structure: StructureConstants, operator: OperatorMatrix, weight: Weight) -> None:
        if operator.dim != structure.dim:
            raise DimensionMismatchError(
                f"Operator is {operator.dim}x{operator.dim} but the basis has {structure.dim} elements"
            )
        self.structure = structure
        self.operator = operator
        self.weight = weight

    @property
    def kind(self) -> AlgebraKind:
        return self.structure.kind

    @property
    def basis_names(self) -> Tuple[str, ...]:
        return self.structure.basis_names

    def basis(self, name: Union[int, str]) -> Vector:
        i = name if isinstance(name, int) else self.structure.index(name)
        return self.structure.basis(i)

    def vector(self, coords: Mapping[str, RationalLike]) -> Vector:
        out = list(_zero(self.structure.dim))
        for name, c in coords.items():
            out[self.structure.index(name)] += as_rational(c)
        return tuple(out)

    # ----- linear structure -----
    def zero(self) -> Vector:
        return _zero(self.structure.dim)

    def add(self, a: Vector, b: Vector) -> Vector:
        return _add(a, b)

    def negate(self, a: Vector) -> Vector:
        return tuple(-v for v in a)

    def scale(self, c: RationalLike, a: Vector) -> Vector:
        return _scale(as_rational(c), a)

    def is_zero(self, a: Vector) -> bool:
        return _is_zero(a)

    def apply_p(self, a: Vector) -> Vector:
        return self.operator.apply(a)

    # ----- products -----
    def mul(self, a: Vector, b: Vector) -> Vector:
        if self.kind is not AlgebraKind.ASSOCIATIVE:
            raise KindMismatchError("mul needs an associative carrier; use bracket on a Lie carrier")
        return self.structure.multiply(a, b)

    def bracket(self, a: Vector, b: Vector) -> Vector:
        if self.kind is not AlgebraKind.LIE:
            raise KindMismatchError("bracket needs a Lie carrier")
        return self.structure.multiply(a, b)

    def circle(self, a: Vector, b: Vector) -> Vector:
        """x ∘ y = [P(x), y]."""
        return self.bracket(self.apply_p(a), b)

    def commutator_carrier(self) -> "FinDimCarrier":
        """The Lie algebra [a, b] = ab - ba of an associative carrier, same operator and weight."""
        if self.kind is not AlgebraKind.ASSOCIATIVE:
            raise KindMismatchError("Only an associative carrier has a commutator Lie algebra")
        sc = self.structure
        constants: Dict[Tuple[int, int], Vector] = {}
        for i, j in cartesian(range(sc.dim), repeat=2):
            vec = _add(sc.product(i, j), self.negate(sc.product(j, i)))
            if not _is_zero(vec):
                constants[(i, j)] = vec
        lie = StructureConstants(sc.basis_names, AlgebraKind.LIE, constants)
        return FinDimCarrier(lie, self.operator, self.weight)

    # ----- operator identity -----
    def erbo_defect(self, x: Vector, y: Vector) -> Vector:
        """
        associative: P(x)P(y) - P(xP(y) + P(x)y + lambda xy) - kappa xy
        lie:         [Px, Py] - P([Px, y] + [x, Py] + lambda [x, y]) - kappa [x, y]
        """
        m = self.structure.multiply
        lam, kap = self.weight.lambda_, self.weight.kappa
        px, py = self.apply_p(x), self.apply_p(y)
        xy = m(x, y)
        inner = _add(_add(m(px, y), m(x, py)), _scale(lam, xy))
        return _add(_add(m(px, py), self.negate(self.apply_p(inner))), _scale(-kap, xy))


def check_erbo(carrier: FinDimCarrier) -> bool:
    """The weight-(lambda, kappa) operator identity on all ordered basis pairs."""
    n = carrier.structure.dim
    return all(
        _is_zero(carrier.erbo_defect(carrier.basis(i), carrier.basis(j)))
        for i, j in cartesian(range(n), repeat=2)
    )


def random_vector(rng: random.Random, n: int) -> Vector:
    return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n))


def check_erbo_sampled(carrier: FinDimCarrier, samples: int = 20, seed: int = 0) -> bool:
    """The operator identity on random rational vectors, to cross-check the basis-pair reduction."""
    rng = random.Random(seed)
    n = carrier.structure.dim
    return all(
        _is_zero(carrier.erbo_defect(random_vector(rng, n), random_vector(rng, n))) for _ in range(samples)
    )


def circle(carrier: FinDimCarrier, x: Vector, y: Vector) -> Vector:
    return carrier.circle(x, y)


def bracket(carrier: FinDimCarrier, x: Vector, y: Vector) -> Vector:
    return carrier.bracket(x, y)


CAYLEY_OPS = ("circle", "bracket", "product")


def cayley_table(carrier: FinDimCarrier, op: str = "circle") -> List[List[Vector]]:
    """table[i][j] = b_i op b_j, rows and columns in basis order."""
    fns = {"circle": carrier.circle, "bracket": carrier.bracket, "product": carrier.mul}
    if op not in fns:
        raise KindMismatchError(f"Unknown Cayley operation {op!r} (expected one of {', '.join(CAYLEY_OPS)})")
    fn = fns[op]
    basis = [carrier.basis(i) for i in range(carrier.structure.dim)]
    return [[fn(a, b) for b in basis] for a in basis]


def post_lie_bindings(carrier: FinDimCarrier) -> Bindings[Vector]:
    return Bindings(carrier, {CIRC: carrier.circle, LBRK: carrier.bracket})


def check_extended_postlie(carrier: FinDimCarrier) -> bool:
    """Both post-Lie identities for ∘ = [P(-), -] on all basis triples, at the carrier's weight."""
    if carrier.kind is not AlgebraKind.LIE:
        raise KindMismatchError("The post-Lie check needs a Lie carrier")
    bindings = post_lie_bindings(carrier)
    identities = post_lie_axioms(carrier.weight)
    basis = [carrier.basis(i) for i in range(carrier.structure.dim)]
    return all(
        identity_holds(identity, x, y, z, bindings)
        for identity in identities
        for x, y, z in cartesian(basis, repeat=3)
    )


def format_vector(vec: Vector, names: Sequence[str]) -> str:
    """Render as "2*e - 3/2*f + h"; "0" for the zero vector."""
    parts: List[str] = []
    for c, name in zip(vec, names):
        if not c:
            continue
        mag = abs(c)
        body = name if mag == 1 else f"{format_rational(mag)}*{name}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"
