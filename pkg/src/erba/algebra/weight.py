from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction

from ..core.rational import RationalLike, as_rational, format_rational, parse_rational
from ..core.errors import RationalFormatError


@dataclass(frozen=True)
class Weight:
    """The pair (lambda, kappa) every product and identity depends on."""

    lambda_: Fraction
    kappa: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambda_", as_rational(self.lambda_))
        object.__setattr__(self, "kappa", as_rational(self.kappa))

    @classmethod
    def of(cls, lambda_: RationalLike, kappa: RationalLike) -> "Weight":
        return cls(as_rational(lambda_), as_rational(kappa))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse "lambda,kappa", e.g. "-3/2,2"."""
        parts = [p.strip() for p in str(text).strip().strip("()").split(",")]
        if len(parts) != 2:
            raise RationalFormatError(f"Weight must look like 'lambda,kappa', got {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))

    def __str__(self) -> str:
        return f"({format_rational(self.lambda_)},{format_rational(self.kappa)})"


STANDARD_WEIGHTS = (
    Weight.of(0, 0),
    Weight.of(1, 0),
    Weight.of(0, 1),
    Weight.of(1, 1),
    Weight.of(-3, 2),
)
