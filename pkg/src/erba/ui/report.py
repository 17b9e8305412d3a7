from __future__ import annotations
from typing import List, Mapping, Optional, Sequence

from rich.table import Table

from ..checks.runner import SuiteResult
from ..companion.solver import CompanionResult
from ..findim.carrier import FinDimCarrier, Vector, format_vector
from ..structures.axioms import etd_variant_name, post_lie_variant_name

_VARIANT_NAMES = {"etd": etd_variant_name, "post-lie": post_lie_variant_name}


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def suite_lines(result: SuiteResult) -> List[str]:
    head = f"{result.suite} at weight {result.weight}"
    namer = _VARIANT_NAMES.get(result.suite)
    if namer:
        head += f": {namer(result.weight)}"
    lines = [head, result.summary()]
    for outcome in result.outcomes:
        if outcome.holds:
            continue
        lines.append(f"  FAIL {outcome.name}: {outcome.failed}/{outcome.passed + outcome.failed} samples")
        if outcome.first_failure:
            args = ", ".join(f"{v}={e}" for v, e in zip("xyz", outcome.first_failure))
            lines.append(f"    first counterexample: {args}")
    return lines


def companion_lines(result: CompanionResult) -> List[str]:
    basis = result.basis
    lines = [
        f"{basis.mode.value}-companion at weight {basis.weight}",
        f"dimension: {basis.dimension}",
    ]
    if result.classification is not None:
        lines.append(f"type: {result.classification.value}")
    lines.extend(f"  {rel}" for rel in basis.pretty())
    lines.append(f"matches reference: {_yes(result.matches_reference)}")
    return lines


def sweep_table(results: Sequence[CompanionResult]) -> Table:
    table = Table(title="Companion sweep")
    for col in ("mode", "weight", "dimension", "type", "matches reference"):
        table.add_column(col)
    for r in results:
        kind = r.classification.value if r.classification is not None else "-"
        table.add_row(
            r.basis.mode.value, str(r.basis.weight), str(r.basis.dimension), kind, _yes(r.matches_reference)
        )
    return table


def cayley_rich_table(carrier: FinDimCarrier, entries: List[List[Vector]], op: str) -> Table:
    names = carrier.basis_names
    table = Table(title=f"{op} table")
    table.add_column(op)
    for name in names:
        table.add_column(name)
    for name, row in zip(names, entries):
        table.add_row(name, *(format_vector(v, names) for v in row))
    return table


def cayley_lines(carrier: FinDimCarrier, entries: List[List[Vector]], op: str) -> List[str]:
    """Plain "a op b = ..." lines, one per ordered basis pair."""
    glyph = {"circle": "∘", "bracket": "[,]", "product": "·"}[op]
    names = carrier.basis_names
    return [
        f"{a} {glyph} {b} = {format_vector(v, names)}"
        for a, row in zip(names, entries)
        for b, v in zip(names, row)
    ]


def carrier_check_lines(carrier: FinDimCarrier, checks: Mapping[str, Optional[bool]]) -> List[str]:
    lines = [f"{carrier.kind.value} algebra on ({', '.join(carrier.basis_names)}), weight {carrier.weight}"]
    for name, verdict in checks.items():
        status = "skipped" if verdict is None else ("holds" if verdict else "FAILS")
        lines.append(f"  {name}: {status}")
    return lines
