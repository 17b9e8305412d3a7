from __future__ import annotations
import logging
import random
from contextlib import ExitStack
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..algebra.free_erba import FreeErba
from ..algebra.sampling import SamplingSettings, random_elements
from ..algebra.weight import Weight
from .registry import SuiteRegistry

log = logging.getLogger(__name__)


@dataclass
class AxiomOutcome:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[Tuple[str, ...]] = None

    @property
    def holds(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteResult:
    suite: str
    weight: Weight
    samples: int
    arity: int
    outcomes: List[AxiomOutcome] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(o.holds for o in self.outcomes)

    @property
    def passed_axioms(self) -> int:
        return sum(1 for o in self.outcomes if o.holds)

    def summary(self) -> str:
        noun = "triples" if self.arity == 3 else "pairs"
        return f"{self.passed_axioms}/{len(self.outcomes)} axioms hold on {self.samples} {noun}"


def run_suite(name: str, weight: Weight, settings: SamplingSettings) -> SuiteResult:
    """
    Evaluate every check of a registered suite on seeded random elements of the
    free algebra over settings.alphabet. Same name, weight and settings give the
    same result.
    """
    SuiteRegistry.ensure_imports()
    builder = SuiteRegistry.get(name)
    algebra = FreeErba(settings.alphabet, weight)
    checks = builder(algebra)
    arity = max(c.arity for c in checks)
    rng = random.Random(settings.seed)
    log.debug(
        "suite %s at %s: %d samples, depth<=%d, breadth<=%d, seed=%d",
        name, weight, settings.samples, settings.max_depth, settings.max_breadth, settings.seed,
    )

    outcomes = [AxiomOutcome(c.name) for c in checks]
    memos = list({id(c.memo): c.memo for c in checks if c.memo is not None}.values())
    for _ in range(settings.samples):
        elements = random_elements(rng, algebra, settings, arity)
        # one scope per sample: checks share operation results on these elements only
        with ExitStack() as stack:
            for memo in memos:
                stack.enter_context(memo.scope())
            for check, outcome in zip(checks, outcomes):
                if check.holds(elements):
                    outcome.passed += 1
                else:
                    outcome.failed += 1
                    if outcome.first_failure is None:
                        outcome.first_failure = tuple(str(e) for e in elements[: check.arity])

    log.debug("suite %s: %d cached word products", name, algebra.cache_size())
    result = SuiteResult(name.lower(), weight, settings.samples, arity, outcomes)
    log.info("suite %s at %s: %s", name, weight, result.summary())
    return result
