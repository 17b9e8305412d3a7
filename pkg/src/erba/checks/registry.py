from __future__ import annotations
from dataclasses import dataclass
from importlib import import_module
from typing import Callable, Dict, List, Optional, Sequence

from ..algebra.free_erba import FreeErba
from ..algebra.term_sum import TermSum
from ..core.errors import UnknownSuiteError
from ..structures.identities import OpMemo


@dataclass(frozen=True)
class AxiomCheck:
    """
    One named property evaluated on `arity` sampled elements. Checks that share
    a memo reuse operation results within one sample.
    """

    name: str
    arity: int
    predicate: Callable[..., bool]
    memo: Optional[OpMemo] = None

    def holds(self, elements: Sequence[TermSum]) -> bool:
        return self.predicate(*elements[: self.arity])


SuiteBuilder = Callable[[FreeErba], List[AxiomCheck]]


class SuiteRegistry:
    _builders: Dict[str, SuiteBuilder] = {}

    @classmethod
    def register(cls, name: str) -> Callable[[SuiteBuilder], SuiteBuilder]:
        name = name.lower()

        def deco(fn: SuiteBuilder) -> SuiteBuilder:
            cls._builders[name] = fn
            return fn

        return deco

    @classmethod
    def get(cls, name: str) -> SuiteBuilder:
        key = name.lower()
        if key not in cls._builders:
            known = ", ".join(sorted(cls._builders))
            raise UnknownSuiteError(f"Suite '{name}' not registered (known: {known})")
        return cls._builders[key]

    @classmethod
    def names(cls) -> List[str]:
        return sorted(cls._builders)

    @classmethod
    def ensure_imports(cls) -> None:
        """
        Import the built-in suites so their @register decorators run.
        Call before get().
        """
        import_module("erba.checks.suites")
