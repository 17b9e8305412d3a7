# tests/unit/test_registry.py

from __future__ import annotations
import sys
from pathlib import Path
import pytest

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.checks.registry import AxiomCheck, SuiteRegistry  # type: ignore
from erba.core.errors import UnknownSuiteError  # type: ignore


def test_registry_register_and_get():
    @SuiteRegistry.register("Dummy")
    def dummy_suite(algebra):
        return [AxiomCheck("always", 1, lambda x: True)]

    # Case-insensitive lookup
    assert SuiteRegistry.get("dummy") is dummy_suite
    assert SuiteRegistry.get("DUMMY") is dummy_suite


def test_registry_unknown_raises():
    with pytest.raises(UnknownSuiteError, match="not registered"):
        SuiteRegistry.get("does-not-exist")


def test_builtin_suites_are_registered_on_import():
    SuiteRegistry.ensure_imports()
    names = set(SuiteRegistry.names())
    assert {
        "assoc", "erb", "erbal", "etd", "ed", "dendriform",
        "post-lie", "pre-lie", "star-assoc", "jacobi", "diagram",
    } <= names


def test_axiom_check_uses_only_its_arity():
    check = AxiomCheck("pair", 2, lambda x, y: x < y)
    assert check.holds([1, 2, 0])
    assert not check.holds([2, 1, 3])
