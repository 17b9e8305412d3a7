# tests/unit/test_runner.py

from __future__ import annotations
import sys
from pathlib import Path
import pytest

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.algebra.sampling import SamplingSettings  # type: ignore
from erba.algebra.weight import Weight  # type: ignore
from erba.checks.runner import run_suite  # type: ignore
from erba.core.errors import UnknownSuiteError  # type: ignore
from erba.ui.report import suite_lines  # type: ignore

QUICK = SamplingSettings(samples=10, max_depth=2, max_breadth=2, seed=7)


def test_etd_suite_holds_at_modified_weight():
    result = run_suite("etd", Weight.of(0, 1), QUICK)
    assert result.holds
    assert result.summary() == "7/7 axioms hold on 10 triples"
    assert suite_lines(result)[0] == "etd at weight (0,1): modified tridendriform algebra of weight 1"


@pytest.mark.parametrize("name", ["assoc", "erb", "erbal", "ed", "post-lie", "pre-lie", "star-assoc", "jacobi", "diagram"])
def test_builtin_suites_hold(name):
    assert run_suite(name, Weight.of(1, 1), QUICK).holds


def test_pair_suites_count_pairs():
    assert run_suite("erb", Weight.of(-3, 2), QUICK).summary() == "1/1 axioms hold on 10 pairs"


def test_failures_are_counted_and_reported():
    result = run_suite("dendriform", Weight.of(1, 0), QUICK)
    assert not result.holds
    assert result.summary() == "1/3 axioms hold on 10 triples"
    dd1 = result.outcomes[0]
    assert (dd1.passed, dd1.failed) == (0, 10)
    assert dd1.first_failure is not None and len(dd1.first_failure) == 3
    lines = suite_lines(result)
    assert "  FAIL dd1: 10/10 samples" in lines


def test_runs_are_reproducible():
    a = run_suite("post-lie", Weight.of(1, 1), QUICK)
    b = run_suite("post-lie", Weight.of(1, 1), QUICK)
    assert a == b


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("octonion", Weight.of(0, 0), QUICK)
