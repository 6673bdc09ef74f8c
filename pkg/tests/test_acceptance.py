"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are repeated in the terminal summary; ``pccfl selftest`` prints
the same lines from the command line.
"""
import pytest

from conftest import ACCEPTANCE_LINES
from pccfl.acceptance import CRITERIA, DEFAULT_SEED, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = run_criterion(number, DEFAULT_SEED)
    print(result.line())
    ACCEPTANCE_LINES[number] = result.line()
    assert result.passed, result.line()
