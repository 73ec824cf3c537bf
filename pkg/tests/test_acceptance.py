"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line.

Tolerances are pinned in e2qes.verify (TOL_* constants) and echoed in each line.
"""
import pytest

from e2qes import verify
from e2qes.verify import CRITERIA, run_criterion


def test_tolerances_are_pinned():
    assert (verify.TOL_CLOSED_FORM, verify.TOL_TABLE_DIGITS, verify.TOL_BOLD_REL, verify.TOL_FLOQUET,
            verify.TOL_GRAM, verify.TOL_MOMENTS, verify.TOL_RESIDUAL, verify.TOL_FUNCTIONAL) == \
        (1e-10, 5, 5e-5, 1e-3, 1e-8, 1e-8, 1e-9, 1e-8)
    assert [c.budget for c in CRITERIA] == [5, 30, 60, 120, 600, 60, 10, 5, 1, 5, 5]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion{c.number:02d}")
def test_criterion(criterion, capsys):
    result = run_criterion(criterion)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()
