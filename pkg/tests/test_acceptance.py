"""The ten acceptance criteria, one PASS/FAIL line each.

Each criterion compares reference values against an independent computation.
Run with ``pytest -s tests/test_acceptance.py`` to see the detail lines.
"""

import pytest

from permutrees.verify import SUITE_IDS, run_suite


@pytest.mark.parametrize("criterion", sorted(SUITE_IDS, key=int))
def test_criterion(criterion, record_property):
    check = run_suite(criterion)
    record_property("acceptance", (int(criterion), check.line()))
    print(check.line())
    for note in check.notes:
        print("    " + note)
    print(f"    ({check.seconds:.1f}s)")
    assert check.passed, check.line()
