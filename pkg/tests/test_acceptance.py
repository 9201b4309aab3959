"""One test per acceptance criterion, each printing a single PASS/FAIL line."""
import pytest

from ptolemy_dn.verify import SUITES, run_suites

ACCEPTANCE_LINES: list[str] = []


@pytest.mark.parametrize("number", sorted(SUITES))
def test_criterion(number):
    (result,) = run_suites([number], n=4)
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, line
