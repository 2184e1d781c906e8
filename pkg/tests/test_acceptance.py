"""One test per acceptance criterion; each prints a PASS/FAIL line with its timing."""
import pytest

from centress.verify import CRITERIA, run_criterion

ACCEPTANCE_LINES: list[str] = []


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=lambda n: f"criterion_{n}")
def test_acceptance_criterion(number, capsys):
    result = run_criterion(number)
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)
    assert result.passed, result.notes
    assert result.in_time, f"took {result.seconds:.2f} s, limit {result.limit} s"
