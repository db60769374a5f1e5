"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import pytest

from commgrowth.repro import CRITERIA


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number, capsys):
    result = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.values
