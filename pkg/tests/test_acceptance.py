"""The ten acceptance criteria, one test each; run with ``-s`` to see the verdict lines."""
import pytest

from veritas import acceptance


@pytest.mark.parametrize("number", [n for n, *_ in acceptance.CRITERIA])
def test_criterion(number):
    outcome = acceptance.run(number)
    print(outcome.line)
    assert outcome.ok, outcome.detail


def test_summary(capsys):
    outcomes = acceptance.run_all()
    with capsys.disabled():
        print()
        for o in outcomes:
            print(o.line)
    assert len(outcomes) == 10
    assert all(o.ok for o in outcomes)
