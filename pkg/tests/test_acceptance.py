"""Acceptance criteria 1-16, one test each; a summary line per criterion is
printed (run with -s to see them, they are also in the junit/tee output)."""
import pytest

from redvar import checks

NUMBERS = [c[0] for c in checks.CHECKS]


@pytest.fixture(scope="module")
def report():
    results = {}
    yield results
    print()
    for k in sorted(results):
        print(results[k].line())


@pytest.mark.parametrize("number", NUMBERS, ids=[f"criterion_{n:02d}" for n in NUMBERS])
def test_criterion(number, report, capsys):
    res = checks.run_check(number)
    report[number] = res
    with capsys.disabled():
        print(f"\n{res.line()}  ({res.runtime:.1f}s, budget {res.budget:.0f}s)")
    assert res.ok, f"criterion {number} {res.status}: value={res.value} target={res.target} detail={res.detail}"
