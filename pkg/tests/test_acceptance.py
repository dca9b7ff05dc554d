"""Acceptance criteria: one PASS/FAIL line per suite, exact and timed."""

import pytest

from wreathring.verify import SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES), ids=[f"criterion_{SUITES[n][0]:02d}_{n}" for n in SUITES])
def test_acceptance(name):
    res = run_suite(name)
    print()
    print(res.line())
    if res.failures:
        print("  first failures:", res.failures[:3])
    assert res.ok, res.detail
    assert res.in_time, f"took {res.seconds:.1f}s, limit {res.limit:.0f}s"
