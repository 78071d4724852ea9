"""Acceptance criteria, one test per suite.

Each suite reports one PASS/FAIL line; the lines are collected and echoed
in the pytest terminal summary so they show up even without ``-s``.
"""
import pytest

from rfmonoid.suites import NEGATIVE, SUITES, run_suite

LINES: list[str] = []


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion(name):
    res = run_suite(name)
    LINES.append(res.line())
    print(res.line())
    assert res.failures == [], res.failures[:5]
    assert res.elapsed < res.limit, f"{res.elapsed:.2f}s over the {res.limit:g}s limit"
    assert res.checks > 0


def test_negative_control_fails():
    res = run_suite("negative")
    LINES.append(res.line() + "  (expected FAIL)")
    print(res.line())
    assert not res.passed
    assert len(res.failures) == res.checks == 4
    assert set(NEGATIVE) == {"negative"}
