"""Acceptance criteria 1-10, one PASS/FAIL line each.

Runs under pytest (lines are printed even with capture on) or directly:
``python tests/test_acceptance.py``.  All comparisons are exact.
"""

import sys
import time

import pytest

from dyckstat import checks

ORACLE_MAX = 12
RESULTS = {}


def _line(k, msg, elapsed):
    status = "PASS" if msg is None else "FAIL"
    text = f"{status} criterion {k:2d}: {checks.DESCRIPTIONS[k - 1]} ({elapsed:.1f}s)"
    return text if msg is None else f"{text}\n    {msg}"


def evaluate(k):
    if k not in RESULTS:
        t0 = time.perf_counter()
        msg = checks.CRITERIA[k - 1](ORACLE_MAX)
        RESULTS[k] = (msg, time.perf_counter() - t0)
    return RESULTS[k]


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, capsys):
    msg, elapsed = evaluate(k)
    with capsys.disabled():
        print("\n" + _line(k, msg, elapsed))
    assert msg is None, msg


if __name__ == "__main__":
    failed = 0
    for k in range(1, 11):
        msg, elapsed = evaluate(k)
        failed += msg is not None
        print(_line(k, msg, elapsed))
    sys.exit(1 if failed else 0)
