"""Acceptance criteria, one test each, at their stated exactness.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python -m
tests.test_acceptance``; either way one PASS/FAIL line per criterion is
printed.
"""

from __future__ import annotations

import time

import pytest

from dextral.verification import CHECKS, CheckResult, Context

RESULTS: dict[int, tuple[CheckResult, float]] = {}

# [L[m], L(n)] = L(2^(m-1)+n) is required for 1 <= n <= 6, but at m = 2,
# n = 1 it fails in every dextral algebra with [L,L] not inside the left
# annihilator, e.g. [z,x] = z. The check still runs unweakened.
KNOWN_FALSE = {
    8: "[L[2], L(1)] != L(3) for [z,x]=z; identity holds only from n = 2 on",
}


def run_criterion(number: int) -> CheckResult:
    if number not in RESULTS:
        start = time.perf_counter()
        result = CHECKS[number - 1].run(Context())
        RESULTS[number] = (result, time.perf_counter() - start)
    return RESULTS[number][0]


def summary_lines() -> list[str]:
    lines = []
    for number in sorted(RESULTS):
        result, seconds = RESULTS[number]
        lines.append(f"criterion {number:2d} {result.id:20s} {result.status.upper():7s} {seconds:6.2f}s")
    return lines


def _param(number: int):
    marks = []
    if number in KNOWN_FALSE:
        marks.append(pytest.mark.xfail(strict=True, reason=KNOWN_FALSE[number]))
    return pytest.param(number, id=f"{number:02d}-{CHECKS[number - 1].id}", marks=marks)


@pytest.mark.parametrize("number", [_param(n) for n in range(1, len(CHECKS) + 1)])
def test_criterion(number):
    result = run_criterion(number)
    problems = [d for d in result.details if d.startswith(("FAIL", "UNKNOWN"))]
    assert result.status == "pass", "\n".join(problems[:10])


def test_suite_is_fast():
    for n in range(1, len(CHECKS) + 1):
        run_criterion(n)
    total = sum(seconds for _, seconds in RESULTS.values())
    assert total < 30, f"acceptance suite took {total:.1f}s"


if __name__ == "__main__":
    for n in range(1, len(CHECKS) + 1):
        run_criterion(n)
    print("\n".join(summary_lines()))
