"""The nine acceptance criteria at full size; one pass/fail line each.

Set ``CONTRACTILE_JOBS`` to spread the corpora over worker processes.
"""

from __future__ import annotations

import os

import pytest

from contractile.verify import DEFAULT_SEED, SUITES

ACCEPTANCE_LINES: list[str] = []

JOBS = int(os.environ.get("CONTRACTILE_JOBS", "1"))


@pytest.mark.slow
@pytest.mark.parametrize("suite", list(SUITES))
def test_criterion(suite):
    result = SUITES[suite](seed=DEFAULT_SEED, jobs=JOBS)
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.summary
