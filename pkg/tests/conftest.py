from __future__ import annotations

import pytest

from hirzmonad.monad import k_from_chern
from hirzmonad.moduli import sample_Lk
from hirzmonad.selftest import WITNESS_CASES

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def sampled_points():
    """One point of L_k for each witness case (found with the fixed seeds)."""
    out = {}
    for q, seed in WITNESS_CASES.items():
        pts = sample_Lk(k_from_chern(*q), seed, 2000, max_points=1)
        out[q] = pts[0] if pts else None
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
