"""Acceptance criteria, one test each.

A PASS/FAIL line per criterion is printed in the terminal summary; running
this file directly prints the same lines without pytest.
"""

import sys

import pytest

from jacsplit import acceptance, zeta
from jacsplit.acceptance import CRITERIA, run_criterion

RESULTS = []


@pytest.mark.parametrize("ident", [c[0] for c in CRITERIA])
def test_criterion(ident):
    out = run_criterion(ident)
    RESULTS.append(out.line())
    assert out.passed, out.detail


def test_injected_count_error_breaks_decomposition(monkeypatch):
    real = zeta.count_points_odd

    def off_by_one(curve, m=1, guard=None, workers=None):
        return real(curve, m, guard, workers) + 1

    monkeypatch.setattr(zeta, "count_points_odd", off_by_one)
    try:
        ok, _ = acceptance.ac3a()
    except ArithmeticError:
        ok = False
    assert not ok


if __name__ == "__main__":
    outcomes = acceptance.run_all(echo=print)
    sys.exit(0 if all(o.passed for o in outcomes) else 1)
