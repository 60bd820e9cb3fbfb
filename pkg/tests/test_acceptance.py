"""Acceptance gate: every criterion of the verification campaign at its stated tolerance.

The full suite runs once per session; each criterion is its own test and a
PASS/FAIL line per criterion is printed in the terminal summary.
"""

import time

import pytest

from bamehta import campaign as cp

# wall-clock budgets (seconds) stated alongside the criteria
BUDGETS = {"C1": 1.0, "C2": 300.0, "C3": 300.0, "C8": 600.0, "C9": 900.0}
SEED = 0
RESULTS: dict = {}


@pytest.fixture(scope="module")
def campaign_run():
    timings = {}
    rows = {}
    ctx = cp.Context("full", SEED, cp.QuadConfig())
    for cid in cp.CRITERIA:
        t0 = time.perf_counter()
        rows[cid] = cp.run_criterion(cid, ctx)
        timings[cid] = time.perf_counter() - t0
    return rows, timings


def _describe(row):
    return f"{row.case}: rel_err={row.rel_err:.3g} tol={row.tol:g}" + (f" ({row.note})" if row.note else "")


@pytest.mark.parametrize("cid", list(cp.CRITERIA))
def test_criterion(cid, campaign_run):
    rows, timings = campaign_run
    got = rows[cid]
    failed = [r for r in got if not r.passed]
    title = cp.CRITERIA[cid][0]
    slow = cid in BUDGETS and timings[cid] > BUDGETS[cid]
    ok = bool(got) and not failed and not slow
    line = f"{'PASS' if ok else 'FAIL'} {cid:<4} {title} [{len(got)} rows, {timings[cid]:.2f}s]"
    RESULTS[cid] = line
    print(line)
    for r in failed:
        print("    " + _describe(r))
    assert got, f"{cid} produced no rows"
    assert not failed, "\n".join(_describe(r) for r in failed)
    assert not slow, f"{cid} took {timings[cid]:.1f}s, budget {BUDGETS[cid]:.0f}s"


def test_full_run_byte_identical(campaign_run):
    rows, _ = campaign_run
    first = [r for cid in cp.CRITERIA for r in rows[cid]]
    second = cp.run_acceptance("full", SEED)
    cfg = {"suite": "full", "seed": SEED}
    a = cp.dumps(cp.build_report(first, cfg))
    b = cp.dumps(cp.build_report(second, cfg))
    ok = a == b
    RESULTS["C11-rerun"] = f"{'PASS' if ok else 'FAIL'} C11  full campaign rerun is byte-identical"
    assert ok
