"""Acceptance gate: one test per criterion, full budgets, stated time bounds.

Each test prints a single PASS/FAIL line (run pytest with -s to stream them).
The underlying checks live in wienerlab.verify so the CLI's verify-all runs
the identical code.
"""

import time

from wienerlab import verify
from wienerlab.cli import main

FULL = verify.FULL


def _gate(number: int, result: verify.CheckResult, limit: float | None = None) -> None:
    status = "PASS" if result.passed else "FAIL"
    bound = f" (limit {limit:.0f}s)" if limit else ""
    print(f"{status} criterion {number}: {result.name} [{result.seconds:.2f}s{bound}] {result.detail}")
    assert result.passed, f"criterion {number}: {result.detail}"
    if limit is not None:
        assert result.seconds < limit, f"criterion {number} exceeded {limit}s ({result.seconds:.1f}s)"


def test_criterion_01_petersen_exact():
    _gate(1, verify.check_petersen(), limit=1.0)


def test_criterion_02_family_sweep():
    _gate(2, verify.check_family_closed_forms(FULL), limit=30.0)


def test_criterion_03_graph_operations():
    _gate(3, verify.check_graph_operations(seed=42, budget=FULL), limit=60.0)


def test_criterion_04_grid_corollary():
    _gate(4, verify.check_grid_corollary(FULL), limit=10.0)


def test_criterion_05_dendrimer_closed_form():
    _gate(5, verify.check_dendrimer_closed_form(seed=42, budget=FULL), limit=120.0)


def test_criterion_06_complete_dendrimer_index():
    _gate(6, verify.check_complete_dendrimer_index(FULL))


def test_criterion_07_generating_function():
    _gate(7, verify.check_generating_function(FULL), limit=5.0)


def test_criterion_08_unimodality():
    _gate(8, verify.check_dendrimer_unimodality(FULL))


def test_criterion_09_tree_identities():
    _gate(9, verify.check_tree_identities(seed=42, budget=FULL))


def test_criterion_10_coxeter_bridge():
    _gate(10, verify.check_coxeter(FULL), limit=60.0)


def test_criterion_11_w_distance():
    _gate(11, verify.check_wdistance(seed=42, budget=FULL), limit=120.0)


def test_criterion_12_verify_all_small(capsys):
    start = time.perf_counter()
    code = main(["verify-all", "--seed", "42", "--budget", "small"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    with capsys.disabled():
        status = "PASS" if code == 0 else "FAIL"
        print(f"{status} criterion 12: verify-all --budget small [{elapsed:.2f}s (limit 300s)]")
    assert code == 0, f"verify-all reported failures:\n{out}"
    assert "FAIL" not in out
    assert elapsed < 300.0
