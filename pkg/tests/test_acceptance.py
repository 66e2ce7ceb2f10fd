"""Acceptance suite: one test per criterion, each run at full size with exact arithmetic.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS/FAIL lines.
"""

from __future__ import annotations

import time

from qspieri import verify

BUDGET_SECONDS = 300


def _gate(label: str, build):
    start = time.time()
    rep = build()
    elapsed = time.time() - start
    for line in rep.lines():
        print(f"  {line}")
    ok = rep.ok and elapsed < BUDGET_SECONDS
    print(f"{'PASS' if ok else 'FAIL'} criterion {label}: {rep.summary()} in {elapsed:.1f}s")
    assert rep.ok, rep.summary()
    assert elapsed < BUDGET_SECONDS
    return rep


def _names(rep):
    return {c.name for c in rep.checks}


def test_criterion_1_hopf_morphism():
    rep = _gate("1 (Hopf morphism on B_3, Young |lambda|<=4, weak S_3)", verify.hopf_suite)
    for target in ("boolean:3", "young<=4", "weakS:3"):
        assert any(n.startswith(target) and "product" in n for n in _names(rep))
        assert any(n.startswith(target) and "coproduct" in n for n in _names(rep))


def test_criterion_2_duality():
    rep = _gate("2 (duality, weight <= 7, adjointness <= 6)", lambda: verify.duality_suite(7, 6))
    pairs = sum(2 ** (2 * (n - 1)) for n in range(1, 8))
    assert all(c.total == pairs for c in rep.checks if c.unit == "pairings")
    assert rep.checks[0].total >= 2 ** 12


def test_criterion_3_peak():
    rep = _gate("3 (peak ideal, psi/phi, peak = doubled descent)",
                lambda: verify.peak_suite(max_degree=6, chain_rank=4, random_posets=200))
    chains = next(c for c in rep.checks if "labelled chains" in c.name)
    assert chains.total == 3 + 9 + 27 + 81


def test_criterion_4_dimensions():
    rep = _gate("4 (graded dimensions, n <= 8)", lambda: verify.dims_suite(8))
    assert all(c.total == 8 for c in rep.checks)
    assert len(rep.checks) == 6


def test_criterion_5_skew_schur():
    _gate("5 (skew Schur, |lambda| <= 5)", lambda: verify.skew_schur_suite(5))


def test_criterion_6_p_partitions():
    rep = _gate("6 (P-partitions, <= 5 elements, 6 variables)",
                lambda: verify.pp_suite(max_elements=5, nvars=6))
    assert rep.count() > 0


def test_criterion_7_stanley():
    rep = _gate("7 (Stanley symmetric functions of types A, B, C, D)",
                lambda: verify.stanley_suite(sn=4, b3_length=5, d3_length=4))
    assert next(c for c in rep.checks if "weak S_4" in c.name).total == 24


def test_criterion_8_euler():
    rep = _gate("8 (Euler relations, halved 0-Bruhat B_2, chain negative)", verify.euler_suite)
    negative = [c for c in rep.checks if c.expect_failure]
    assert negative and all(c.failures for c in negative)


def test_criterion_9_quantum():
    rep = _gate("9 (quantum operators on C_{m,p})", verify.quantum_suite)
    example = next(c for c in rep.checks if "coefficient of (1,())" in c.name)
    assert example.passed == 1 and not example.failures
