"""The acceptance gate: one test per criterion, at the stated sizes and bounds.

Every criterion is exact (rational arithmetic, zero tolerance).  Each test
prints its own pass/fail line so a verbose run reads as the acceptance
report; the wall-clock limits stated alongside some criteria are asserted.
"""

import time

from math import comb

from homfilt import selftest as st


def _report(number, result, elapsed=None, limit=None):
    status = "pass" if result.ok else "FAIL"
    timing = f" [{elapsed:.2f}s < {limit}s]" if limit is not None else ""
    print(f"criterion {number:2d} [{status}] {result.name}: {result.detail}{timing}")
    assert result.ok, result.witness
    if limit is not None:
        assert elapsed < limit, f"criterion {number} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_01_quasi_abelian_axiom_suite():
    t0 = time.monotonic()
    result = st.suite_quasi_abelian_axioms(seed=101, count=500)
    _report(1, result, time.monotonic() - t0, 10.0)


def test_criterion_02_factorization_suite():
    result = st.suite_factorization(seed=102, count=300)
    _report(2, result)


def test_criterion_03_strictness_witness():
    result = st.suite_strictness(seed=103, count=500)
    _report(3, result)


def test_criterion_04_cone_acyclicity():
    result = st.suite_cone_acyclicity(seed=104, count=200)
    _report(4, result)


def test_criterion_05_model_structure_shadow():
    result = st.suite_lifting(seed=105, count=200)
    _report(5, result)


def test_criterion_06_monoid_axiom_core():
    result = st.suite_monoid_axiom(seed=106, count=200)
    _report(6, result)


def test_criterion_07_pbw():
    t0 = time.monotonic()
    result = st.suite_pbw(bound=6)
    elapsed = time.monotonic() - t0
    # the sl2 table is pinned inside the suite: C(n+2, 2) for n = 0..6
    assert [comb(n + 2, 2) for n in range(7)] == [1, 3, 6, 10, 15, 21, 28]
    _report(7, result, elapsed, 30.0)


def test_criterion_08_ce_acyclicity():
    result = st.suite_ce_acyclicity(weight_bound=4)
    _report(8, result)


def test_criterion_09_koszul_acyclicity():
    result = st.suite_koszul_acyclicity(degree_bound=6)
    _report(9, result)


def test_criterion_10_base_change():
    result = st.suite_base_change(seed=110, count=100)
    _report(10, result)


def test_criterion_11_critical_locus():
    t0 = time.monotonic()
    result = st.suite_critical_locus(degree_bound=8)
    _report(11, result, time.monotonic() - t0, 60.0)


def test_criterion_12_negative_controls():
    result = st.suite_negative_controls()
    _report(12, result)
