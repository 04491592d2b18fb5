"""The acceptance gate: one test per criterion, each printing a PASS/FAIL
line, all tolerances exact.  Run with ``pytest -s tests/test_acceptance.py``
to see the lines; the same checks back the ``verify-paper`` CLI command."""

import time

from quandles.verification import (claim_boundary, claim_closed_forms,
                                   claim_cyclic_realization,
                                   claim_decider_cross_validation,
                                   claim_dihedral_formulas,
                                   claim_invariant_tables, claim_merge_lists,
                                   claim_structure, claim_table1,
                                   claim_witness_structure)

TABLE1_BUDGET_SECONDS = 120.0
DIHEDRAL_BUDGET_SECONDS = 30.0
BOUNDARY_BUDGET_SECONDS = 300.0


def _report(criterion, result, elapsed=None):
    stamp = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    print(f"{'PASS' if result.ok else 'FAIL'}  criterion {criterion}: "
          f"{result.name}{stamp}" + (f" [{result.detail}]" if result.detail else ""))
    assert result.ok, result.detail


def test_criterion_1_table1_counts():
    t0 = time.time()
    result = claim_table1()
    elapsed = time.time() - t0
    _report(1, result, elapsed)
    assert elapsed < TABLE1_BUDGET_SECONDS


def test_criterion_2_closed_forms():
    _report(2, claim_closed_forms())


def test_criterion_3_merge_lists():
    _report(3, claim_merge_lists())


def test_criterion_4_invariant_tables():
    _report(4, claim_invariant_tables())


def test_criterion_5_dihedral_formulas():
    t0 = time.time()
    result = claim_dihedral_formulas()
    elapsed = time.time() - t0
    _report(5, result, elapsed)
    assert elapsed < DIHEDRAL_BUDGET_SECONDS


def test_criterion_6_decider_cross_validation():
    _report(6, claim_decider_cross_validation())


def test_criterion_7_cyclic_realization():
    _report(7, claim_cyclic_realization())


def test_criterion_8_structural_theorems():
    _report(8, claim_structure())


def test_criterion_9_order16_boundary():
    t0 = time.time()
    result = claim_boundary()
    elapsed = time.time() - t0
    _report(9, result, elapsed)
    assert elapsed < BOUNDARY_BUDGET_SECONDS


def test_criterion_10_witness_structure():
    _report(10, claim_witness_structure())
