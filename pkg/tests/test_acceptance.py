"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All values are exact integers; tolerance is equality everywhere.  Criterion 4
re-runs at order 6 when IRR_CHAIN_MAX_N=6 is set.

Criterion 5 is a deliberate, documented red: the equality it asserts
(minimum maximal VC-irredundant size == vertex cover number for every graph
of order <= 6) is mathematically false.  The triangular prism (graph6
"ELv_") has vcir = 3 < tau = 4: each triangle is a maximal VC-irredundant
set whose vertices privately cover the matching edges.  The engine's values
are pinned by an independent oracle in test_irredundance.
"""

import os

from irredundance.closures import ClosureRule
from irredundance.graphs import disjoint_union, path
from irredundance.tar import KIND_X_SETS, KIND_XIR_SETS, build_tar, tar_isomorphic
from irredundance.verify import (
    SuiteResult,
    suite_bounds,
    suite_chain,
    suite_characterizations,
    suite_closure_families,
    suite_closure_laws,
    suite_dom_chain,
    suite_hitting,
    suite_tar_isomorphism,
    suite_trees,
    suite_vcir_eq_tau,
    verify_family_tables,
    verify_figures,
)


def _gate(number: int, name: str, result: SuiteResult) -> None:
    status = "PASS" if result.passed else "FAIL"
    print(
        f"ACCEPTANCE {number} {name}: {status} "
        f"({result.graphs_checked} graphs, {len(result.failures)} failures)"
    )
    detail = "; ".join(f"{g} {p} {d}" for g, p, d in result.failures[:8])
    assert result.passed, f"criterion {number} ({name}): {detail}"


def test_criterion_01_family_tables():
    _gate(1, "table fixtures", verify_family_tables(11))


def test_criterion_02_figure_fixtures():
    _gate(2, "figure fixtures", verify_figures())


def test_criterion_03_hitting_theorems():
    _gate(3, "hitting theorems", suite_hitting(5))


def test_criterion_04_parameter_chain():
    max_n = int(os.environ.get("IRR_CHAIN_MAX_N", "5"))
    _gate(4, f"xir<=X<=Xbar<=XIR (order<={max_n})", suite_chain(max_n))


def test_criterion_05_vcir_equals_tau():
    # Faithful to the stated criterion; red on the 60 labeled triangular
    # prisms, where vcir = 3 < tau = 4 and the exchange has no path.
    _gate(5, "vcir == tau + exchange witnesses (order<=6)", suite_vcir_eq_tau(6))


def test_criterion_06_extended_domination_chain():
    _gate(6, "extended domination chain", suite_dom_chain(5))


def test_criterion_07_closure_laws_and_families():
    laws = suite_closure_laws(5)
    families = suite_closure_families(5)
    merged = SuiteResult("closure laws+families")
    merged.graphs_checked = laws.graphs_checked + families.graphs_checked
    merged.failures = laws.failures + families.failures
    _gate(7, "closure laws and derived families", merged.finish())


def test_criterion_08_characterizations():
    _gate(8, "extreme-value characterizations (order<=6)", suite_characterizations(6))


def test_criterion_09_bound_suite():
    _gate(9, "bound suite (order<=6)", suite_bounds(6))


def test_criterion_10_tree_suite():
    _gate(10, "tree suite (order<=10)", suite_trees(10))


def test_criterion_11_tar_checks():
    res = SuiteResult("tar checks")
    g = disjoint_union(path(2), path(2))
    t1 = build_tar(g, KIND_XIR_SETS, ClosureRule.VERTEX_COVER)
    t2 = build_tar(path(4), KIND_XIR_SETS, ClosureRule.VERTEX_COVER)
    res.graphs_checked += 2
    if tar_isomorphic(t1, t2) is None:
        res.fail(t1.base_g6, "tar:K2uK2-eq-P4", "expected isomorphic VCIr TARs")
    t3 = build_tar(path(4), KIND_X_SETS, ClosureRule.VERTEX_COVER)
    if tar_isomorphic(t2, t3) is not None:
        res.fail(t2.base_g6, "tar:P4-Cir-vs-C", "expected non-isomorphic")
    scan = suite_tar_isomorphism(5)
    res.graphs_checked += scan.graphs_checked
    res.failures += scan.failures
    _gate(11, "TAR isomorphism checks", res.finish())
