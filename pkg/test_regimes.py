#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты классификации режимов, порогов и границ
"""

import os
import sys
from math import comb

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kset_core import PreconditionError
from regimes import (
    CrossoverStatus, Inequality, Regime, bounds, classify, default_scan_cap, ekr_bound, ineq_crossover,
    inequality_holds, regime_table, theorem14_check, theorem54_value, thm43_threshold,
)


@pytest.mark.parametrize('n,k,regime', [
    (7, 3, Regime.CONSTRUCTION_BEATS),
    (22, 4, Regime.CONJECTURE_HOLDS),
    (6, 3, Regime.DEGENERATE),
    (17, 4, Regime.GREY_ZONE),
])
def test_classify_examples(n, k, regime):
    assert classify(n, k).regime is regime


def test_classify_witnesses_are_exact():
    r = classify(7, 3)
    assert (r.c_nk1, r.c_nk, r.c_n1) == (3, 6, 15)
    doc = r.to_document()
    assert doc['regime'] == 'ConstructionBeats'
    assert doc['witnesses']['C(n-1,k-1)'] == '15'


def test_boundary_case_outside_strict_grey_condition():
    # 2·C(8,2) = 56 = C(11,2) + 1: ни одно решающее неравенство не выполнено,
    # но строгая двойная оценка тоже ложна
    r = classify(12, 3)
    assert r.regime is Regime.GREY_ZONE
    assert not r.strict_grey


def test_grey_zone_for_k4():
    report = theorem14_check(4, 256)
    assert report.grey_zone == [17, 18, 19, 20, 21]
    assert report.max_construction_beats_n == 16
    assert report.min_conjecture_holds_n == 22
    assert report.ok


def test_failure_clause_vacuous_for_k3():
    assert theorem14_check(3, 108).lower_clause_vacuous
    assert not theorem14_check(6, 864).lower_clause_vacuous


def test_trichotomy_and_threshold_clauses():
    for k in range(3, 13):
        report = theorem14_check(k, 4 * k ** 3)
        assert report.ok, f"k={k}: {report.upper_clause_violations} {report.lower_clause_violations}"
        for n in report.boundary_cases:
            assert classify(n, k).regime is Regime.GREY_ZONE
        # серая зона лежит между последним выигрышем построения и началом гипотезы
        assert all(report.max_construction_beats_n < n < report.min_conjecture_holds_n for n in report.grey_zone)


def test_theorem14_check_preconditions():
    with pytest.raises(PreconditionError):
        theorem14_check(2, 100)
    with pytest.raises(PreconditionError):
        theorem14_check(5, 10)


def test_bounds_values():
    b = bounds(7, 3)
    assert (b.ekr, b.hm, b.conjecture_value, b.prop41_upper) == (15, 13, 7, 9)
    assert b.fstar_value == 8
    assert bounds(11, 4).fstar_value == 60
    assert bounds(7, 3).to_document()['ekr'] == '15'
    assert all(bounds(n, 4).ekr == ekr_bound(n, 4) == comb(n - 1, 3) for n in range(9, 30))
    with pytest.raises(PreconditionError):
        bounds(6, 3)


def test_theorem54_matches_fstar_value():
    for k in range(2, 8):
        for n in range(2 * k + 1, 40):
            assert theorem54_value(n, k) == bounds(n, k).fstar_value


def test_thm43_threshold():
    y = comb(19, 5)
    assert thm43_threshold(20, 6, 3) == y - comb(16, 5) + comb(16, 13)
    with pytest.raises(PreconditionError):
        thm43_threshold(20, 6, 7)
    with pytest.raises(PreconditionError):
        thm43_threshold(20, 3, 3)


def test_eq_5_3_and_5_7_at_fifty():
    assert inequality_holds(Inequality.EQ_5_3, 50, 5)
    assert not inequality_holds(Inequality.EQ_5_7, 50, 5)
    result = ineq_crossover(5, Inequality.EQ_5_7)
    assert result.status is CrossoverStatus.FOUND
    assert result.n <= 50
    assert not inequality_holds(Inequality.EQ_5_7, result.n, 5)


def test_eq_5_12_holds_in_cubic_regime():
    assert all(inequality_holds(Inequality.EQ_5_12, n, 5) for n in range(125, 501))


@pytest.mark.parametrize('k', [5, 6, 7])
def test_eq_5_12_crossover_is_cubic(k):
    result = ineq_crossover(k, Inequality.EQ_5_12)
    assert result.status is CrossoverStatus.FOUND
    assert 0.3 <= result.n / k ** 3 <= 1.1
    assert ineq_crossover(k, Inequality.EQ_5_13).n == result.n


def test_eq_5_12_and_5_13_agree():
    for k in (5, 6, 7):
        for n in range(2 * k + 1, 400):
            assert inequality_holds(Inequality.EQ_5_12, n, k) == inequality_holds(Inequality.EQ_5_13, n, k)


def test_eq_5_2_crossover_and_range():
    result = ineq_crossover(5, Inequality.EQ_5_2)
    assert (result.status, result.n, result.seeking) == (CrossoverStatus.FOUND, 28, 'holds')
    assert not inequality_holds(Inequality.EQ_5_2, 27, 5)
    assert all(inequality_holds(Inequality.EQ_5_2, n, 5) for n in range(5 * (5 + 5), 600))


def test_eq_5_14_crossover_and_range():
    result = ineq_crossover(5, Inequality.EQ_5_14)
    assert (result.status, result.n) == (CrossoverStatus.FOUND, 106)
    assert not inequality_holds(Inequality.EQ_5_14, 105, 5)
    assert all(inequality_holds(Inequality.EQ_5_14, n, 5) for n in range(5 ** 3, 1500))


def test_crossover_cap_exhausted():
    result = ineq_crossover(7, Inequality.EQ_5_12, cap=20)
    assert result.status is CrossoverStatus.CAP_EXHAUSTED
    assert result.n is None
    assert default_scan_cap(5) == 1000
    with pytest.raises(PreconditionError):
        ineq_crossover(4, Inequality.EQ_5_2)


def test_regime_table():
    df = regime_table(3, 5)
    assert list(df['k']) == [3, 4, 5]
    row = df[df['k'] == 4].iloc[0]
    assert (row['grey_from'], row['grey_to'], row['grey_count']) == (17, 21, 5)
    assert bool(df[df['k'] == 3].iloc[0]['failure_clause_vacuous'])
    assert int(df['violations'].sum()) == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
