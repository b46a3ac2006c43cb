#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты явных конструкций и проверки пар
"""

import os
import sys
from dataclasses import replace
from math import comb

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from constructions import (
    CONSTRUCTIONS, Check, build_construction, full_star_pair, half_star_split, hilton_milner_family,
    prop22_pair, prop55_pair, section3_families, section3_pair, verify_pair,
)
from kruskal_katona import kk_compress_check
from kset_core import (
    Family, FamilyPair, GroundSet, InvariantViolation, PreconditionError, diversity, is_intersecting, is_star,
)
from regimes import Regime, bounds, classify


def _small_parameters(k_min: int, n_max: int = 30, star_limit: int = 200000):
    """Допустимые (n, k) с n <= n_max и звездой не больше star_limit"""
    for k in range(k_min, n_max // 2 + 1):
        for n in range(2 * k + 1, n_max + 1):
            if comb(n - 1, k - 1) <= star_limit:
                yield n, k


@pytest.mark.parametrize('n,k,sizes', [(7, 3, (7, 8)), (9, 4, (28, 28))])
def test_half_star_split(n, k, sizes):
    p = half_star_split(n, k)
    assert p.sizes == sizes
    report = verify_pair(p, [Check.DISJOINT, Check.CROSS, Check.STAR_FREE])
    assert report.result(Check.DISJOINT).passed
    assert report.result(Check.CROSS).passed
    assert not report.result(Check.STAR_FREE).passed
    with pytest.raises(PreconditionError):
        half_star_split(6, 3)


def test_section3_pair_beats_conjecture_at_7_3():
    f, g = section3_families(7, 3)
    assert (f.size, g.size) == (10, 9)
    p = section3_pair(7, 3)
    assert p.sizes == (10, 9)
    assert p.min_size == 9 > bounds(7, 3).conjecture_value
    assert kk_compress_check(p)


def test_section3_sizes_and_intersecting_g():
    for n, k in _small_parameters(3, star_limit=50000):
        f, g = section3_families(n, k)
        assert f.size + g.size == comb(n - 1, k - 1) + n - k
        assert is_intersecting(g)
        p = section3_pair(n, k)
        assert verify_pair(p, [Check.DISJOINT, Check.CROSS]).passed
        if classify(n, k).regime is Regime.CONSTRUCTION_BEATS:
            assert p.min_size > bounds(n, k).conjecture_value


def test_section3_sum_at_12_4():
    f, g = section3_families(12, 4)
    assert f.size + g.size == comb(11, 3) + 8 == 173


def test_prop22_pair_at_11_4():
    p = prop22_pair(11, 4)
    assert p.sizes == (60, 61)
    checks = [Check.DISJOINT, Check.CROSS, Check.STAR_FREE, Check.PYBER, Check.MORS, Check.SIZES]
    report = verify_pair(p, checks, expected=(60, 61))
    assert report.passed, report.failures()


def test_prop22_union_size_at_25_5():
    p = prop22_pair(25, 5)
    assert p.a.union(p.b).size == comb(24, 4) - comb(15, 4) + 2


def test_prop22_matches_fstar_value_and_is_star_free():
    for n, k in _small_parameters(2, n_max=22, star_limit=20000):
        p = prop22_pair(n, k)
        assert p.min_size == bounds(n, k).fstar_value
        assert is_star(p.a) is None and is_star(p.b) is None
        assert verify_pair(p, [Check.DISJOINT, Check.CROSS, Check.STAR_FREE, Check.MORS]).passed


def test_prop22_rejects_small_n():
    with pytest.raises(PreconditionError):
        prop22_pair(8, 4)


def test_prop55_pair_at_55_5():
    p = prop55_pair(55, 5)
    assert p.min_size == (comb(54, 4) - comb(45, 4) + 6) // 2 == 83631
    assert verify_pair(p, [Check.DISJOINT, Check.CROSS, Check.STAR_FREE]).passed
    outside_b = Family(p.b.ground, p.b.masks[(p.b.masks & np.uint64(1)) == 0])
    assert outside_b.size == 5


def test_prop55_pair_at_60_6():
    p = prop55_pair(60, 6)
    assert p.min_size == bounds(60, 6).prop55_value
    assert verify_pair(p, [Check.DISJOINT, Check.CROSS, Check.STAR_FREE]).passed


def test_prop55_preconditions():
    with pytest.raises(PreconditionError):
        prop55_pair(30, 4)
    with pytest.raises(PreconditionError):
        prop55_pair(11, 5)


def test_hilton_milner_family():
    f = hilton_milner_family(7, 3)
    assert f.size == bounds(7, 3).hm
    assert is_intersecting(f)
    assert is_star(f) is None
    assert diversity(f) == 1


def test_full_star_pair_overlaps():
    p = full_star_pair(7, 3)
    report = verify_pair(p, [Check.DISJOINT, Check.CROSS, Check.PYBER])
    assert not report.result(Check.DISJOINT).passed
    assert report.result(Check.CROSS).passed
    assert report.result(Check.PYBER).passed
    assert p.a.size * p.b.size == comb(6, 2) ** 2


def test_verify_pair_reports_witness():
    g = GroundSet(6, 3)
    p = FamilyPair(Family.from_sets(g, [[1, 2, 3]]), Family.from_sets(g, [[4, 5, 6]]))
    report = verify_pair(p, ['cross', 'pyber'])
    cross = report.result(Check.CROSS)
    assert not cross.passed
    assert cross.witness == [[1, 2, 3], [4, 5, 6]]
    assert not report.result(Check.PYBER).applicable
    assert not report.passed
    with pytest.raises(PreconditionError):
        verify_pair(p, [Check.SIZES])


def test_registry_builds_and_verifies():
    for name in CONSTRUCTIONS:
        n, k = (13, 5) if name == 'prop55' else (9, 3)
        pair, report = build_construction(name, n, k)
        assert report.passed
        assert pair.sizes == CONSTRUCTIONS[name].expected_sizes(n, k)
    with pytest.raises(PreconditionError):
        build_construction('unknown', 9, 3)


def test_build_construction_flags_invariant_failures(monkeypatch):
    def broken(n, k):
        g = GroundSet(n, k)
        return FamilyPair(Family.from_sets(g, [[1, 2, 3]]), Family.from_sets(g, [[4, 5, 6]]))

    monkeypatch.setitem(CONSTRUCTIONS, 'half-star', replace(CONSTRUCTIONS['half-star'], build=broken))
    with pytest.raises(InvariantViolation):
        build_construction('half-star', 7, 3)


def test_pyber_holds_for_every_construction():
    for n, k in [(9, 3), (11, 4), (13, 5), (14, 5)]:
        for name in CONSTRUCTIONS:
            try:
                pair, _ = build_construction(name, n, k)
            except PreconditionError:
                continue
            assert verify_pair(pair, [Check.PYBER]).passed


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
