#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты лексикографических отрезков, теней и эквивалентности Хилтона
"""

import os
import sys
from math import comb

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kruskal_katona import (
    LexSegment, colex_shadow_size, corollary21_check, cross_partners, describe_segment, hilton_equivalent_check,
    kk_compress_check, lex_rank, lex_segment, lex_shadow_size, lex_unrank, max_cross_partner, shadow,
)
from kset_core import (
    Family, FamilyPair, GroundSet, PreconditionError, cross_intersecting, random_cross_pair, random_family,
)


def test_lex_segment_boundary():
    seg = LexSegment(7, 3, 15)
    assert seg.last() == (1, 6, 7)
    assert seg.next_set() == (2, 3, 4)
    assert all(1 in s for s in seg.sets())
    assert '{1,6,7}' in describe_segment(seg)


def test_lex_rank_and_unrank_agree():
    for r in range(comb(8, 3)):
        assert lex_rank(8, lex_unrank(8, 3, r)) == r
    with pytest.raises(PreconditionError):
        lex_unrank(8, 3, comb(8, 3))


def test_lex_segment_bounds():
    with pytest.raises(PreconditionError):
        LexSegment(5, 2, 11)
    assert lex_segment(5, 2, 0).size == 0
    with pytest.raises(PreconditionError):
        LexSegment(5, 2, 10).next_set()


def test_shadow_basic():
    full = Family.full(GroundSet(5, 3))
    assert shadow(full, 2) == Family.full(GroundSet(5, 2))
    single = Family.from_sets(GroundSet(6, 3), [[1, 2, 3]])
    assert shadow(single, 1).sets() == [(1,), (2,), (3,)]
    with pytest.raises(PreconditionError):
        shadow(single, 3)


def test_shadow_small_examples():
    f = Family.from_sets(GroundSet(5, 3), [[1, 2, 3], [2, 3, 4]])
    assert shadow(f, 2).sets() == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def test_colex_segment_minimises_shadow():
    rng = np.random.default_rng(11)
    for _ in range(200):
        n = int(rng.integers(4, 9))
        k = int(rng.integers(2, n))
        l = int(rng.integers(1, k))
        g = GroundSet(n, k)
        m = int(rng.integers(1, g.size + 1))
        assert colex_shadow_size(n, k, m, l) <= shadow(random_family(g, rng, m), l).size


def test_lex_segment_is_not_a_shadow_minimiser():
    triangle = Family.from_sets(GroundSet(4, 2), [[1, 2], [1, 3], [2, 3]])
    assert lex_shadow_size(4, 2, 3, 1) == 4
    assert shadow(triangle, 1).size == 3 == colex_shadow_size(4, 2, 3, 1)


def test_lex_segment_matches_sorted_enumeration():
    for n in range(2, 13):
        for t in (1, 2, 3):
            if t > n:
                continue
            ordered = sorted(Family.full(GroundSet(n, t)).sets())
            for m in (0, 1, comb(n, t) // 2, comb(n, t)):
                assert lex_segment(n, t, m).sets() == sorted(ordered[:m], key=lambda s: s[::-1])


def test_max_cross_partner_monotone_and_single_set():
    assert max_cross_partner(9, 3, 3, 1) == comb(9, 3) - comb(6, 3)
    values = [max_cross_partner(9, 3, 3, m) for m in range(1, 30)]
    assert all(x >= y for x, y in zip(values, values[1:]))


def test_hilton_equivalence_property():
    rng = np.random.default_rng(2024)
    for i in range(1000):
        n = int(rng.integers(3, 11))
        a = int(rng.integers(1, n))
        b = int(rng.integers(1, n - a + 1))
        if i % 2:
            p = random_cross_pair(n, a, b, rng)
        else:
            ga, gb = GroundSet(n, a), GroundSet(n, b)
            p = FamilyPair(random_family(ga, rng, int(rng.integers(0, min(ga.size, 6) + 1))),
                           random_family(gb, rng, int(rng.integers(0, min(gb.size, 6) + 1))))
        assert hilton_equivalent_check(p) == cross_intersecting(p)


def test_hilton_requires_a_plus_b_at_most_n():
    p = FamilyPair(Family.empty(GroundSet(5, 3)), Family.empty(GroundSet(5, 3)))
    with pytest.raises(PreconditionError):
        hilton_equivalent_check(p)


def test_kk_compression_property():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(3, 10))
        a = int(rng.integers(1, n - 1))
        b = int(rng.integers(1, n - a))
        assert kk_compress_check(random_cross_pair(n, a, b, rng))


def test_kk_compression_rejects_non_cross_pairs():
    g = GroundSet(7, 2)
    p = FamilyPair(Family.from_sets(g, [[1, 2]]), Family.from_sets(g, [[3, 4]]))
    with pytest.raises(PreconditionError):
        kk_compress_check(p)


@pytest.mark.parametrize('n,k', [(8, 3), (9, 3), (10, 4)])
def test_corollary21(n, k):
    result = corollary21_check(n, k)
    assert result.count == k - 1
    assert result.matches
    assert result.partners == tuple(tuple(range(1, k)) + (j,) for j in range(k, 2 * k - 1))


def test_corollary21_precondition():
    with pytest.raises(PreconditionError):
        corollary21_check(6, 3)


def test_cross_partners_of_full_star_part():
    # все 3-множества [8], пересекающие каждое 2-множество с элементом 1, содержат 1
    m = 7
    partners = cross_partners(8, 2, 3, m)
    assert partners.size == comb(7, 2)
    assert all(1 in s for s in partners.sets())
    assert max_cross_partner(8, 2, 3, m) == partners.size


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
