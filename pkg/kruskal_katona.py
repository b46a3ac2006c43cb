#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Лексикографические начальные отрезки, тени и формулировка теоремы
Краскала–Катоны через пересекающиеся пары (эквивалентность Хилтона)
"""

import logging
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import List, Tuple

import numpy as np

from kset_core import (
    Family, FamilyPair, GroundSet, PreconditionError,
    all_masks, complement_family, cross_intersecting, mask_of,
)

logger = logging.getLogger(__name__)


def _member_positions(f: Family) -> np.ndarray:
    """Матрица позиций (0-индексация) элементов членов семейства, размер |F| x k"""
    n, k = f.ground.n, f.ground.k
    bits = (f.masks[:, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)
    rows, cols = np.nonzero(bits)
    return cols.reshape(f.size, k).astype(np.uint64)


def shadow(f: Family, l: int) -> Family:
    """
    l-тень: все l-множества, содержащиеся в каком-либо члене F

    Args:
        f: k-равномерное семейство
        l: Уровень тени, 1 <= l < k
    """
    k = f.ground.k
    if not (1 <= l < k):
        raise PreconditionError(f"Уровень тени должен удовлетворять 1 <= l < k, получено l={l}, k={k}")
    ground = GroundSet(f.ground.n, l)
    if f.size == 0:
        return Family.empty(ground)
    positions = _member_positions(f)
    parts = []
    for cols in combinations(range(k), l):
        sub = np.left_shift(np.uint64(1), positions[:, list(cols)])
        parts.append(np.bitwise_or.reduce(sub, axis=1))
    return Family(ground, np.concatenate(parts))


# ---------------------------------------------------------------------------
# Лексикографический порядок
# ---------------------------------------------------------------------------

def lex_unrank(n: int, t: int, r: int) -> Tuple[int, ...]:
    """r-е (с нуля) t-подмножество [n] в лексикографическом порядке"""
    if not (0 <= r < comb(n, t)):
        raise PreconditionError(f"Индекс {r} вне [0, C({n},{t}))")
    result = []
    x = 1
    for i in range(1, t + 1):
        while r >= comb(n - x, t - i):
            r -= comb(n - x, t - i)
            x += 1
        result.append(x)
        x += 1
    return tuple(result)


def lex_rank(n: int, elements: Tuple[int, ...]) -> int:
    """Позиция множества в лексикографическом порядке t-подмножеств [n]"""
    t = len(elements)
    rank, prev = 0, 0
    for i, c in enumerate(elements, start=1):
        for x in range(prev + 1, c):
            rank += comb(n - x, t - i)
        prev = c
    return rank


@dataclass(frozen=True)
class LexSegment:
    """Начальный отрезок L(n, t, m): первые m t-подмножеств [n] в порядке <_L"""
    n: int
    t: int
    m: int

    def __post_init__(self):
        if not (1 <= self.t <= self.n):
            raise PreconditionError(f"Требуется 1 <= t <= n, получено n={self.n}, t={self.t}")
        if not (0 <= self.m <= comb(self.n, self.t)):
            raise PreconditionError(f"m={self.m} вне [0, C({self.n},{self.t})]")

    def sets(self) -> List[Tuple[int, ...]]:
        # combinations перечисляет t-множества ровно в порядке <_L
        return list(islice(combinations(range(1, self.n + 1), self.t), self.m))

    def materialize(self) -> Family:
        return Family(GroundSet(self.n, self.t), [mask_of(s) for s in self.sets()])

    def last(self) -> Tuple[int, ...]:
        if self.m == 0:
            raise PreconditionError("Пустой отрезок не имеет последнего элемента")
        return lex_unrank(self.n, self.t, self.m - 1)

    def next_set(self) -> Tuple[int, ...]:
        """Первое множество после отрезка"""
        if self.m == comb(self.n, self.t):
            raise PreconditionError("Отрезок совпадает со всем слоем")
        return lex_unrank(self.n, self.t, self.m)


def lex_segment(n: int, t: int, m: int) -> Family:
    return LexSegment(n, t, m).materialize()


# ---------------------------------------------------------------------------
# Эквивалентность Хилтона и сжатие Краскала–Катоны
# ---------------------------------------------------------------------------

def _uniformities(p: FamilyPair) -> Tuple[int, int, int]:
    return p.n, p.a.ground.k, p.b.ground.k


def hilton_equivalent_check(p: FamilyPair) -> bool:
    """
    Истинность A ∩ sigma^(a)(B^c) = ∅.

    При n = a + b тень уровня a от (n-b)-множеств совпадает с самим B^c,
    и условие снова равносильно попарному пересечению.
    """
    n, a, b = _uniformities(p)
    if a + b > n:
        raise PreconditionError(f"Требуется a + b <= n, получено a={a}, b={b}, n={n}")
    complements = complement_family(p.b)
    layer = complements if n - b == a else shadow(complements, a)
    return np.intersect1d(p.a.masks, layer.masks, assume_unique=True).size == 0


def kk_compress_check(p: FamilyPair) -> bool:
    """
    Для пересекающейся пары проверяет, что L(n,a,|A|) и L(n,b,|B|)
    тоже пересекаются. False означает ошибку в реализации.
    """
    n, a, b = _uniformities(p)
    if n <= a + b:
        raise PreconditionError(f"Требуется n > a + b, получено a={a}, b={b}, n={n}")
    if not cross_intersecting(p):
        raise PreconditionError("Входная пара не является пересекающейся")
    segments = FamilyPair(lex_segment(n, a, p.a.size), lex_segment(n, b, p.b.size))
    return cross_intersecting(segments)


def cross_partners(n: int, a: int, b: int, m: int) -> Family:
    """Все b-множества [n], пересекающие каждый член L(n, a, m)"""
    if n <= a + b:
        raise PreconditionError(f"Требуется n > a + b, получено a={a}, b={b}, n={n}")
    if not (1 <= m <= comb(n, a)):
        raise PreconditionError(f"m={m} вне [1, C({n},{a})]")
    pool = all_masks(n, b)
    keep = np.ones(pool.size, dtype=bool)
    for s in islice(combinations(range(1, n + 1), a), m):
        keep &= (pool & np.uint64(mask_of(s))) != 0
        if not keep.any():
            break
    return Family(GroundSet(n, b), pool[keep])


def max_cross_partner(n: int, a: int, b: int, m: int) -> int:
    """Максимальный размер b-равномерного семейства, пересекающегося с L(n, a, m)"""
    return cross_partners(n, a, b, m).size


@dataclass(frozen=True)
class Corollary21Result:
    n: int
    k: int
    m: int
    partners: Tuple[Tuple[int, ...], ...]
    expected: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.partners)

    @property
    def matches(self) -> bool:
        return self.count == self.k - 1 and self.partners == self.expected


def corollary21_check(n: int, k: int) -> Corollary21Result:
    """
    Следствие для [n-1]: если (k-1)-равномерное G длиннее начального отрезка
    {G: G ∩ [k-1] != ∅}, то пересекающееся с ним k-равномерное H имеет
    не более k-1 членов; экстремальные партнеры - [k-1] ∪ {j}, k <= j <= 2k-2.
    """
    if k < 2 or n <= 2 * k:
        raise PreconditionError(f"Требуется n > 2k и k >= 2, получено n={n}, k={k}")
    m = comb(n - 1, k - 1) - comb(n - k, k - 1) + 1
    partners = cross_partners(n - 1, k - 1, k, m)
    expected = tuple(tuple(range(1, k)) + (j,) for j in range(k, 2 * k - 1))
    found = tuple(sorted(partners.sets()))
    logger.debug(f"Следствие при (n={n}, k={k}): m={m}, партнеров {len(found)}")
    return Corollary21Result(n=n, k=k, m=m, partners=found, expected=tuple(sorted(expected)))


def lex_shadow_size(n: int, k: int, m: int, l: int) -> int:
    """|sigma^(l)(L(n, k, m))|"""
    return shadow(lex_segment(n, k, m), l).size


def colex_shadow_size(n: int, k: int, m: int, l: int) -> int:
    """
    Размер l-тени первых m k-множеств в колекс-порядке - минимум среди всех
    m-семейств (теорема Краскала–Катоны). Лексикографические отрезки этим
    свойством не обладают: L(4,2,3) = {12,13,14} имеет 1-тень из 4 элементов.
    """
    if not (0 <= m <= comb(n, k)):
        raise PreconditionError(f"m={m} вне [0, C({n},{k})]")
    return shadow(Family.from_ranks(GroundSet(n, k), range(m)), l).size


def _braces(elements) -> str:
    return "{" + ",".join(str(x) for x in elements) + "}"


def describe_segment(seg: LexSegment) -> str:
    lines = [f"L({seg.n},{seg.t},{seg.m})"]
    if seg.m:
        lines.append(f"  последний: {_braces(seg.last())}")
    if seg.m < comb(seg.n, seg.t):
        lines.append(f"  следующий: {_braces(seg.next_set())}")
    return '\n'.join(lines)


__all__ = [
    'LexSegment', 'Corollary21Result', 'shadow', 'lex_segment', 'lex_unrank', 'lex_rank',
    'hilton_equivalent_check', 'kk_compress_check', 'cross_partners', 'max_cross_partner',
    'corollary21_check', 'lex_shadow_size', 'colex_shadow_size', 'describe_segment',
]
