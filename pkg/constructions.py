#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Явные конструкции пар семейств и их проверка.

Все конструкции центрированы в элементе 1; интервалы фиксированы, так что
результат детерминирован. Перекрытия звездных частей делятся поровну:
члены перекрытия берутся в колекс-порядке и раздаются поочередно, начиная
с B; когда квота одной стороны исчерпана, остаток уходит другой.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from family_files import pair_to_document
from kset_core import (
    Family, FamilyPair, GroundSet, InvariantViolation, PreconditionError,
    elements_of, find_disjoint_pair, format_set, is_star, mask_of, subset_masks,
)
from regimes import binomial, hilton_milner_bound, pyber_bound

logger = logging.getLogger(__name__)

_ONE = np.uint64(1)


def _star_masks(n: int, k: int) -> np.ndarray:
    return subset_masks(range(2, n + 1), k - 1) | _ONE


def _star_meeting(n: int, k: int, meet: Iterable[int], star: Optional[np.ndarray] = None) -> np.ndarray:
    """Члены звезды S_1, пересекающие множество meet (meet ⊂ [2, n])"""
    if star is None:
        star = _star_masks(n, k)
    return star[(star & np.uint64(mask_of(meet))) != 0]


def _equitable_split(overlap: np.ndarray, quota_a: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Делит отсортированные члены перекрытия: поочередно B, A, B, ...
    пока одна из квот не исчерпана; остаток - другой стороне.
    """
    total = overlap.size
    quota_b = total - quota_a
    if not (0 <= quota_a <= total):
        raise InvariantViolation(f"Квота {quota_a} вне [0, {total}]")
    paired = 2 * min(quota_a, quota_b)
    head = overlap[:paired]
    to_a = [head[1::2]]
    to_b = [head[0::2]]
    rest = overlap[paired:]
    (to_a if quota_a > quota_b else to_b).append(rest)
    return np.concatenate(to_a), np.concatenate(to_b)


def _check_n_above_2k(n: int, k: int):
    GroundSet(n, k).require_above_2k()


# ---------------------------------------------------------------------------
# Конструкции
# ---------------------------------------------------------------------------

def half_star_split(n: int, k: int) -> FamilyPair:
    """Полная звезда S_1, разделенная пополам в колекс-порядке: |A| = ⌊C(n-1,k-1)/2⌋"""
    _check_n_above_2k(n, k)
    ground = GroundSet(n, k)
    star = Family.star(ground, 1).masks
    half = star.size // 2
    return FamilyPair(Family(ground, star[:half]), Family(ground, star[half:]))


def section3_families(n: int, k: int) -> Tuple[Family, Family]:
    """
    F = {F: F ∩ [k] = {1} или [2,k]},  G = {G: 1 ∈ G, G ∩ [2,k] != ∅}
    """
    if k < 3:
        raise PreconditionError(f"Конструкция требует k >= 3, получено k={k}")
    _check_n_above_2k(n, k)
    ground = GroundSet(n, k)
    head = mask_of(range(2, k + 1))
    tail = range(k + 1, n + 1)
    f_masks = np.concatenate([
        subset_masks(tail, k - 1) | _ONE,
        subset_masks(tail, 1) | np.uint64(head),
    ])
    return Family(ground, f_masks), Family(ground, _star_meeting(n, k, range(2, k + 1)))


def section3_pair(n: int, k: int) -> FamilyPair:
    """
    Пара (F ∪ G0, G \\ G0), где G0 - колекс-наименьшие члены G,
    добавляемые, только если |F| <= ⌊C(n-1,k-1)/2⌋.
    """
    f, g = section3_families(n, k)
    target = binomial(n - 1, k - 1) // 2 + 1
    if f.size >= target:
        return FamilyPair(f, g)
    need = target - f.size
    if need > g.size:
        raise PreconditionError(
            f"Для (n={n}, k={k}) требуется перенести {need} членов из G, а |G|={g.size}")
    moved = g.masks[:need]
    logger.debug(f"section3 (n={n}, k={k}): перенесено {need} членов G в F")
    return FamilyPair(f.union(Family(f.ground, moved)), Family(g.ground, g.masks[need:]))


def prop22_pair(n: int, k: int) -> FamilyPair:
    """
    Пара без звезд: P = [2,k+1], Q = {2} ∪ [k+2,2k];
    A = {A ∋ 1: A ∩ Q != ∅} ∪ {P},  B = {B ∋ 1: B ∩ P != ∅} ∪ {Q},
    перекрытие звездных частей делится поровну (пол - стороне A).
    """
    if k < 2:
        raise PreconditionError(f"Конструкция требует k >= 2, получено k={k}")
    if n < 2 * k + 1:
        raise PreconditionError(f"Требуется n >= 2k+1, получено n={n}, k={k}")
    ground = GroundSet(n, k)
    p_set = range(2, k + 2)
    q_set = [2] + list(range(k + 2, 2 * k + 1))
    star = _star_masks(n, k)
    star_a = _star_meeting(n, k, q_set, star)
    star_b = _star_meeting(n, k, p_set, star)
    overlap = np.intersect1d(star_a, star_b, assume_unique=True)
    only_a = np.setdiff1d(star_a, overlap, assume_unique=True)
    only_b = np.setdiff1d(star_b, overlap, assume_unique=True)
    to_a, to_b = _equitable_split(overlap, overlap.size // 2)
    a = Family(ground, np.concatenate([only_a, to_a, [np.uint64(mask_of(p_set))]]))
    b = Family(ground, np.concatenate([only_b, to_b, [np.uint64(mask_of(q_set))]]))
    logger.debug(f"prop22 (n={n}, k={k}): перекрытие {overlap.size}, размеры ({a.size}, {b.size})")
    return FamilyPair(a, b)


def prop55_pair(n: int, k: int) -> FamilyPair:
    """
    A(1̄) = {[2,k+1]},  A(1) = {X ∋ 1: X ∩ [k+2,2k] != ∅};
    B(1̄) = {{j} ∪ [k+2,2k]: 2 <= j <= k+1},  B(1) = {X ∋ 1: X ∩ [2,k+1] != ∅}.
    Перекрытие звездных частей делится так, что min{|A|,|B|} равен
    ⌊(C(n-1,k-1) - C(n-2k,k-1) + k + 1)/2⌋.
    """
    if k < 5:
        raise PreconditionError(f"Конструкция требует k >= 5, получено k={k}")
    if n <= 2 * k + 1:
        raise PreconditionError(f"Требуется n > 2k+1, получено n={n}, k={k}")
    ground = GroundSet(n, k)
    p_mask = mask_of(range(2, k + 2))
    r_mask = mask_of(range(k + 2, 2 * k + 1))
    outside_b = np.array([r_mask | (1 << (j - 1)) for j in range(2, k + 2)], dtype=np.uint64)
    star = _star_masks(n, k)
    star_a = _star_meeting(n, k, range(k + 2, 2 * k + 1), star)
    star_b = _star_meeting(n, k, range(2, k + 2), star)
    del star
    overlap = np.intersect1d(star_a, star_b, assume_unique=True)
    only_a = np.setdiff1d(star_a, overlap, assume_unique=True)
    only_b = np.setdiff1d(star_b, overlap, assume_unique=True)
    total = only_a.size + only_b.size + overlap.size + 1 + k
    target_a = total // 2
    quota_a = target_a - 1 - only_a.size
    if not (0 <= quota_a <= overlap.size):
        raise PreconditionError(
            f"Для (n={n}, k={k}) перекрытия не хватает для равного деления: квота {quota_a}, "
            f"перекрытие {overlap.size}")
    to_a, to_b = _equitable_split(overlap, quota_a)
    a = Family(ground, np.concatenate([only_a, to_a, [np.uint64(p_mask)]]))
    b = Family(ground, np.concatenate([only_b, to_b, outside_b]))
    logger.info(f"prop55 (n={n}, k={k}): размеры ({a.size}, {b.size})")
    return FamilyPair(a, b)


def hilton_milner_family(n: int, k: int) -> Family:
    """{F ∋ 1: F ∩ [2,k+1] != ∅} ∪ {[2,k+1]} - пересекающееся семейство, не звезда"""
    if k < 2:
        raise PreconditionError(f"Семейство требует k >= 2, получено k={k}")
    _check_n_above_2k(n, k)
    ground = GroundSet(n, k)
    members = _star_meeting(n, k, range(2, k + 2))
    return Family(ground, np.append(members, np.uint64(mask_of(range(2, k + 2)))))


def full_star_pair(n: int, k: int) -> FamilyPair:
    """A = B = S_1 (перекрывающаяся пара)"""
    _check_n_above_2k(n, k)
    star = Family.star(GroundSet(n, k), 1)
    return FamilyPair(star, star)


def hilton_milner_pair(n: int, k: int) -> FamilyPair:
    f = hilton_milner_family(n, k)
    return FamilyPair(f, f)


# ---------------------------------------------------------------------------
# Проверка
# ---------------------------------------------------------------------------

class Check(Enum):
    DISJOINT = 'disjoint'
    CROSS = 'cross'
    STAR_FREE = 'star_free'
    PYBER = 'pyber'
    SIZES = 'sizes'
    MORS = 'mors'
    INTERSECTING = 'intersecting'


@dataclass
class CheckResult:
    check: Check
    passed: bool
    applicable: bool = True
    detail: str = ''
    witness: Optional[List[List[int]]] = None

    def to_document(self) -> Dict[str, Any]:
        doc = {'check': self.check.value, 'passed': self.passed, 'applicable': self.applicable,
               'detail': self.detail}
        if self.witness is not None:
            doc['witness'] = self.witness
        return doc


@dataclass
class VerificationReport:
    sizes: Tuple[int, int]
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, check: Check) -> CheckResult:
        for r in self.results:
            if r.check is check:
                return r
        raise KeyError(check.value)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_document(self) -> Dict[str, Any]:
        return {'sizes': list(self.sizes), 'passed': self.passed,
                'results': [r.to_document() for r in self.results]}


def _sets(*masks: int) -> List[List[int]]:
    return [list(elements_of(m)) for m in masks]


def _check_disjoint(p: FamilyPair) -> CheckResult:
    if not p.is_uniform:
        return CheckResult(Check.DISJOINT, True, detail='разные k: семейства не пересекаются')
    common = np.intersect1d(p.a.masks, p.b.masks, assume_unique=True)
    if common.size:
        return CheckResult(Check.DISJOINT, False, detail=f"общих членов: {common.size}",
                           witness=_sets(int(common[0])))
    return CheckResult(Check.DISJOINT, True)


def _check_cross(p: FamilyPair) -> CheckResult:
    witness = find_disjoint_pair(p.a, p.b)
    if witness is not None:
        return CheckResult(Check.CROSS, False,
                           detail=f"{format_set(witness[0])} ∩ {format_set(witness[1])} = ∅",
                           witness=_sets(*witness))
    return CheckResult(Check.CROSS, True)


def _check_star_free(p: FamilyPair) -> CheckResult:
    centers = [(side, is_star(f)) for side, f in (('A', p.a), ('B', p.b))]
    stars = [f"{side}: центр {c}" for side, c in centers if c is not None]
    if stars:
        return CheckResult(Check.STAR_FREE, False, detail='; '.join(stars))
    return CheckResult(Check.STAR_FREE, True)


def _check_pyber(p: FamilyPair, cross: bool) -> CheckResult:
    n, k = p.n, p.a.ground.k
    if not p.is_uniform or n < 2 * k or not cross:
        return CheckResult(Check.PYBER, True, applicable=False,
                           detail='нужна равномерная пересекающаяся пара с n >= 2k')
    product, bound = p.a.size * p.b.size, pyber_bound(n, k)
    return CheckResult(Check.PYBER, product <= bound, detail=f"|A|·|B| = {product}, граница {bound}")


def _check_mors(p: FamilyPair, cross: bool, star_free: bool) -> CheckResult:
    n, k = p.n, p.a.ground.k
    if not p.is_uniform or n <= 2 * k or not cross or not star_free:
        return CheckResult(Check.MORS, True, applicable=False,
                           detail='нужна равномерная пересекающаяся пара без звезд с n > 2k')
    bound = hilton_milner_bound(n, k)
    return CheckResult(Check.MORS, p.min_size <= bound, detail=f"min = {p.min_size}, граница {bound}")


def _check_intersecting(p: FamilyPair) -> CheckResult:
    for side, f in (('A', p.a), ('B', p.b)):
        witness = find_disjoint_pair(f, f)
        if witness is not None:
            return CheckResult(Check.INTERSECTING, False, detail=f"{side} не пересекающееся",
                               witness=_sets(*witness))
    return CheckResult(Check.INTERSECTING, True)


def verify_pair(p: FamilyPair, checks: Iterable, expected: Optional[Tuple[int, int]] = None) -> VerificationReport:
    """
    Запускает выбранные проверки

    Args:
        p: Пара семейств
        checks: Набор Check (или их строковых имен)
        expected: Ожидаемые размеры (|A|, |B|) для проверки sizes

    Returns:
        VerificationReport с результатом и свидетелем по каждой проверке
    """
    wanted = [Check(c) for c in checks]
    report = VerificationReport(sizes=p.sizes)
    cross = _check_cross(p) if {Check.CROSS, Check.PYBER, Check.MORS} & set(wanted) else None
    star_free = _check_star_free(p) if {Check.STAR_FREE, Check.MORS} & set(wanted) else None
    for check in wanted:
        if check is Check.DISJOINT:
            result = _check_disjoint(p)
        elif check is Check.CROSS:
            result = cross
        elif check is Check.STAR_FREE:
            result = star_free
        elif check is Check.PYBER:
            result = _check_pyber(p, cross.passed)
        elif check is Check.MORS:
            result = _check_mors(p, cross.passed, star_free.passed)
        elif check is Check.INTERSECTING:
            result = _check_intersecting(p)
        else:
            if expected is None:
                raise PreconditionError("Проверка sizes требует ожидаемых размеров")
            result = CheckResult(Check.SIZES, tuple(p.sizes) == tuple(expected),
                                 detail=f"получено {p.sizes}, ожидалось {tuple(expected)}")
        report.results.append(result)
    for failure in report.failures():
        logger.debug(f"Проверка {failure.check.value} не пройдена: {failure.detail}")
    return report


# ---------------------------------------------------------------------------
# Реестр конструкций
# ---------------------------------------------------------------------------

def _half_star_sizes(n: int, k: int) -> Tuple[int, int]:
    y = binomial(n - 1, k - 1)
    return y // 2, y - y // 2


def _section3_sizes(n: int, k: int) -> Tuple[int, int]:
    y = binomial(n - 1, k - 1)
    f = binomial(n - k, k - 1) + n - k
    g = y - binomial(n - k, k - 1)
    if f <= y // 2:
        moved = y // 2 + 1 - f
        return f + moved, g - moved
    return f, g


def _union_size(n: int, k: int) -> int:
    return binomial(n - 1, k - 1) - binomial(n - 2 * k, k - 1)


def _prop22_sizes(n: int, k: int) -> Tuple[int, int]:
    u = _union_size(n, k)
    return u // 2 + 1, u - u // 2 + 1


def _prop55_sizes(n: int, k: int) -> Tuple[int, int]:
    total = _union_size(n, k) + k + 1
    return total // 2, total - total // 2


def _hm_sizes(n: int, k: int) -> Tuple[int, int]:
    hm = hilton_milner_bound(n, k)
    return hm, hm


def _full_star_sizes(n: int, k: int) -> Tuple[int, int]:
    y = binomial(n - 1, k - 1)
    return y, y


@dataclass(frozen=True)
class Construction:
    name: str
    build: Callable[[int, int], FamilyPair]
    expected_sizes: Callable[[int, int], Tuple[int, int]]
    checks: Tuple[Check, ...]
    disjoint: bool = True
    star_free: bool = False


_BASE = (Check.CROSS, Check.PYBER, Check.SIZES)

CONSTRUCTIONS: Dict[str, Construction] = {
    c.name: c for c in (
        Construction('half-star', half_star_split, _half_star_sizes, (Check.DISJOINT,) + _BASE),
        Construction('section3', section3_pair, _section3_sizes, (Check.DISJOINT,) + _BASE),
        Construction('prop22', prop22_pair, _prop22_sizes,
                     (Check.DISJOINT, Check.STAR_FREE, Check.MORS) + _BASE, star_free=True),
        Construction('prop55', prop55_pair, _prop55_sizes,
                     (Check.DISJOINT, Check.STAR_FREE, Check.MORS) + _BASE, star_free=True),
        Construction('hilton-milner', hilton_milner_pair, _hm_sizes,
                     (Check.STAR_FREE, Check.MORS, Check.INTERSECTING) + _BASE,
                     disjoint=False, star_free=True),
        Construction('full-star', full_star_pair, _full_star_sizes,
                     (Check.INTERSECTING,) + _BASE, disjoint=False),
    )
}


def build_construction(name: str, n: int, k: int) -> Tuple[FamilyPair, VerificationReport]:
    """
    Строит конструкцию по имени и сразу проверяет ее

    Raises:
        PreconditionError: неизвестное имя или недопустимые (n, k)
        InvariantViolation: результат не прошел собственные проверки
    """
    if name not in CONSTRUCTIONS:
        raise PreconditionError(f"Неизвестная конструкция {name!r}; доступны: {', '.join(CONSTRUCTIONS)}")
    construction = CONSTRUCTIONS[name]
    pair = construction.build(n, k)
    report = verify_pair(pair, construction.checks, construction.expected_sizes(n, k))
    if not report.passed:
        failed = ', '.join(r.check.value for r in report.failures())
        raise InvariantViolation(f"Конструкция {name} (n={n}, k={k}) не прошла проверки: {failed}")
    logger.info(f"Конструкция {name} (n={n}, k={k}): |A|={pair.a.size}, |B|={pair.b.size}")
    return pair, report


def construction_document(name: str, pair: FamilyPair, report: VerificationReport) -> Dict[str, Any]:
    """Документ файла пары с метаданными конструкции"""
    return pair_to_document(pair, {
        'construction': name,
        'min_size': str(pair.min_size),
        'verification': report.to_document(),
    })


__all__ = [
    'half_star_split', 'section3_families', 'section3_pair', 'prop22_pair', 'prop55_pair',
    'hilton_milner_family', 'hilton_milner_pair', 'full_star_pair',
    'Check', 'CheckResult', 'VerificationReport', 'verify_pair',
    'Construction', 'CONSTRUCTIONS', 'build_construction', 'construction_document',
]
