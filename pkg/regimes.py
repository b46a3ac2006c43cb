#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Точная целочисленная арифметика границ и порогов для f(n,k).

Все решения о режимах принимаются сравнением целых чисел (половины
сравниваются удвоением обеих частей). Константа c = log2(e) используется
только для приближенных полей отчетов и для проверки формулировок
теоремы о пороге ~ck^2, где сравнение ведется в Decimal с 50 знаками.
"""

import logging
from dataclasses import asdict, dataclass, field
from decimal import Decimal, localcontext
from enum import Enum
from math import comb
from typing import Any, Dict, List, Optional

import pandas as pd

from kset_core import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

with localcontext() as _ctx:
    _ctx.prec = 50
    LOG2E = Decimal(1) / Decimal(2).ln()
C_APPROX = float(LOG2E)


def binomial(n: int, r: int) -> int:
    """Точный биномиальный коэффициент; 0 при r < 0, r > n или n < 0"""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


class Regime(Enum):
    CONJECTURE_HOLDS = 'ConjectureHolds'
    CONSTRUCTION_BEATS = 'ConstructionBeats'
    GREY_ZONE = 'GreyZone'
    DEGENERATE = 'Degenerate'


# ---------------------------------------------------------------------------
# Неравенства классификации
# ---------------------------------------------------------------------------

def conjecture_condition(n: int, k: int) -> bool:
    """C(n-k-1,k-1) >= C(n-1,k-1)/2 + 1, в целых: 2·C(n-k-1,k-1) >= C(n-1,k-1) + 2"""
    return 2 * binomial(n - k - 1, k - 1) >= binomial(n - 1, k - 1) + 2


def construction_condition(n: int, k: int) -> bool:
    """C(n-k,k-1) < C(n-1,k-1)/2, в целых: 2·C(n-k,k-1) < C(n-1,k-1)"""
    return 2 * binomial(n - k, k - 1) < binomial(n - 1, k - 1)


def strict_grey_condition(n: int, k: int) -> bool:
    """C(n-k-1,k-1) < C(n-1,k-1)/2 < C(n-k,k-1)"""
    half2 = binomial(n - 1, k - 1)
    return 2 * binomial(n - k - 1, k - 1) < half2 < 2 * binomial(n - k, k - 1)


def approx_upper_threshold(k: int) -> float:
    """ck^2 + (2-c)k - только для отчетов"""
    return C_APPROX * k * k + (2 - C_APPROX) * k


def approx_lower_threshold(k: int) -> float:
    """ck^2 - 2ck + 1 - только для отчетов"""
    return C_APPROX * k * k - 2 * C_APPROX * k + 1


def approx_section3_threshold(k: int) -> float:
    """c(k-1)^2 + 1 - только для отчетов"""
    return C_APPROX * (k - 1) ** 2 + 1


def above_upper_threshold(n: int, k: int) -> bool:
    """n >= ck^2 + (2-c)k  <=>  n - 2k >= c(k^2 - k)"""
    return Decimal(n - 2 * k) >= LOG2E * (k * k - k)


def below_lower_threshold(n: int, k: int) -> bool:
    """n <= ck^2 - 2ck + 1  <=>  n - 1 <= c(k^2 - 2k)"""
    return Decimal(n - 1) <= LOG2E * (k * k - 2 * k)


def below_section3_threshold(n: int, k: int) -> bool:
    """n <= c(k-1)^2 + 1"""
    return Decimal(n - 1) <= LOG2E * (k - 1) ** 2


@dataclass(frozen=True)
class RegimeReport:
    """Классификация (n,k) с точными свидетелями"""
    n: int
    k: int
    regime: Regime
    c_n1: int
    c_nk: int
    c_nk1: int
    conjecture_ok: bool
    construction_ok: bool
    strict_grey: bool
    approx_upper: float
    approx_lower: float
    approx_section3: float

    def to_document(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'k': self.k,
            'regime': self.regime.value,
            'witnesses': {
                'C(n-k-1,k-1)': str(self.c_nk1),
                'C(n-k,k-1)': str(self.c_nk),
                'C(n-1,k-1)': str(self.c_n1),
            },
            'inequalities': {'conjecture': self.conjecture_ok, 'construction': self.construction_ok,
                             'strict_grey': self.strict_grey},
            'approx_thresholds': {
                'approx_ck2_plus_(2-c)k': self.approx_upper,
                'approx_ck2_minus_2ck_plus_1': self.approx_lower,
                'approx_c(k-1)2_plus_1': self.approx_section3,
            },
        }


def classify(n: int, k: int) -> RegimeReport:
    """
    Классифицирует (n,k).

    ConjectureHolds - выполнено условие гипотезы; ConstructionBeats - условие
    конструкции; GreyZone - ни то, ни другое. Строгая двойная оценка
    сообщается отдельно полем strict_grey: на границах вида
    2·C(n-k-1,k-1) = C(n-1,k-1)+1 она ложна, хотя ни одно из двух решающих
    неравенств не выполнено;
    Degenerate - n <= 2k.
    """
    if k < 1:
        raise PreconditionError(f"Требуется k >= 1, получено k={k}")
    conjecture_ok = n > 2 * k and conjecture_condition(n, k)
    construction_ok = n > 2 * k and construction_condition(n, k)
    if conjecture_ok and construction_ok:
        raise InvariantViolation(f"Условия гипотезы и конструкции выполнены одновременно при n={n}, k={k}")
    if n <= 2 * k:
        regime = Regime.DEGENERATE
    elif conjecture_ok:
        regime = Regime.CONJECTURE_HOLDS
    elif construction_ok:
        regime = Regime.CONSTRUCTION_BEATS
    else:
        regime = Regime.GREY_ZONE
    return RegimeReport(
        n=n, k=k, regime=regime,
        c_n1=binomial(n - 1, k - 1), c_nk=binomial(n - k, k - 1), c_nk1=binomial(n - k - 1, k - 1),
        conjecture_ok=conjecture_ok, construction_ok=construction_ok, strict_grey=n > 2 * k and strict_grey_condition(n, k),
        approx_upper=approx_upper_threshold(k), approx_lower=approx_lower_threshold(k),
        approx_section3=approx_section3_threshold(k),
    )


# ---------------------------------------------------------------------------
# Проверка теоремы о пороге
# ---------------------------------------------------------------------------

@dataclass
class Theorem14Report:
    """Результат сканирования 2k < n <= n_max при фиксированном k"""
    k: int
    n_max: int
    max_construction_beats_n: Optional[int] = None
    min_conjecture_holds_n: Optional[int] = None
    grey_zone: List[int] = field(default_factory=list)
    boundary_cases: List[int] = field(default_factory=list)
    upper_clause_violations: List[int] = field(default_factory=list)
    lower_clause_violations: List[int] = field(default_factory=list)
    section3_clause_violations: List[int] = field(default_factory=list)
    lower_clause_vacuous: bool = False
    approx_upper: float = 0.0
    approx_lower: float = 0.0
    approx_section3: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.upper_clause_violations or self.lower_clause_violations
                    or self.section3_clause_violations)

    def to_document(self) -> Dict[str, Any]:
        doc = asdict(self)
        doc['ok'] = self.ok
        return doc


def theorem14_check(k: int, n_max: int) -> Theorem14Report:
    """
    Проверяет обе части теоремы о пороге для всех 2k < n <= n_max:
    (i) при n >= ck^2+(2-c)k выполнено условие гипотезы; (ii) при
    n <= ck^2-2ck+1 выполнено условие конструкции. Форма n <= c(k-1)^2+1
    проверяется отдельно.
    """
    if k < 3:
        raise PreconditionError(f"Требуется k >= 3, получено k={k}")
    if n_max <= 2 * k:
        raise PreconditionError(f"Требуется n_max > 2k, получено n_max={n_max}, k={k}")
    report = Theorem14Report(
        k=k, n_max=n_max,
        approx_upper=approx_upper_threshold(k), approx_lower=approx_lower_threshold(k),
        approx_section3=approx_section3_threshold(k),
    )
    report.lower_clause_vacuous = not below_lower_threshold(2 * k + 1, k)
    holds_run_start = None
    for n in range(2 * k + 1, n_max + 1):
        r = classify(n, k)
        if r.regime is Regime.CONSTRUCTION_BEATS:
            report.max_construction_beats_n = n
        elif r.regime is Regime.GREY_ZONE:
            report.grey_zone.append(n)
            if not r.strict_grey:
                report.boundary_cases.append(n)
        if r.regime is Regime.CONJECTURE_HOLDS:
            if holds_run_start is None:
                holds_run_start = n
        else:
            holds_run_start = None
        if above_upper_threshold(n, k) and not r.conjecture_ok:
            report.upper_clause_violations.append(n)
        if below_lower_threshold(n, k) and not r.construction_ok:
            report.lower_clause_violations.append(n)
        if below_section3_threshold(n, k) and not r.construction_ok:
            report.section3_clause_violations.append(n)
    report.min_conjecture_holds_n = holds_run_start
    logger.info(f"k={k}: построение выигрывает до n={report.max_construction_beats_n}, "
                f"гипотеза верна с n={report.min_conjecture_holds_n}, "
                f"серая зона {len(report.grey_zone)} значений")
    if not report.ok:
        logger.warning(f"k={k}: найдены нарушения формулировок порога")
    return report


def thm43_threshold(n: int, k: int, u: int) -> int:
    """C(n-1,k-1) - C(n-u-1,k-1) + C(n-u-1,n-k-1), точное значение"""
    if n <= 2 * k or k <= 3:
        raise PreconditionError(f"Требуется n > 2k и k > 3, получено n={n}, k={k}")
    if not (3 <= u <= k):
        raise PreconditionError(f"Требуется 3 <= u <= k, получено u={u}, k={k}")
    return binomial(n - 1, k - 1) - binomial(n - u - 1, k - 1) + binomial(n - u - 1, n - k - 1)


# ---------------------------------------------------------------------------
# Неравенства раздела о f*(n,k)
# ---------------------------------------------------------------------------

class Inequality(Enum):
    EQ_5_2 = 'eq_5_2'
    EQ_5_3 = 'eq_5_3'
    EQ_5_7 = 'eq_5_7'
    EQ_5_12 = 'eq_5_12'
    EQ_5_13 = 'eq_5_13'
    EQ_5_14 = 'eq_5_14'


def _eq_5_2(n: int, k: int) -> bool:
    # (C(n-1,k-1) - C(n-2k,k-1))/2 >= порог при u = 3
    return binomial(n - 1, k - 1) - binomial(n - 2 * k, k - 1) >= 2 * thm43_threshold(n, k, 3)


def _eq_5_3(n: int, k: int) -> bool:
    total = sum(binomial(n - i, k - 2) for i in range(2, 11))
    return total > 6 * binomial(n - 2, k - 2)


def _eq_5_7(n: int, k: int) -> bool:
    return 2 * binomial(n - 4, k - 4) > binomial(n - 2 * k, k - 2)


def _eq_5_12(n: int, k: int) -> bool:
    lhs = binomial(n - 1, k - 1) - binomial(n - k, k - 1) + binomial(n - k - 2, k - 3)
    rhs2 = binomial(n - 1, k - 1) - binomial(n - 2 * k, k - 1) - 1
    return 2 * lhs < rhs2


def _eq_5_13(n: int, k: int) -> bool:
    left = sum(binomial(n - j, k - 2) for j in range(2, k + 1))
    right = sum(binomial(n - j, k - 2) for j in range(k + 1, 2 * k + 1))
    return left < right - (2 * binomial(n - k - 2, k - 3) + 1)


def _eq_5_14(n: int, k: int) -> bool:
    return all((k + 2) * binomial(n - k - j, k - 2) > (k + 1) * binomial(n - j, k - 2)
               for j in range(2, k + 1))


_PREDICATES = {
    Inequality.EQ_5_2: _eq_5_2,
    Inequality.EQ_5_3: _eq_5_3,
    Inequality.EQ_5_7: _eq_5_7,
    Inequality.EQ_5_12: _eq_5_12,
    Inequality.EQ_5_13: _eq_5_13,
    Inequality.EQ_5_14: _eq_5_14,
}


def inequality_holds(which: Inequality, n: int, k: int) -> bool:
    """Точная проверка выбранного неравенства при данных (n,k)"""
    if k < 5:
        raise PreconditionError(f"Неравенства раздела о f* требуют k >= 5, получено k={k}")
    return _PREDICATES[Inequality(which)](n, k)


class CrossoverStatus(Enum):
    FOUND = 'found'
    CAP_EXHAUSTED = 'cap_exhausted'


@dataclass(frozen=True)
class CrossoverResult:
    k: int
    which: Inequality
    status: CrossoverStatus
    n: Optional[int]
    cap: int
    seeking: str

    def to_document(self) -> Dict[str, Any]:
        return {'k': self.k, 'which': self.which.value, 'status': self.status.value,
                'n': self.n, 'cap': self.cap, 'seeking': self.seeking}


def default_scan_cap(k: int) -> int:
    return max(4 * k ** 3, 1000)


def ineq_crossover(k: int, which: Inequality, cap: Optional[int] = None) -> CrossoverResult:
    """
    Наименьшее n > 2k, при котором неравенство выполнено
    (для eq_5_7 - при котором оно нарушено).

    Args:
        k: k >= 5
        which: Неравенство
        cap: Верхняя граница сканирования (по умолчанию max(4k^3, 1000))
    """
    which = Inequality(which)
    if k < 5:
        raise PreconditionError(f"Неравенства раздела о f* требуют k >= 5, получено k={k}")
    cap = default_scan_cap(k) if cap is None else cap
    seek_failure = which is Inequality.EQ_5_7
    predicate = _PREDICATES[which]
    for n in range(2 * k + 1, cap + 1):
        if predicate(n, k) != seek_failure:
            logger.debug(f"{which.value} при k={k}: переход при n={n}")
            return CrossoverResult(k, which, CrossoverStatus.FOUND, n, cap,
                                   'fails' if seek_failure else 'holds')
    logger.warning(f"{which.value} при k={k}: переход не найден до n={cap}")
    return CrossoverResult(k, which, CrossoverStatus.CAP_EXHAUSTED, None, cap,
                           'fails' if seek_failure else 'holds')


# ---------------------------------------------------------------------------
# Границы
# ---------------------------------------------------------------------------

def ekr_bound(n: int, k: int) -> int:
    return binomial(n - 1, k - 1)


def hilton_milner_bound(n: int, k: int) -> int:
    """C(n-1,k-1) - C(n-k-1,k-1) + 1 (также граница Мёрса для min{|A|,|B|})"""
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


def pyber_bound(n: int, k: int) -> int:
    """|A|·|B| <= C(n-1,k-1)^2"""
    return binomial(n - 1, k - 1) ** 2


def theorem54_value(n: int, k: int) -> int:
    """Значение f*(n,k) в записи через C(n-1, n-k)"""
    return (binomial(n - 1, n - k) - binomial(n - 2 * k, k - 1)) // 2 + 1


@dataclass(frozen=True)
class BoundSet:
    n: int
    k: int
    ekr: int
    hm: int
    conjecture_value: int
    prop41_upper: int
    fstar_value: int
    prop55_value: int

    def to_document(self) -> Dict[str, Any]:
        return {name: (value if name in ('n', 'k') else str(value)) for name, value in asdict(self).items()}


def bounds(n: int, k: int) -> BoundSet:
    """Все границы для (n,k), n > 2k"""
    if n <= 2 * k:
        raise PreconditionError(f"Требуется n > 2k, получено n={n}, k={k}")
    c_n1 = binomial(n - 1, k - 1)
    c_n2k = binomial(n - 2 * k, k - 1)
    return BoundSet(
        n=n, k=k,
        ekr=ekr_bound(n, k),
        hm=hilton_milner_bound(n, k),
        conjecture_value=c_n1 // 2,
        prop41_upper=(c_n1 + n - k - 1) // 2,
        fstar_value=(c_n1 - c_n2k) // 2 + 1,
        prop55_value=(c_n1 - c_n2k + k + 1) // 2,
    )


# ---------------------------------------------------------------------------
# Таблица режимов
# ---------------------------------------------------------------------------

def regime_table(k_min: int, k_max: int, n_max: Optional[int] = None) -> pd.DataFrame:
    """
    Таблица точных границ режимов по k

    Args:
        k_min, k_max: Диапазон k (k >= 3)
        n_max: Верхняя граница сканирования (по умолчанию 4k^3 для каждого k)

    Returns:
        DataFrame, одна строка на k
    """
    rows = []
    for k in range(k_min, k_max + 1):
        report = theorem14_check(k, n_max if n_max is not None else 4 * k ** 3)
        grey = report.grey_zone
        rows.append({
            'k': k,
            'max_beats_n': report.max_construction_beats_n,
            'grey_from': min(grey) if grey else None,
            'grey_to': max(grey) if grey else None,
            'grey_count': len(grey),
            'boundary_cases': len(report.boundary_cases),
            'min_holds_n': report.min_conjecture_holds_n,
            'approx_ck2-2ck+1': round(report.approx_lower, 3),
            'approx_c(k-1)2+1': round(report.approx_section3, 3),
            'approx_ck2+(2-c)k': round(report.approx_upper, 3),
            'failure_clause_vacuous': report.lower_clause_vacuous,
            'violations': len(report.upper_clause_violations) + len(report.lower_clause_violations)
                          + len(report.section3_clause_violations),
        })
    return pd.DataFrame(rows)
