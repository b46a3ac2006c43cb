#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Точное вычисление f(n,k) и f*(n,k) на малых примерах.

Пара (A, B) пересекается попарно тогда и только тогда, когда в графе
Кнезера K(n,k) нет ребра между A и B. Поиск устроен как серия задач
разрешимости "есть ли разметка с |A| >= t и |B| >= t" для убывающих t;
каждая задача решается ветвями и границами над битовыми множествами
вершин (целые Python, бит v - вершина с колекс-рангом v).

Независимый оракул exhaustive_labelings перебирает все подмножества A и
достраивает B до максимального допустимого.
Буквальный перебор всех 3^V (4^V с перекрытием) разметок ограничен
FULL_LABELING_CAP = 2·10^6 состояний, то есть на практике графом K(5,2);
уже для (6,2) нужно 3^15 состояний, и там используется сокращенный перебор.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from constructions import CONSTRUCTIONS, Check, build_construction, verify_pair
from env_settings import load_float_setting, load_int_setting
from family_files import big, pair_to_document
from kset_core import (
    CapacityError, Family, FamilyPair, GroundSet, InvariantViolation, PreconditionError,
    all_masks, colex_ranks, elements_of, is_star, popcount64,
)
from regimes import Regime, binomial, bounds, classify, ekr_bound, hilton_milner_bound

logger = logging.getLogger(__name__)

MAX_VERTICES = 256
EXHAUSTIVE_STATE_CAP = 10 ** 8
FULL_LABELING_CAP = 2 * 10 ** 6
FRONTIER_PER_WORKER = 8
FRONTIER_MAX_DEPTH = 12


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _row_bits(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder='little').tobytes(), 'little')


class KneserGraph:
    """
    Граф Кнезера K(n,k): вершины - k-подмножества [n] в колекс-порядке,
    ребра - между непересекающимися множествами.
    """

    def __init__(self, ground: GroundSet):
        if ground.n < 2 * ground.k:
            raise PreconditionError(f"Граф Кнезера требует n >= 2k, получено n={ground.n}, k={ground.k}")
        if ground.size > MAX_VERTICES:
            raise CapacityError(f"C({ground.n},{ground.k}) = {ground.size} вершин превышает предел {MAX_VERTICES}")
        self.ground = ground
        masks = all_masks(ground.n, ground.k)
        self.member_masks: List[int] = [int(m) for m in masks]
        disjoint = (masks[:, None] & masks[None, :]) == 0
        self.adjacency: List[int] = [_row_bits(row) for row in disjoint]
        # avoiding[i] - вершины, не содержащие элемент i+1
        self.avoiding: List[int] = [_row_bits((masks & np.uint64(1 << i)) == 0) for i in range(ground.n)]

    @property
    def size(self) -> int:
        return len(self.member_masks)

    @property
    def all_vertices(self) -> int:
        return (1 << self.size) - 1

    def degree(self, v: int) -> int:
        return _popcount(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.size)]

    def neighbours_of(self, vertices: int) -> int:
        result = 0
        for v in _bits(vertices):
            result |= self.adjacency[v]
        return result

    def is_star_set(self, vertices: int) -> bool:
        """Все вершины содержат общий элемент (пустое множество - звезда)"""
        return vertices == 0 or any(vertices & avoid == 0 for avoid in self.avoiding)

    def family(self, vertices: int) -> Family:
        return Family(self.ground, [self.member_masks[v] for v in _bits(vertices)])

    def vertices_of(self, f: Family) -> int:
        result = 0
        for r in colex_ranks(f.masks, self.ground.n):
            result |= 1 << int(r)
        return result

    def as_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from((v, {'members': elements_of(m)}) for v, m in enumerate(self.member_masks))
        graph.add_edges_from((v, w) for v in range(self.size) for w in _bits(self.adjacency[v] >> v << v))
        return graph

    def __repr__(self) -> str:
        return f"KneserGraph(n={self.ground.n}, k={self.ground.k}, vertices={self.size})"


# ---------------------------------------------------------------------------
# Режимы, бюджет, результаты
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchMode:
    star_free: bool = False
    allow_overlap: bool = False

    @property
    def checks(self) -> Tuple[Check, ...]:
        checks = [Check.CROSS]
        if not self.allow_overlap:
            checks.append(Check.DISJOINT)
        if self.star_free:
            checks.append(Check.STAR_FREE)
        return tuple(checks)

    def __str__(self) -> str:
        parts = ['overlap' if self.allow_overlap else 'disjoint']
        if self.star_free:
            parts.append('star-free')
        return '+'.join(parts)


@dataclass(frozen=True)
class Budget:
    timeout: Optional[float] = None
    node_limit: Optional[int] = None

    @classmethod
    def from_settings(cls) -> 'Budget':
        return cls(timeout=load_float_setting('EXTREMAL_SEARCH_TIMEOUT'),
                   node_limit=load_int_setting('EXTREMAL_NODE_LIMIT'))


class BudgetExhausted(Exception):
    pass


class _BudgetTracker:
    """Общий счетчик узлов и времени для всех потоков"""

    def __init__(self, budget: Budget):
        self.budget = budget
        self.started = time.monotonic()
        self.nodes = 0
        self.exhausted = threading.Event()
        self._lock = threading.Lock()

    def tick(self):
        if self.exhausted.is_set():
            raise BudgetExhausted()
        with self._lock:
            self.nodes += 1
            nodes = self.nodes
        limit, timeout = self.budget.node_limit, self.budget.timeout
        over_nodes = limit is not None and nodes > limit
        over_time = timeout is not None and nodes % 256 == 0 and time.monotonic() - self.started > timeout
        if over_nodes or over_time:
            self.exhausted.set()
            raise BudgetExhausted()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0
    symmetry_fixed: bool = False
    workers: int = 1
    states: int = 0
    decisions: List[Dict[str, Any]] = field(default_factory=list)


@dataclass
class SearchOutcome:
    n: int
    k: int
    mode: SearchMode
    lower: int
    upper: int
    certificate: Optional[FamilyPair]
    stats: SearchStats
    method: str
    lower_source: str = 'search'
    upper_source: str = ''

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def to_document(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'k': self.k,
            'mode': {'star_free': self.mode.star_free, 'allow_overlap': self.mode.allow_overlap},
            'method': self.method,
            'exact': self.exact,
            'value': big(self.value) if self.exact else None,
            'interval': [big(self.lower), big(self.upper)],
            'lower_source': self.lower_source,
            'upper_source': self.upper_source,
            'stats': {
                'nodes': self.stats.nodes,
                'states': self.stats.states,
                'elapsed': round(self.stats.elapsed, 3),
                'symmetry_fixed': self.stats.symmetry_fixed,
                'workers': self.stats.workers,
                'decisions': self.stats.decisions,
            },
            'certificate': pair_to_document(self.certificate) if self.certificate is not None else None,
        }


# ---------------------------------------------------------------------------
# Разметки и фиксация симметрии
# ---------------------------------------------------------------------------

class Label(Enum):
    A = 'A'
    B = 'B'
    BOTH = 'both'
    NEITHER = 'neither'


# Состояние узла: (a, b, cand_a, cand_b) - размеченные и допустимые вершины сторон.
# cand_a ⊇ a, и вершины cand_a \ a не смежны ни с одной вершиной b.
State = Tuple[int, int, int, int]


def _apply(graph: KneserGraph, state: State, v: int, label: Label) -> State:
    a, b, cand_a, cand_b = state
    bit = 1 << v
    adj = graph.adjacency[v]
    if label is Label.A:
        return a | bit, b, cand_a, cand_b & ~adj & ~bit
    if label is Label.B:
        return a, b | bit, cand_a & ~adj & ~bit, cand_b
    if label is Label.BOTH:
        return a | bit, b | bit, cand_a & ~adj, cand_b & ~adj
    return a, b, cand_a & ~bit, cand_b & ~bit


@dataclass(frozen=True)
class SymmetryFix:
    """Ограничение на канонической вершине [1,k] (колекс-ранг 0)"""
    enabled: bool
    vertex: int = 0
    labels: Tuple[Label, ...] = ()


def symmetry_fix(graph: KneserGraph, mode: SearchMode, enabled: bool = True) -> SymmetryFix:
    """
    Фиксирует [1,k] в A: граф Кнезера вершинно-транзитивен, а размеры и
    свойство "не звезда" сохраняются перестановками [n].
    """
    if not enabled:
        return SymmetryFix(enabled=False)
    labels = (Label.A, Label.BOTH) if mode.allow_overlap else (Label.A,)
    return SymmetryFix(enabled=True, vertex=0, labels=labels)


# ---------------------------------------------------------------------------
# Ветви и границы
# ---------------------------------------------------------------------------

class _Verdict(Enum):
    FAIL = 0
    FEASIBLE = 1
    BRANCH = 2


class _FrontierCell:
    """Наименьший индекс фронтира с найденной разметкой; значение только уменьшается"""

    def __init__(self):
        self.best_index: float = float('inf')
        self.certificate: Optional[Tuple[int, int]] = None
        self._lock = threading.Lock()

    def offer(self, index: int, certificate: Tuple[int, int]):
        with self._lock:
            if index < self.best_index:
                self.best_index = index
                self.certificate = certificate


class _DecisionSearch:
    """Задача разрешимости: есть ли допустимая разметка с |A| >= t и |B| >= t"""

    def __init__(self, graph: KneserGraph, mode: SearchMode, t: int, tracker: _BudgetTracker):
        self.graph = graph
        self.mode = mode
        self.t = t
        self.tracker = tracker

    def _evaluate(self, state: State) -> Tuple[_Verdict, Optional[Tuple[int, int]]]:
        a, b, cand_a, cand_b = state
        t, g = self.t, self.graph
        if _popcount(cand_a) < t or _popcount(cand_b) < t:
            return _Verdict.FAIL, None
        if not self.mode.allow_overlap and _popcount(cand_a | cand_b) < 2 * t:
            return _Verdict.FAIL, None
        if self.mode.star_free and (g.is_star_set(cand_a) or g.is_star_set(cand_b)):
            return _Verdict.FAIL, None
        open_a, open_b = cand_a & ~a, cand_b & ~b
        if any(g.adjacency[u] & open_b for u in _bits(open_a)):
            return _Verdict.BRANCH, None
        return self._close(state)

    def _close(self, state: State) -> Tuple[_Verdict, Optional[Tuple[int, int]]]:
        """Конфликтов между открытыми вершинами нет: решаем узел подсчетом"""
        a, b, cand_a, cand_b = state
        if self.mode.allow_overlap:
            return _Verdict.FEASIBLE, (cand_a, cand_b)
        shared = cand_a & ~a & cand_b & ~b
        own_a, own_b = cand_a & ~shared, cand_b & ~shared
        pa, pb, s = _popcount(own_a), _popcount(own_b), _popcount(shared)
        low, high = max(0, self.t - pa), min(s, pb + s - self.t)
        if low > high:
            return _Verdict.FAIL, None
        order = list(_bits(shared))
        for x in (low, high):
            to_a = sum(1 << v for v in order[:x])
            side_a, side_b = own_a | to_a, own_b | (shared & ~to_a)
            if not self.mode.star_free or not (self.graph.is_star_set(side_a) or self.graph.is_star_set(side_b)):
                return _Verdict.FEASIBLE, (side_a, side_b)
        # звездность зависит от деления общих вершин: продолжаем ветвление
        return (_Verdict.BRANCH, None) if s else (_Verdict.FAIL, None)

    def _children(self, state: State) -> List[State]:
        a, b, cand_a, cand_b = state
        g = self.graph
        open_all = (cand_a & ~a) | (cand_b & ~b)
        v = max(_bits(open_all), key=lambda u: (_popcount(g.adjacency[u] & open_all), -u))
        bit = 1 << v
        labels = []
        if cand_a & bit:
            labels.append(Label.A)
        if cand_b & bit:
            labels.append(Label.B)
        if self.mode.allow_overlap and cand_a & bit and cand_b & bit:
            labels.append(Label.BOTH)
        labels.append(Label.NEITHER)
        return [_apply(g, state, v, label) for label in labels]

    def expand(self, state: State) -> Tuple[_Verdict, Optional[Tuple[int, int]], List[State]]:
        self.tracker.tick()
        verdict, cert = self._evaluate(state)
        return verdict, cert, self._children(state) if verdict is _Verdict.BRANCH else []

    def dfs(self, root: State, index: int, cell: _FrontierCell) -> Optional[Tuple[int, int]]:
        stack = [root]
        while stack:
            if cell.best_index < index:
                return None
            verdict, cert, children = self.expand(stack.pop())
            if verdict is _Verdict.FEASIBLE:
                return cert
            stack.extend(reversed(children))
        return None


def _initial_states(graph: KneserGraph, fix: SymmetryFix) -> List[State]:
    full = graph.all_vertices
    root = (0, 0, full, full)
    if not fix.enabled:
        return [root]
    return [_apply(graph, root, fix.vertex, label) for label in fix.labels]


def _build_frontier(search: _DecisionSearch, roots: List[State],
                    target: int) -> Tuple[List[State], Optional[Tuple[int, int]]]:
    """
    Раскрывает дерево по уровням, сохраняя порядок обхода в глубину.
    Возвращает фронтир или разметку, найденную раньше всех открытых узлов.
    """
    frontier: List[State] = list(roots)
    for _ in range(FRONTIER_MAX_DEPTH):
        if len(frontier) >= target:
            break
        expanded: List[State] = []
        grew = False
        for state in frontier:
            verdict, cert, children = search.expand(state)
            if verdict is _Verdict.FEASIBLE:
                if not expanded:
                    return [], cert
                expanded.append(state)
                break
            if verdict is _Verdict.BRANCH:
                expanded.extend(children)
                grew = True
        frontier = expanded
        if not grew:
            break
    return frontier, None


def _decide(graph: KneserGraph, mode: SearchMode, t: int, tracker: _BudgetTracker,
            fix: SymmetryFix, workers: int) -> Tuple[Optional[bool], Optional[Tuple[int, int]]]:
    """
    Returns:
        (True, (A, B)) - разметка найдена; (False, None) - доказано, что ее нет;
        (None, None) - бюджет исчерпан
    """
    search = _DecisionSearch(graph, mode, t, tracker)
    try:
        frontier, early = _build_frontier(search, _initial_states(graph, fix), workers * FRONTIER_PER_WORKER)
    except BudgetExhausted:
        return None, None
    if early is not None:
        return True, early
    cell = _FrontierCell()
    incomplete = threading.Event()

    def solve(index: int, state: State):
        try:
            cert = search.dfs(state, index, cell)
        except BudgetExhausted:
            incomplete.set()
            return
        if cert is not None:
            cell.offer(index, cert)

    if workers <= 1:
        for index, state in enumerate(frontier):
            solve(index, state)
            if cell.certificate is not None or incomplete.is_set():
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            for future in [executor.submit(solve, i, s) for i, s in enumerate(frontier)]:
                future.result()
    if cell.certificate is not None:
        return True, cell.certificate
    if incomplete.is_set():
        return None, None
    return False, None


# ---------------------------------------------------------------------------
# Границы для поиска
# ---------------------------------------------------------------------------

def search_upper_bound(n: int, k: int, mode: SearchMode) -> Tuple[int, str]:
    """Наименьшая из доказанных верхних границ для режима и ее источник"""
    candidates = [(ekr_bound(n, k), 'ekr')]
    if not mode.allow_overlap:
        candidates.append((binomial(n, k) // 2, 'half_of_layer'))
        b = bounds(n, k)
        regime = classify(n, k).regime
        if regime is Regime.CONJECTURE_HOLDS:
            candidates.append((b.conjecture_value, 'conjecture_value'))
        elif regime is Regime.GREY_ZONE and k > 3:
            candidates.append((b.prop41_upper, 'prop41_upper'))
    if mode.star_free:
        candidates.append((hilton_milner_bound(n, k), 'hm'))
    return min(candidates, key=lambda c: c[0])


def best_construction(n: int, k: int, mode: SearchMode) -> Tuple[int, Optional[FamilyPair], str]:
    """Лучшая известная конструкция для режима: (min-размер, пара, имя)"""
    best: Tuple[int, Optional[FamilyPair], str] = (0, None, 'none')
    for name, construction in CONSTRUCTIONS.items():
        if not mode.allow_overlap and not construction.disjoint:
            continue
        if mode.star_free and not construction.star_free:
            continue
        try:
            pair, _ = build_construction(name, n, k)
        except PreconditionError:
            continue
        if pair.min_size > best[0]:
            best = (pair.min_size, pair, name)
    return best


def _empty_pair(ground: GroundSet) -> FamilyPair:
    return FamilyPair(Family.empty(ground), Family.empty(ground))


def _certify(outcome: SearchOutcome) -> SearchOutcome:
    cert = outcome.certificate
    if cert is None:
        if outcome.lower > 0 or not outcome.mode.star_free:
            raise InvariantViolation(f"Нет сертификата для нижней границы {outcome.lower}")
        return outcome
    report = verify_pair(cert, outcome.mode.checks)
    if not report.passed or cert.min_size < outcome.lower:
        failed = ', '.join(r.check.value for r in report.failures())
        raise InvariantViolation(f"Сертификат не прошел проверку ({failed or 'размер'}) при n={outcome.n}, k={outcome.k}")
    return outcome


def grey_zone_check(outcome: SearchOutcome) -> SearchOutcome:
    """
    Сверяет точное значение непересекающегося режима с оценками серой зоны.

    При k > 3 значение не больше ⌊(C(n-1,k-1)+n-k-1)/2⌋. При k <= 3 эта
    оценка не доказана; проверяется только случай, когда одна из сторон
    сертификата - звезда: тогда min{|A|,|B|} <= ⌊(C(n-1,k-1)+k-1)/2⌋.
    """
    if not outcome.exact or outcome.mode.allow_overlap:
        return outcome
    n, k = outcome.n, outcome.k
    if classify(n, k).regime is not Regime.GREY_ZONE:
        return outcome
    if k > 3:
        limit, name = bounds(n, k).prop41_upper, 'prop41_upper'
    else:
        cert = outcome.certificate
        if cert is None or (is_star(cert.a) is None and is_star(cert.b) is None):
            return outcome
        limit, name = (binomial(n - 1, k - 1) + k - 1) // 2, 'star_side'
    if outcome.value > limit:
        raise InvariantViolation(f"Значение {outcome.value} превышает оценку серой зоны {name}={limit} "
                                 f"при n={n}, k={k}")
    return outcome


def exact_maxmin(n: int, k: int, star_free: bool = False, allow_overlap: bool = False,
                 budget: Optional[Budget] = None, workers: int = 1, fix_symmetry: bool = True,
                 seed_lower_bound: bool = True) -> SearchOutcome:
    """
    Точный max min{|A|,|B|} по парам пересекающихся семейств

    Args:
        n, k: Параметры, n >= 2k+1, C(n,k) <= 256
        star_free: Ни одно из семейств не звезда
        allow_overlap: Разрешить A ∩ B != ∅
        budget: Ограничения по времени и узлам (None - без ограничений)
        workers: Число потоков для поддеревьев
        fix_symmetry: Фиксировать [1,k] в A
        seed_lower_bound: Начинать с лучшей конструкции (иначе с 0)

    Returns:
        SearchOutcome: точное значение или интервал при исчерпании бюджета
    """
    if n < 2 * k + 1:
        raise PreconditionError(f"Требуется n >= 2k+1, получено n={n}, k={k}")
    mode = SearchMode(star_free=star_free, allow_overlap=allow_overlap)
    graph = KneserGraph(GroundSet(n, k))
    tracker = _BudgetTracker(budget or Budget())
    upper, upper_source = search_upper_bound(n, k, mode)
    if seed_lower_bound:
        lower, certificate, lower_source = best_construction(n, k, mode)
    else:
        lower, certificate, lower_source = 0, None, 'none'
    if certificate is None and not star_free:
        certificate = _empty_pair(graph.ground)
    if lower > upper:
        raise InvariantViolation(f"Нижняя граница {lower} ({lower_source}) больше верхней {upper} ({upper_source})")
    fix = symmetry_fix(graph, mode, fix_symmetry)
    stats = SearchStats(symmetry_fixed=fix.enabled, workers=max(1, workers))
    logger.info(f"Поиск (n={n}, k={k}, {mode}): начальный интервал [{lower}, {upper}]")

    for t in range(upper, lower, -1):
        feasible, labeling = _decide(graph, mode, t, tracker, fix, stats.workers)
        if feasible is None:
            stats.decisions.append({'t': t, 'result': 'budget'})
            logger.warning(f"Бюджет исчерпан при t={t}: результат - интервал [{lower}, {upper}]")
            break
        if feasible:
            stats.decisions.append({'t': t, 'result': 'feasible'})
            lower = t
            certificate = FamilyPair(graph.family(labeling[0]), graph.family(labeling[1]))
            lower_source = 'search'
            logger.info(f"t={t}: найдена разметка")
            break
        stats.decisions.append({'t': t, 'result': 'infeasible'})
        upper = t - 1
        logger.info(f"t={t}: разметок нет")

    stats.nodes = tracker.nodes
    stats.elapsed = tracker.elapsed
    outcome = SearchOutcome(n=n, k=k, mode=mode, lower=lower, upper=upper, certificate=certificate,
                            stats=stats, method='branch_and_bound', lower_source=lower_source,
                            upper_source=upper_source)
    _certify(outcome)
    grey_zone_check(outcome)
    logger.info(f"Поиск (n={n}, k={k}, {mode}): "
                f"{'значение ' + str(outcome.value) if outcome.exact else f'интервал [{lower}, {upper}]'}, "
                f"узлов {stats.nodes}")
    return outcome


# ---------------------------------------------------------------------------
# Оракул полного перебора
# ---------------------------------------------------------------------------

def _subset_tables(graph: KneserGraph) -> Tuple[np.ndarray, np.ndarray]:
    """Для каждого подмножества вершин: объединение соседей и AND масок членов"""
    size = 1 << graph.size
    neighbours = np.zeros(size, dtype=np.uint64)
    common = np.empty(size, dtype=np.uint64)
    common[0] = np.uint64(graph.ground.full_mask)
    for j in range(graph.size):
        low, high = 1 << j, 1 << (j + 1)
        neighbours[low:high] = neighbours[:low] | np.uint64(graph.adjacency[j])
        common[low:high] = common[:low] & np.uint64(graph.member_masks[j])
    return neighbours, common


def _full_labelings(graph: KneserGraph, mode: SearchMode) -> Tuple[int, Optional[Tuple[int, int]], int]:
    labels = 4 if mode.allow_overlap else 3
    states = labels ** graph.size
    if states > FULL_LABELING_CAP:
        raise CapacityError(f"{labels}^{graph.size} разметок превышает предел {FULL_LABELING_CAP}")
    best, cert = -1, None
    for labeling in product(range(labels), repeat=graph.size):
        a = b = 0
        for v, lab in enumerate(labeling):
            # 0 - ни одна сторона, 1 - A, 2 - B, 3 - обе
            if lab & 1:
                a |= 1 << v
            if lab & 2:
                b |= 1 << v
        if graph.neighbours_of(a) & b:
            continue
        if mode.star_free and (graph.is_star_set(a) or graph.is_star_set(b)):
            continue
        score = min(_popcount(a), _popcount(b))
        if score > best:
            best, cert = score, (a, b)
    return best, cert, states


def exhaustive_labelings(n: int, k: int, star_free: bool = False, allow_overlap: bool = False,
                         full_labelings: bool = False) -> SearchOutcome:
    """
    Полный перебор. По умолчанию перебираются все A ⊂ V, а B берется
    максимальным: V \\ N[A] (или V \\ N(A) при перекрытии). Любое допустимое B
    содержится в максимальном, а надмножество не-звезды - не звезда.
    full_labelings=True перебирает все 3^V (4^V) разметки буквально.
    """
    mode = SearchMode(star_free=star_free, allow_overlap=allow_overlap)
    graph = KneserGraph(GroundSet(n, k))
    started = time.monotonic()
    if full_labelings:
        best, cert, states = _full_labelings(graph, mode)
        method = 'full_labelings'
    else:
        states = 1 << graph.size
        if states > EXHAUSTIVE_STATE_CAP:
            raise CapacityError(f"2^{graph.size} состояний превышает предел {EXHAUSTIVE_STATE_CAP}")
        neighbours, common = _subset_tables(graph)
        index = np.arange(states, dtype=np.uint64)
        blocked = neighbours if allow_overlap else neighbours | index
        b_max = np.uint64(states - 1) & ~blocked
        score = np.minimum(popcount64(index), popcount64(b_max))
        if star_free:
            # звезда <=> у членов есть общий элемент
            valid = (common == 0) & (common[b_max.astype(np.int64)] == 0)
            score = np.where(valid, score, -1)
        at = int(np.argmax(score))
        best = int(score[at])
        cert = (at, int(b_max[at])) if best >= 0 else None
        method = 'exhaustive'
    if best < 0:
        logger.warning(f"(n={n}, k={k}, {mode}): допустимых пар нет")
        best = 0
    certificate = None
    if cert is not None:
        certificate = FamilyPair(graph.family(cert[0]), graph.family(cert[1]))
    stats = SearchStats(states=states, elapsed=time.monotonic() - started)
    outcome = SearchOutcome(n=n, k=k, mode=mode, lower=best, upper=best, certificate=certificate,
                            stats=stats, method=method, lower_source=method, upper_source=method)
    _certify(outcome)
    logger.info(f"Перебор (n={n}, k={k}, {mode}): значение {best}, состояний {states}")
    return outcome


__all__ = [
    'KneserGraph', 'SearchMode', 'Budget', 'BudgetExhausted', 'SearchStats', 'SearchOutcome',
    'Label', 'SymmetryFix', 'symmetry_fix', 'search_upper_bound', 'best_construction',
    'exact_maxmin', 'exhaustive_labelings', 'MAX_VERTICES',
]
