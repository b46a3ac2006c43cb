#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Базовое представление k-подмножеств [n] и семейств из них.

k-множество хранится как битовая маска (бит i-1 установлен, если элемент i
входит в множество). Семейство хранит отсортированный массив масок
(порядок масок как целых чисел совпадает с колексикографическим порядком)
и упакованный битсет принадлежности длины C(n,k), индексированный
колекс-рангом.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import chain, combinations
from math import comb
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

MAX_N = 64
MAX_BITSET_ENTRIES = 1 << 28
# Выше этого произведения |A|·|B| проверка пересечений идет через расщепление по элементам
DIRECT_PRODUCT_LIMIT = 1 << 22
SMALL_SIDE = 64

_ONE = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


class PreconditionError(ValueError):
    """Нарушено предусловие операции (параметры вне допустимой области)"""


class CapacityError(PreconditionError):
    """Превышен предел представления (n > 64, битсет > 2^28 и т.п.)"""


class InvariantViolation(RuntimeError):
    """Внутренний инвариант нарушен: признак ошибки в реализации"""


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Restriction(Enum):
    CONTAINS = 'contains'
    AVOIDS = 'avoids'


# ---------------------------------------------------------------------------
# Маски и ранги
# ---------------------------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    """Маска множества по списку элементов (1-индексация)"""
    mask = 0
    for x in elements:
        mask |= 1 << (int(x) - 1)
    return mask


def elements_of(mask: int) -> Tuple[int, ...]:
    """Элементы множества по маске, по возрастанию"""
    mask = int(mask)
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length())
        mask ^= low
    return tuple(result)


def format_set(mask: int) -> str:
    return '{' + ','.join(str(x) for x in elements_of(mask)) + '}'


def popcount64(values: np.ndarray) -> np.ndarray:
    """Число единичных битов для массива uint64"""
    x = np.asarray(values, dtype=np.uint64).copy()
    x -= (x >> _ONE) & _M1
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return ((x * _H01) >> np.uint64(56)).astype(np.int64)


@lru_cache(maxsize=None)
def binomial_table(n: int) -> np.ndarray:
    """Таблица C(i, j) для 0 <= i, j <= n (все значения помещаются в int64 при n <= 64)"""
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        for j in range(i + 1):
            table[i, j] = comb(i, j)
    table.flags.writeable = False
    return table


def colex_ranks(masks: np.ndarray, n: int) -> np.ndarray:
    """
    Колекс-ранги для массива масок.

    Ранг множества {c_1 < ... < c_k} равен сумме C(c_i - 1, i).
    """
    masks = np.asarray(masks, dtype=np.uint64)
    table = binomial_table(n)
    ranks = np.zeros(masks.shape[0], dtype=np.int64)
    count = np.zeros(masks.shape[0], dtype=np.int64)
    for pos in range(n):
        bit = ((masks >> np.uint64(pos)) & _ONE).astype(bool)
        if not bit.any():
            continue
        count += bit
        ranks[bit] += table[pos, count[bit]]
    return ranks


def subset_masks(elements: Sequence[int], r: int) -> np.ndarray:
    """
    Все r-подмножества заданного набора элементов как маски,
    отсортированные по возрастанию (то есть в колекс-порядке)
    """
    elems = sorted(int(x) for x in elements)
    total = comb(len(elems), r)
    if total == 0:
        return np.zeros(0, dtype=np.uint64)
    positions = np.asarray(elems, dtype=np.uint64) - _ONE
    flat = np.fromiter(chain.from_iterable(combinations(range(len(elems)), r)),
                       dtype=np.int64, count=total * r)
    index = flat.reshape(total, r)
    bits = np.left_shift(_ONE, positions[index])
    masks = np.bitwise_or.reduce(bits, axis=1).astype(np.uint64)
    masks.sort()
    return masks


@lru_cache(maxsize=64)
def all_masks(n: int, k: int) -> np.ndarray:
    """Все k-подмножества [n] в колекс-порядке; индекс в массиве равен колекс-рангу"""
    if comb(n, k) > MAX_BITSET_ENTRIES:
        raise CapacityError(f"C({n},{k}) превышает предел битсета 2^28")
    masks = subset_masks(range(1, n + 1), k)
    masks.flags.writeable = False
    return masks


# ---------------------------------------------------------------------------
# Типы
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroundSet:
    """Базовое множество [n] и равномерность k"""
    n: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n):
            raise PreconditionError(f"Требуется 1 <= k <= n, получено n={self.n}, k={self.k}")
        if self.n > MAX_N:
            raise CapacityError(f"n={self.n} превышает предел {MAX_N}")

    @property
    def size(self) -> int:
        return comb(self.n, self.k)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def require_above_2k(self):
        """Проверка n > 2k для операций, которым она нужна"""
        if self.n <= 2 * self.k:
            raise PreconditionError(f"Требуется n > 2k, получено n={self.n}, k={self.k}")

    def __str__(self) -> str:
        return f"([{self.n}], {self.k})"


@dataclass(frozen=True)
class KSet:
    """k-подмножество [n] как битовый вектор ширины n"""
    ground: GroundSet
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ground.n:
            raise PreconditionError(f"Маска {self.bits:#x} выходит за пределы [{self.ground.n}]")
        if self.bits.bit_count() != self.ground.k:
            raise PreconditionError(
                f"Множество {format_set(self.bits)} не является {self.ground.k}-множеством")

    @classmethod
    def from_elements(cls, ground: GroundSet, elements: Iterable[int]) -> 'KSet':
        elements = list(elements)
        if any(not (1 <= int(x) <= ground.n) for x in elements):
            raise PreconditionError(f"Элементы {elements} должны лежать в [1, {ground.n}]")
        return cls(ground, mask_of(elements))

    def elements(self) -> Tuple[int, ...]:
        return elements_of(self.bits)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.ground.n and bool(self.bits >> (x - 1) & 1)

    def __str__(self) -> str:
        return format_set(self.bits)


class Family:
    """
    Равномерное семейство k-подмножеств [n].

    Значение неизменяемо: массив масок и битсет помечены как read-only.
    """

    __slots__ = ('ground', '_masks', '_members')

    def __init__(self, ground: GroundSet, masks=()):
        """
        Args:
            ground: Базовое множество и равномерность
            masks: Маски членов семейства (порядок и повторы не важны)
        """
        if ground.size > MAX_BITSET_ENTRIES:
            raise CapacityError(f"Битсет семейства C({ground.n},{ground.k}) превышает 2^28")
        arr = np.unique(np.asarray(masks, dtype=np.uint64).reshape(-1))
        if arr.size:
            if ground.n < 64 and int(arr[-1]) >> ground.n:
                raise PreconditionError(f"Есть член семейства вне [{ground.n}]")
            if np.any(popcount64(arr) != ground.k):
                raise PreconditionError(f"Не все члены семейства имеют размер {ground.k}")
        bitset = np.zeros(ground.size, dtype=bool)
        bitset[colex_ranks(arr, ground.n)] = True
        members = np.packbits(bitset, bitorder='little')
        arr.flags.writeable = False
        members.flags.writeable = False
        self.ground = ground
        self._masks = arr
        self._members = members

    # -- конструкторы ------------------------------------------------------

    @classmethod
    def from_sets(cls, ground: GroundSet, sets: Iterable[Iterable[int]]) -> 'Family':
        return cls(ground, [KSet.from_elements(ground, s).bits for s in sets])

    @classmethod
    def from_ranks(cls, ground: GroundSet, ranks: Iterable[int]) -> 'Family':
        ranks = np.asarray(list(ranks), dtype=np.int64)
        if ranks.size and (ranks.min() < 0 or ranks.max() >= ground.size):
            raise PreconditionError("Колекс-ранг вне диапазона [0, C(n,k))")
        return cls(ground, all_masks(ground.n, ground.k)[ranks])

    @classmethod
    def from_bitset(cls, ground: GroundSet, members: np.ndarray) -> 'Family':
        """Из упакованного (bitorder='little') или булевого битсета"""
        members = np.asarray(members)
        if members.dtype != bool:
            members = np.unpackbits(members.astype(np.uint8), bitorder='little')[:ground.size].astype(bool)
        return cls.from_ranks(ground, np.flatnonzero(members))

    @classmethod
    def empty(cls, ground: GroundSet) -> 'Family':
        return cls(ground, ())

    @classmethod
    def full(cls, ground: GroundSet) -> 'Family':
        return cls(ground, subset_masks(range(1, ground.n + 1), ground.k))

    @classmethod
    def star(cls, ground: GroundSet, x: int = 1) -> 'Family':
        """Полная звезда S_x"""
        if not (1 <= x <= ground.n):
            raise PreconditionError(f"Центр звезды {x} вне [1, {ground.n}]")
        rest = [e for e in range(1, ground.n + 1) if e != x]
        return cls(ground, subset_masks(rest, ground.k - 1) | np.uint64(1 << (x - 1)))

    # -- доступ ------------------------------------------------------------

    @property
    def masks(self) -> np.ndarray:
        return self._masks

    @property
    def members(self) -> np.ndarray:
        """Упакованный битсет принадлежности (bitorder='little'), индекс = колекс-ранг"""
        return self._members

    @property
    def size(self) -> int:
        return int(self._masks.size)

    def __len__(self) -> int:
        return self.size

    def ranks(self) -> np.ndarray:
        return colex_ranks(self._masks, self.ground.n)

    def __contains__(self, item) -> bool:
        bits = item.bits if isinstance(item, KSet) else mask_of(item)
        i = int(np.searchsorted(self._masks, np.uint64(bits)))
        return i < self.size and int(self._masks[i]) == bits

    def __iter__(self) -> Iterator[KSet]:
        for m in self._masks:
            yield KSet(self.ground, int(m))

    def sets(self) -> List[Tuple[int, ...]]:
        """Члены семейства как кортежи элементов в колекс-порядке"""
        return [elements_of(int(m)) for m in self._masks]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self._masks, other._masks)

    def __hash__(self) -> int:
        return hash((self.ground, self._masks.tobytes()))

    def __repr__(self) -> str:
        return f"Family(n={self.ground.n}, k={self.ground.k}, size={self.size})"

    # -- теоретико-множественные операции -----------------------------------

    def _same_ground(self, other: 'Family'):
        if self.ground != other.ground:
            raise PreconditionError(f"Разные базовые множества: {self.ground} и {other.ground}")

    def union(self, other: 'Family') -> 'Family':
        self._same_ground(other)
        return Family(self.ground, np.union1d(self._masks, other._masks))

    def intersection(self, other: 'Family') -> 'Family':
        self._same_ground(other)
        return Family(self.ground, np.intersect1d(self._masks, other._masks, assume_unique=True))

    def difference(self, other: 'Family') -> 'Family':
        self._same_ground(other)
        return Family(self.ground, np.setdiff1d(self._masks, other._masks, assume_unique=True))

    def select(self, keep: np.ndarray) -> 'Family':
        """Подсемейство по булевой маске над self.masks"""
        return Family(self.ground, self._masks[keep])


@dataclass(frozen=True)
class FamilyPair:
    """
    Пара семейств (A, B) над одним [n].

    Равномерности могут различаться (a- и b-равномерные семейства в
    эквивалентности Хилтона и следствии о лексикографических отрезках).
    """
    a: Family
    b: Family

    def __post_init__(self):
        if self.a.ground.n != self.b.ground.n:
            raise PreconditionError(
                f"Семейства пары заданы на разных [n]: {self.a.ground.n} и {self.b.ground.n}")

    @property
    def n(self) -> int:
        return self.a.ground.n

    @property
    def is_uniform(self) -> bool:
        return self.a.ground == self.b.ground

    @property
    def ground(self) -> GroundSet:
        if not self.is_uniform:
            raise PreconditionError("Пара не является равномерной: разные k")
        return self.a.ground

    @property
    def sizes(self) -> Tuple[int, int]:
        return self.a.size, self.b.size

    @property
    def min_size(self) -> int:
        return min(self.a.size, self.b.size)


# ---------------------------------------------------------------------------
# Операции
# ---------------------------------------------------------------------------

def colex_rank(s: KSet) -> int:
    """Колекс-ранг: {1..k} имеет ранг 0"""
    return sum(comb(c - 1, i) for i, c in enumerate(s.elements(), start=1))


def colex_unrank(ground: GroundSet, rank: int) -> KSet:
    """Обратная к colex_rank"""
    if not (0 <= rank < ground.size):
        raise PreconditionError(f"Ранг {rank} вне [0, {ground.size})")
    elements = []
    r = rank
    for i in range(ground.k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= r:
            c += 1
        elements.append(c + 1)
        r -= comb(c, i)
    return KSet.from_elements(ground, elements)


def lex_compare(g: KSet, h: KSet) -> Ordering:
    """g <_L h тогда и только тогда, когда min(g \\ h) < min(h \\ g)"""
    if g.ground.n != h.ground.n or g.ground.k != h.ground.k:
        raise PreconditionError("Сравнение множеств разных размеров или над разными [n]")
    if g.bits == h.bits:
        return Ordering.EQUAL
    only_g = g.bits & ~h.bits
    only_h = h.bits & ~g.bits
    return Ordering.LESS if (only_g & -only_g) < (only_h & -only_h) else Ordering.GREATER


def _direct_disjoint_pair(a: np.ndarray, b: np.ndarray) -> Optional[Tuple[int, int]]:
    swapped = a.size > b.size
    small, big = (b, a) if swapped else (a, b)
    step = max(1, DIRECT_PRODUCT_LIMIT // max(1, big.size))
    for start in range(0, small.size, step):
        block = small[start:start + step]
        hits = (block[:, None] & big[None, :]) == 0
        if hits.any():
            i, j = np.argwhere(hits)[0]
            x, y = int(block[i]), int(big[j])
            return (y, x) if swapped else (x, y)
    return None


def _split_disjoint_pair(a: np.ndarray, b: np.ndarray, n: int) -> Optional[Tuple[int, int]]:
    if a.size == 0 or b.size == 0:
        return None
    if min(a.size, b.size) <= SMALL_SIDE or a.size * b.size <= DIRECT_PRODUCT_LIMIT:
        return _direct_disjoint_pair(a, b)
    best_bit, best_score = None, 0
    for pos in range(n):
        bit = np.uint64(1 << pos)
        score = int(np.count_nonzero(a & bit)) * int(np.count_nonzero(b & bit))
        if score > best_score:
            best_bit, best_score = bit, score
    if best_bit is None:
        return _direct_disjoint_pair(a, b)
    in_a = (a & best_bit) != 0
    in_b = (b & best_bit) != 0
    # Пары, где оба множества содержат выбранный элемент, заведомо пересекаются
    for x, y in ((a[in_a], b[~in_b]), (a[~in_a], b[in_b]), (a[~in_a], b[~in_b])):
        witness = _split_disjoint_pair(x, y, n)
        if witness is not None:
            return witness
    return None


def find_disjoint_pair(a: Family, b: Family) -> Optional[Tuple[int, int]]:
    """
    Ищет A in a, B in b с A ∩ B = ∅.

    Returns:
        Пара масок (A, B) или None, если семейства пересекаются попарно
    """
    if a.ground.n != b.ground.n:
        raise PreconditionError("Семейства над разными [n]")
    return _split_disjoint_pair(a.masks, b.masks, a.ground.n)


def cross_intersecting(p: FamilyPair) -> bool:
    """A ∩ B != ∅ для всех A in a, B in b (пустое семейство дает True)"""
    return find_disjoint_pair(p.a, p.b) is None


def is_intersecting(f: Family) -> bool:
    return cross_intersecting(FamilyPair(f, f))


def is_star(f: Family) -> Optional[int]:
    """
    Наименьший общий элемент всех членов или None.

    Пустое семейство по соглашению считается звездой с центром 1.
    """
    if f.size == 0:
        return 1
    common = int(np.bitwise_and.reduce(f.masks))
    if common == 0:
        return None
    return (common & -common).bit_length()


def element_degrees(f: Family) -> np.ndarray:
    """Степени элементов: degrees[i-1] = |F(i)|"""
    return np.array([np.count_nonzero(f.masks & np.uint64(1 << pos)) for pos in range(f.ground.n)],
                    dtype=np.int64)


def diversity(f: Family) -> int:
    """gamma(F) = min_i |F(i-bar)|; пустое семейство имеет разнообразие 0"""
    if f.size == 0:
        return 0
    return int(f.size - element_degrees(f).max())


def restriction(f: Family, i: int, mode: Restriction) -> Family:
    """
    F(i-bar) на том же [n] или F(i) = {F \\ {i}} на [n-1].

    Для mode=CONTAINS элементы больше i сдвигаются вниз на единицу.
    """
    n, k = f.ground.n, f.ground.k
    if not (1 <= i <= n):
        raise PreconditionError(f"Элемент {i} вне [1, {n}]")
    bit = np.uint64(1 << (i - 1))
    if mode is Restriction.AVOIDS:
        return f.select((f.masks & bit) == 0)
    if k < 2 or n < 2:
        raise PreconditionError("F(i) требует k >= 2: результат должен быть (k-1)-равномерным")
    chosen = f.masks[(f.masks & bit) != 0]
    low = chosen & np.uint64((1 << (i - 1)) - 1)
    high = (chosen >> np.uint64(i)) << np.uint64(i - 1)
    return Family(GroundSet(n - 1, k - 1), low | high)


def complement_family(f: Family) -> Family:
    """B^c = {[n] \\ B}; (n-k)-равномерное семейство"""
    n, k = f.ground.n, f.ground.k
    if k == n:
        raise PreconditionError("Дополнения n-множеств пусты: 0-равномерные семейства не поддерживаются")
    return Family(GroundSet(n, n - k), f.masks ^ np.uint64(f.ground.full_mask))


# ---------------------------------------------------------------------------
# Случайные семейства для property-тестов
# ---------------------------------------------------------------------------

def random_family(ground: GroundSet, rng: np.random.Generator, size: Optional[int] = None) -> Family:
    """Равномерно случайное семейство заданного (или случайного) размера"""
    total = ground.size
    if size is None:
        size = int(rng.integers(0, total + 1))
    ranks = rng.choice(total, size=size, replace=False)
    return Family(ground, all_masks(ground.n, ground.k)[ranks])


def random_intersecting_family(ground: GroundSet, rng: np.random.Generator,
                               max_size: Optional[int] = None) -> Family:
    """Жадно наращиваемое случайное пересекающееся семейство"""
    pool = all_masks(ground.n, ground.k)
    allowed = np.ones(pool.size, dtype=bool)
    chosen = []
    limit = max_size if max_size is not None else int(rng.integers(1, pool.size + 1))
    while len(chosen) < limit and allowed.any():
        m = pool[rng.choice(np.flatnonzero(allowed))]
        chosen.append(m)
        allowed &= (pool & m) != 0
        allowed[np.searchsorted(pool, m)] = False
    return Family(ground, chosen)


def random_cross_pair(n: int, a: int, b: int, rng: np.random.Generator) -> FamilyPair:
    """Случайная пересекающаяся пара: A случайно, B - случайная часть допустимых партнеров"""
    ga, gb = GroundSet(n, a), GroundSet(n, b)
    pool_a = all_masks(n, a)
    size_a = int(rng.integers(1, min(pool_a.size, 2 * n) + 1))
    fam_a = random_family(ga, rng, size_a)
    pool_b = all_masks(n, b)
    allowed = np.ones(pool_b.size, dtype=bool)
    for m in fam_a.masks:
        allowed &= (pool_b & m) != 0
    candidates = pool_b[allowed]
    keep = rng.random(candidates.size) < rng.random()
    return FamilyPair(fam_a, Family(gb, candidates[keep]))
