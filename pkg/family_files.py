#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Чтение и запись файлов пар семейств.

Формат (UTF-8 JSON):
    {"n": 7, "k": 3, "A": [[1,2,3], ...], "B": [[1,2,4], ...], "meta": {...}}

Члены записываются строго возрастающими списками элементов из [1, n] в
колекс-порядке. Для пар разной равномерности добавляются поля "k_A" и "k_B".
Большие целые в "meta" хранятся десятичными строками.
"""

import json
import logging
import os
from typing import Any, Dict, Optional, Tuple

from kset_core import Family, FamilyPair, GroundSet, PreconditionError

logger = logging.getLogger(__name__)


class FamilyFileError(ValueError):
    """Файл семейства отсутствует или не соответствует формату"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def big(value: int) -> str:
    """Большие целые сериализуются десятичной строкой"""
    return str(int(value))


def pair_to_document(pair: FamilyPair, meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Канонический документ пары

    Args:
        pair: Пара семейств
        meta: Дополнительные поля (название конструкции, режим поиска и т.п.)

    Returns:
        Словарь, готовый к json.dumps
    """
    doc: Dict[str, Any] = {
        'n': pair.n,
        'k': pair.a.ground.k,
    }
    if not pair.is_uniform:
        doc['k_A'] = pair.a.ground.k
        doc['k_B'] = pair.b.ground.k
    doc['A'] = [list(s) for s in pair.a.sets()]
    doc['B'] = [list(s) for s in pair.b.sets()]
    if meta:
        doc['meta'] = meta
    return doc


def _parse_family(doc: Dict[str, Any], side: str, n: int, k: int) -> Family:
    raw = doc.get(side)
    if not isinstance(raw, list):
        raise FamilyFileError(f"Поле {side} должно быть списком множеств")
    for member in raw:
        if not isinstance(member, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in member):
            raise FamilyFileError(f"Член семейства {side} должен быть списком целых: {member!r}")
        if len(member) != k:
            raise FamilyFileError(f"Член {member} семейства {side} не является {k}-множеством")
        if any(a >= b for a, b in zip(member, member[1:])):
            raise FamilyFileError(f"Элементы {member} должны строго возрастать")
        if member and (member[0] < 1 or member[-1] > n):
            raise FamilyFileError(f"Элементы {member} должны лежать в [1, {n}]")
    return Family.from_sets(GroundSet(n, k), raw)


def pair_from_document(doc: Dict[str, Any]) -> FamilyPair:
    """Разбор документа пары с проверкой схемы"""
    if not isinstance(doc, dict):
        raise FamilyFileError("Документ должен быть JSON-объектом")
    n, k = doc.get('n'), doc.get('k')
    if not isinstance(n, int) or not isinstance(k, int):
        raise FamilyFileError("Поля n и k обязательны и должны быть целыми")
    k_a = doc.get('k_A', k)
    k_b = doc.get('k_B', k)
    try:
        return FamilyPair(_parse_family(doc, 'A', n, k_a), _parse_family(doc, 'B', n, k_b))
    except PreconditionError as e:
        raise FamilyFileError(str(e))


def write_pair(path: str, pair: FamilyPair, meta: Optional[Dict[str, Any]] = None) -> str:
    """
    Записывает пару в файл

    Returns:
        Путь к записанному файлу
    """
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(directory):
        os.makedirs(directory)
        logger.info(f"Создана папка для результатов: {directory}")
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(pair_to_document(pair, meta), f, ensure_ascii=False, indent=2)
        f.write('\n')
    logger.info(f"Пара записана: {path} (|A|={pair.a.size}, |B|={pair.b.size})")
    return path


def read_pair(path: str) -> Tuple[FamilyPair, Dict[str, Any]]:
    """
    Читает пару из файла

    Returns:
        (пара, meta) - meta пуст, если в файле его нет
    """
    if not os.path.exists(path):
        raise FamilyFileError("Файл не найден", path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise FamilyFileError(f"Некорректный JSON: {e}", path)
    except UnicodeDecodeError as e:
        raise FamilyFileError(f"Файл не в кодировке UTF-8: {e}", path)
    try:
        pair = pair_from_document(doc)
    except FamilyFileError as e:
        raise FamilyFileError(str(e), path)
    logger.debug(f"Прочитана пара из {path}: размеры {pair.sizes}")
    return pair, doc.get('meta', {})
