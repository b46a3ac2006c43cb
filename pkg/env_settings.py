#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Настройки из переменных окружения и файла .env
"""

import os
import logging
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULTS = {
    'EXTREMAL_WORKERS': '1',
    'EXTREMAL_SEARCH_TIMEOUT': '60',
    'EXTREMAL_NODE_LIMIT': '5000000',
    'EXTREMAL_LOG_LEVEL': 'INFO',
    'EXTREMAL_OUTPUT_DIR': 'results',
}


def _read_env_file(name: str, env_path: str) -> Optional[str]:
    """Ищет NAME=value в .env файле"""
    if not os.path.exists(env_path):
        return None
    try:
        with open(env_path, 'r', encoding='utf-8') as f:
            for line in f:
                line = line.strip()
                if line.startswith('#'):
                    continue
                if line.startswith(f'{name}='):
                    return line.split('=', 1)[1].strip()
    except Exception as e:
        logger.error(f"Ошибка при чтении .env файла: {e}")
    return None


def load_setting(name: str, default: Optional[str] = None,
                 env_path: Optional[str] = None) -> Optional[str]:
    """
    Загружает настройку из переменных окружения или .env файла

    Args:
        name: Имя переменной окружения
        default: Значение по умолчанию (если None, берется из DEFAULTS)
        env_path: Путь к .env файлу (по умолчанию рядом с модулем)

    Returns:
        Строковое значение настройки или default
    """
    # Сначала проверяем переменные окружения
    value = os.environ.get(name)
    if value:
        return value

    # Затем пробуем загрузить из .env файла
    if env_path is None:
        env_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), '.env')
    value = _read_env_file(name, env_path)
    if value:
        return value

    return default if default is not None else DEFAULTS.get(name)


def load_int_setting(name: str, default: Optional[int] = None,
                     env_path: Optional[str] = None) -> int:
    """Целочисленная настройка; некорректное значение заменяется на значение по умолчанию"""
    fallback = default if default is not None else int(DEFAULTS[name])
    raw = load_setting(name, str(fallback), env_path)
    try:
        return int(raw)
    except (TypeError, ValueError):
        logger.warning(f"Некорректное значение {name}={raw!r}, используется {fallback}")
        return fallback


def load_float_setting(name: str, default: Optional[float] = None,
                       env_path: Optional[str] = None) -> float:
    """Вещественная настройка (таймауты в секундах)"""
    fallback = default if default is not None else float(DEFAULTS[name])
    raw = load_setting(name, str(fallback), env_path)
    try:
        return float(raw)
    except (TypeError, ValueError):
        logger.warning(f"Некорректное значение {name}={raw!r}, используется {fallback}")
        return fallback
