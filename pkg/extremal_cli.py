#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Командная строка: классификация режимов, таблицы порогов, конструкции,
проверка файлов пар, точный поиск и утилиты лексикографических отрезков.

Коды выхода: 0 - успех, 1 - проверка не пройдена, 2 - ошибка аргументов,
3 - нарушены предусловия, 4 - результат поиска не точный (интервал),
5 - нарушен внутренний инвариант.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

import pandas as pd

from constructions import CONSTRUCTIONS, Check, build_construction, construction_document, verify_pair
from env_settings import load_float_setting, load_int_setting, load_setting
from family_files import FamilyFileError, read_pair, write_pair
from kruskal_katona import LexSegment, describe_segment, lex_segment, shadow
from kset_core import InvariantViolation, PreconditionError
from oracle_search import Budget, SearchMode, SearchOutcome, exact_maxmin, exhaustive_labelings
from regimes import Inequality, bounds, classify, ineq_crossover, regime_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INEXACT = 4
EXIT_INVARIANT = 5

TABLE_K_CAP = 12
DEFAULT_VERIFY_CHECKS = (Check.DISJOINT, Check.CROSS, Check.PYBER)


def setup_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler('extremal_sets.log', encoding='utf-8'),
            logging.StreamHandler(sys.stderr),
        ],
    )


def _positive_int(value: str) -> int:
    """Тип argparse: целое >= 1"""
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"ожидается целое >= 1, получено {value}")
    return number


def _emit_json(doc: Dict[str, Any]):
    print(json.dumps(doc, ensure_ascii=False, indent=2))


def _output_dir() -> str:
    return load_setting('EXTREMAL_OUTPUT_DIR')


def _adjust_column_widths(writer):
    """
    Автоматически настраивает ширину столбцов для всех листов в Excel файле

    Args:
        writer: ExcelWriter объект
    """
    try:
        for sheet_name in writer.sheets:
            worksheet = writer.sheets[sheet_name]
            for column in worksheet.columns:
                max_length = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
                # Минимум 10 символов, максимум 40, плюс запас 3 символа
                worksheet.column_dimensions[column[0].column_letter].width = max(10, min(max_length + 3, 40))
            logger.info(f"Настроена ширина столбцов для листа '{sheet_name}'")
    except Exception as e:
        logger.warning(f"Ошибка при настройке ширины столбцов: {e}")


def export_table_excel(df: pd.DataFrame, excel_path: str) -> str:
    """Записывает таблицу режимов в Excel"""
    directory = os.path.dirname(os.path.abspath(excel_path))
    if not os.path.exists(directory):
        os.makedirs(directory)
        logger.info(f"Создана папка для результатов: {directory}")
    with pd.ExcelWriter(excel_path, engine='openpyxl') as writer:
        df.to_excel(writer, sheet_name='Режимы', index=False)
        _adjust_column_widths(writer)
    logger.info(f"Таблица режимов записана: {excel_path}")
    return excel_path


# ---------------------------------------------------------------------------
# Команды
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    report = classify(args.n, args.k)
    if args.json:
        _emit_json(report.to_document())
        return EXIT_OK
    print("=" * 60)
    print(f"📐 (n={args.n}, k={args.k}): {report.regime.value}")
    print("=" * 60)
    print(f"   C(n-k-1,k-1) = {report.c_nk1}")
    print(f"   C(n-k,k-1)   = {report.c_nk}")
    print(f"   C(n-1,k-1)   = {report.c_n1}")
    print(f"   гипотеза: {'✅' if report.conjecture_ok else '-'}   конструкция: {'✅' if report.construction_ok else '-'}   "
          f"строгая оценка: {'✅' if report.strict_grey else '-'}")
    print(f"   ≈ ck²-2ck+1 = {report.approx_lower:.3f}, ≈ ck²+(2-c)k = {report.approx_upper:.3f}")
    return EXIT_OK


def cmd_table(args) -> int:
    df = regime_table(args.k_min, args.k_max, args.n_max)
    if args.excel:
        export_table_excel(df, args.excel)
    if args.json:
        _emit_json({'rows': json.loads(df.to_json(orient='records'))})
        return EXIT_OK
    print("=" * 60)
    print(f"📊 Границы режимов для k = {args.k_min}..{args.k_max}")
    print("=" * 60)
    print(df.to_string(index=False))
    return EXIT_OK if int(df['violations'].sum()) == 0 else EXIT_INVARIANT


def cmd_bounds(args) -> int:
    b = bounds(args.n, args.k)
    if args.json:
        _emit_json(b.to_document())
        return EXIT_OK
    print("=" * 60)
    print(f"📏 Границы для (n={args.n}, k={args.k})")
    print("=" * 60)
    for name, value in b.to_document().items():
        if name not in ('n', 'k'):
            print(f"   {name:<18} {value}")
    return EXIT_OK


def cmd_ineq(args) -> int:
    result = ineq_crossover(args.k, Inequality(args.which), args.cap)
    if args.json:
        _emit_json(result.to_document())
    else:
        status = f"n = {result.n}" if result.n is not None else f"не найден до n = {result.cap}"
        print(f"🔎 {result.which.value} при k={result.k} ({result.seeking}): {status}")
    return EXIT_OK


def cmd_construct(args) -> int:
    pair, report = build_construction(args.name, args.n, args.k)
    path = args.out or os.path.join(_output_dir(), f"{args.name}_n{args.n}_k{args.k}.json")
    doc = construction_document(args.name, pair, report)
    write_pair(path, pair, doc['meta'])
    if args.json:
        _emit_json({'file': path, 'sizes': list(pair.sizes), 'verification': report.to_document()})
    else:
        print(f"✅ {args.name} (n={args.n}, k={args.k}): |A|={pair.a.size}, |B|={pair.b.size} → {path}")
    return EXIT_OK


def _default_checks(meta: Dict[str, Any]) -> List[str]:
    """Проверки по умолчанию: по конструкции или режиму поиска из метаданных файла"""
    name = meta.get('construction')
    if name in CONSTRUCTIONS:
        return [c.value for c in CONSTRUCTIONS[name].checks if c is not Check.SIZES]
    if isinstance(meta.get('mode'), dict):
        mode = SearchMode(star_free=bool(meta['mode'].get('star_free')),
                          allow_overlap=bool(meta['mode'].get('allow_overlap')))
        return [c.value for c in mode.checks]
    return [c.value for c in DEFAULT_VERIFY_CHECKS]


def cmd_verify(args) -> int:
    pair, meta = read_pair(args.file)
    checks = args.check or _default_checks(meta)
    if args.expect and Check.SIZES.value not in checks:
        checks.append(Check.SIZES.value)
    report = verify_pair(pair, checks, tuple(args.expect) if args.expect else None)
    if args.json:
        _emit_json(report.to_document())
    else:
        print("=" * 60)
        print(f"🔍 {args.file}: |A|={pair.a.size}, |B|={pair.b.size}")
        print("=" * 60)
        for r in report.results:
            mark = '✅' if r.passed else '❌'
            if not r.applicable:
                mark = '➖'
            print(f"   {mark} {r.check.value:<13} {r.detail}")
            if not r.passed and r.witness:
                print(f"      свидетель: {r.witness}")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _print_outcome(outcome: SearchOutcome):
    print("=" * 60)
    print(f"🧮 (n={outcome.n}, k={outcome.k}), режим {outcome.mode}, метод {outcome.method}")
    print("=" * 60)
    if outcome.exact:
        print(f"   ✅ значение: {outcome.value}")
    else:
        print(f"   ⏳ интервал: [{outcome.lower}, {outcome.upper}]")
    print(f"   нижняя граница: {outcome.lower_source}, верхняя: {outcome.upper_source or '-'}")
    print(f"   узлов: {outcome.stats.nodes}, состояний: {outcome.stats.states}, "
          f"время: {outcome.stats.elapsed:.2f} с")


def cmd_search(args) -> int:
    if args.exhaustive:
        outcome = exhaustive_labelings(args.n, args.k, star_free=args.star_free,
                                       allow_overlap=args.allow_overlap)
    else:
        budget = Budget(
            timeout=args.timeout if args.timeout is not None else load_float_setting('EXTREMAL_SEARCH_TIMEOUT'),
            node_limit=args.node_limit if args.node_limit is not None else load_int_setting('EXTREMAL_NODE_LIMIT'),
        )
        workers = args.workers if args.workers is not None else load_int_setting('EXTREMAL_WORKERS')
        outcome = exact_maxmin(args.n, args.k, star_free=args.star_free, allow_overlap=args.allow_overlap,
                               budget=budget, workers=workers, fix_symmetry=not args.no_symmetry)
    if outcome.certificate is not None:
        mode = str(outcome.mode).replace('+', '_')
        path = args.out or os.path.join(_output_dir(), f"search_n{args.n}_k{args.k}_{mode}.json")
        write_pair(path, outcome.certificate, {
            'search': outcome.method,
            'lower': str(outcome.lower),
            'upper': str(outcome.upper),
            'mode': {'star_free': outcome.mode.star_free, 'allow_overlap': outcome.mode.allow_overlap},
        })
    if args.json:
        _emit_json(outcome.to_document())
    else:
        _print_outcome(outcome)
    return EXIT_OK if outcome.exact else EXIT_INEXACT


def cmd_lex(args) -> int:
    seg = LexSegment(args.n, args.t, args.m)
    if args.json:
        doc = {'n': seg.n, 't': seg.t, 'm': seg.m}
        if seg.m:
            doc['last'] = list(seg.last())
        if args.list:
            doc['sets'] = [list(s) for s in seg.sets()]
        try:
            doc['next'] = list(seg.next_set())
        except PreconditionError:
            doc['next'] = None
        _emit_json(doc)
        return EXIT_OK
    print(describe_segment(seg))
    if args.list:
        for s in seg.sets():
            print("  {" + ",".join(str(x) for x in s) + "}")
    return EXIT_OK


def cmd_shadow(args) -> int:
    if args.file:
        pair, _ = read_pair(args.file)
        family = pair.b if args.side == 'B' else pair.a
        source = f"{args.file}:{args.side}"
    else:
        if args.n is None or args.k is None or args.m is None:
            raise PreconditionError("Нужен --file или тройка --n --k --m")
        family = lex_segment(args.n, args.k, args.m)
        source = f"L({args.n},{args.k},{args.m})"
    result = shadow(family, args.l)
    if args.json:
        _emit_json({'source': source, 'size': family.size, 'l': args.l, 'shadow_size': result.size,
                    'shadow': [list(s) for s in result.sets()] if args.list else None})
    else:
        print(f"σ^({args.l})({source}): |F| = {family.size}, |тень| = {result.size}")
        if args.list:
            for s in result.sets():
                print("  {" + ",".join(str(x) for x in s) + "}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Разбор аргументов
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='extremal_cli',
        description='Пересекающиеся пары семейств: режимы, конструкции, точный поиск')
    parser.add_argument('--log-level', default=None, help='Уровень логирования (по умолчанию EXTREMAL_LOG_LEVEL)')
    sub = parser.add_subparsers(dest='command', required=True)

    def with_json(p):
        p.add_argument('--json', action='store_true', help='Структурированный вывод в stdout')
        return p

    p = with_json(sub.add_parser('classify', help='Режим для (n,k)'))
    p.add_argument('--n', type=_positive_int, required=True)
    p.add_argument('--k', type=_positive_int, required=True)
    p.set_defaults(func=cmd_classify)

    p = with_json(sub.add_parser('table', help='Точные границы режимов по k'))
    p.add_argument('--k-min', type=int, required=True)
    p.add_argument('--k-max', type=int, required=True)
    p.add_argument('--n-max', type=int, default=None, help='По умолчанию 4k^3')
    p.add_argument('--k-cap', type=int, default=TABLE_K_CAP, help='Предел для k-max')
    p.add_argument('--excel', default=None, help='Путь к .xlsx для экспорта')
    p.set_defaults(func=cmd_table)

    p = with_json(sub.add_parser('bounds', help='Все границы для (n,k)'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = with_json(sub.add_parser('ineq', help='Точка перехода неравенства при фиксированном k'))
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--which', choices=[i.value for i in Inequality], required=True)
    p.add_argument('--cap', type=int, default=None)
    p.set_defaults(func=cmd_ineq)

    p = with_json(sub.add_parser('construct', help='Построить и записать конструкцию'))
    p.add_argument('name', choices=list(CONSTRUCTIONS))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_construct)

    p = with_json(sub.add_parser('verify', help='Проверить файл пары'))
    p.add_argument('--file', required=True)
    p.add_argument('--check', action='append', choices=[c.value for c in Check], default=None)
    p.add_argument('--expect', type=int, nargs=2, metavar=('SIZE_A', 'SIZE_B'), default=None)
    p.set_defaults(func=cmd_verify)

    p = with_json(sub.add_parser('search', help='Точное значение f(n,k) или f*(n,k)'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--star-free', action='store_true')
    p.add_argument('--allow-overlap', action='store_true')
    p.add_argument('--timeout', type=float, default=None)
    p.add_argument('--node-limit', type=int, default=None)
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--no-symmetry', action='store_true')
    p.add_argument('--exhaustive', action='store_true', help='Полный перебор вместо ветвей и границ')
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_search)

    p = with_json(sub.add_parser('lex', help='Начальный лексикографический отрезок L(n,t,m)'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--t', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--list', action='store_true')
    p.set_defaults(func=cmd_lex)

    p = with_json(sub.add_parser('shadow', help='l-тень отрезка или семейства из файла'))
    p.add_argument('--l', type=int, required=True)
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--m', type=int, default=None)
    p.add_argument('--file', default=None)
    p.add_argument('--side', choices=['A', 'B'], default='A')
    p.add_argument('--list', action='store_true')
    p.set_defaults(func=cmd_shadow)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Основная функция"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_USAGE
    if args.command == 'table' and not (3 <= args.k_min <= args.k_max <= args.k_cap):
        print(f"❌ Требуется 3 <= k-min <= k-max <= {args.k_cap}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(args.log_level or load_setting('EXTREMAL_LOG_LEVEL'))
    try:
        return args.func(args)
    except (PreconditionError, FamilyFileError) as e:
        logger.error(f"Предусловие нарушено: {e}")
        return EXIT_PRECONDITION
    except InvariantViolation as e:
        logger.error(f"Нарушен внутренний инвариант: {e}")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
