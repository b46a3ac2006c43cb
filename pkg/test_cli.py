#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты командной строки: коды выхода, JSON-вывод и файлы результатов
"""

import json
import os
import sys

import pandas as pd
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from extremal_cli import (
    EXIT_CHECK_FAILED, EXIT_INEXACT, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, main,
)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('EXTREMAL_OUTPUT_DIR', str(tmp_path / 'results'))
    return tmp_path


def _run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_classify_json(workdir, capsys):
    code, doc = _run_json(capsys, ['classify', '--n', '17', '--k', '4', '--json'])
    assert code == EXIT_OK
    assert doc['regime'] == 'GreyZone'
    assert doc['n'] == 17


def test_classify_text(workdir, capsys):
    assert main(['classify', '--n', '7', '--k', '3']) == EXIT_OK
    assert 'ConstructionBeats' in capsys.readouterr().out


def test_table_json_row_for_k4(workdir, capsys):
    code, doc = _run_json(capsys, ['table', '--k-min', '4', '--k-max', '4', '--json'])
    assert code == EXIT_OK
    row = doc['rows'][0]
    assert (row['grey_from'], row['grey_to']) == (17, 21)
    assert row['min_holds_n'] == 22


def test_table_range_is_checked(workdir):
    assert main(['table', '--k-min', '2', '--k-max', '4']) == EXIT_USAGE
    assert main(['table', '--k-min', '5', '--k-max', '4']) == EXIT_USAGE
    assert main(['table', '--k-min', '3', '--k-max', '13']) == EXIT_USAGE


def test_table_excel_export(workdir):
    path = str(workdir / 'out' / 'regimes.xlsx')
    assert main(['table', '--k-min', '3', '--k-max', '4', '--excel', path]) == EXIT_OK
    df = pd.read_excel(path, sheet_name='Режимы')
    assert list(df['k']) == [3, 4]


def test_bounds_json(workdir, capsys):
    code, doc = _run_json(capsys, ['bounds', '--n', '7', '--k', '3', '--json'])
    assert code == EXIT_OK
    assert doc['ekr'] == '15'
    assert doc['hm'] == '13'


def test_ineq_json(workdir, capsys):
    code, doc = _run_json(capsys, ['ineq', '--k', '7', '--which', 'eq_5_12', '--cap', '20', '--json'])
    assert code == EXIT_OK
    assert doc['n'] is None
    assert doc['cap'] == 20


def test_construct_then_verify(workdir, capsys):
    code, doc = _run_json(capsys, ['construct', 'prop22', '--n', '11', '--k', '4', '--json'])
    assert code == EXIT_OK
    assert doc['sizes'] == [60, 61]
    path = doc['file']
    assert path == os.path.join(str(workdir / 'results'), 'prop22_n11_k4.json')
    assert os.path.exists(path)

    code, report = _run_json(capsys, ['verify', '--file', path, '--json'])
    assert code == EXIT_OK
    assert report['passed']
    checks = {r['check'] for r in report['results']}
    assert 'sizes' not in checks and 'cross' in checks

    assert main(['verify', '--file', path, '--expect', '60', '61']) == EXIT_OK
    assert main(['verify', '--file', path, '--expect', '61', '61']) == EXIT_CHECK_FAILED


def test_verify_reports_disjoint_witness(workdir, capsys):
    path = workdir / 'pair.json'
    path.write_text(json.dumps({'n': 6, 'k': 3, 'A': [[1, 2, 3]], 'B': [[4, 5, 6]]}), encoding='utf-8')
    code, report = _run_json(capsys, ['verify', '--file', str(path), '--check', 'cross', '--json'])
    assert code == EXIT_CHECK_FAILED
    assert report['results'][0]['witness'] == [[1, 2, 3], [4, 5, 6]]


def test_verify_missing_file(workdir):
    assert main(['verify', '--file', str(workdir / 'nope.json')]) == EXIT_PRECONDITION


def test_verify_file_that_is_not_utf8(workdir):
    bad = workdir / 'bad.json'
    bad.write_bytes(b'{"n": 6, "k": 3, "A": [], "B": [], "meta": {"note": "\xff"}}')
    assert main(['verify', '--file', str(bad)]) == EXIT_PRECONDITION


def test_search_json(workdir, capsys):
    code, doc = _run_json(capsys, ['search', '--n', '5', '--k', '2', '--json'])
    assert code == EXIT_OK
    assert doc['value'] == '2'
    assert os.path.exists(workdir / 'results' / 'search_n5_k2_disjoint.json')
    path = str(workdir / 'results' / 'search_n5_k2_disjoint.json')
    code, report = _run_json(capsys, ['verify', '--file', path, '--json'])
    assert code == EXIT_OK
    assert {r['check'] for r in report['results']} == {'cross', 'disjoint'}


def test_search_exhaustive_star_free(workdir, capsys):
    code, doc = _run_json(capsys, ['search', '--n', '5', '--k', '2', '--star-free', '--allow-overlap',
                                   '--exhaustive', '--json'])
    assert code == EXIT_OK
    assert doc['value'] == '3'
    assert doc['method'] == 'exhaustive'


def test_search_budget_gives_interval(workdir, capsys):
    code, doc = _run_json(capsys, ['search', '--n', '7', '--k', '3', '--node-limit', '10', '--json'])
    assert code == EXIT_INEXACT
    assert doc['interval'] == ['9', '15']


def test_lex_json(workdir, capsys):
    code, doc = _run_json(capsys, ['lex', '--n', '7', '--t', '3', '--m', '15', '--json'])
    assert code == EXIT_OK
    assert doc['last'] == [1, 6, 7]
    assert doc['next'] == [2, 3, 4]


def test_shadow_of_segment(workdir, capsys):
    code, doc = _run_json(capsys, ['shadow', '--n', '4', '--k', '2', '--m', '3', '--l', '1', '--json'])
    assert code == EXIT_OK
    assert doc['shadow_size'] == 4


def test_bad_arguments(workdir):
    assert main(['classify', '--n', 'x', '--k', '3']) == EXIT_USAGE
    assert main(['nope']) == EXIT_USAGE
    assert main(['classify', '--n', '7', '--k', '0']) == EXIT_USAGE
    assert main(['classify', '--n', '-3', '--k', '2']) == EXIT_USAGE


def test_precondition_exit_codes(workdir):
    assert main(['construct', 'prop55', '--n', '30', '--k', '4']) == EXIT_PRECONDITION
    assert main(['bounds', '--n', '6', '--k', '3']) == EXIT_PRECONDITION
    assert main(['shadow', '--l', '1']) == EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
