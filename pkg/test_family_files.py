#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты формата файлов пар
"""

import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from family_files import FamilyFileError, big, pair_from_document, pair_to_document, read_pair, write_pair
from kset_core import Family, FamilyPair, GroundSet


def _pair() -> FamilyPair:
    g = GroundSet(7, 3)
    return FamilyPair(Family.from_sets(g, [[1, 2, 3], [1, 4, 5]]), Family.from_sets(g, [[1, 2, 6]]))


def test_document_layout():
    doc = pair_to_document(_pair(), {'construction': 'demo'})
    assert doc['n'] == 7 and doc['k'] == 3
    assert doc['A'] == [[1, 2, 3], [1, 4, 5]]
    assert doc['B'] == [[1, 2, 6]]
    assert 'k_A' not in doc
    assert doc['meta'] == {'construction': 'demo'}


def test_mixed_uniformity_document():
    p = FamilyPair(Family.from_sets(GroundSet(6, 2), [[1, 2]]), Family.from_sets(GroundSet(6, 3), [[1, 3, 4]]))
    doc = pair_to_document(p)
    assert (doc['k_A'], doc['k_B']) == (2, 3)
    assert pair_from_document(doc) == p


def test_write_then_read(tmp_path):
    path = str(tmp_path / 'out' / 'pair.json')
    write_pair(path, _pair(), {'min_size': big(10 ** 30)})
    pair, meta = read_pair(path)
    assert pair == _pair()
    assert meta['min_size'] == '1000000000000000000000000000000'


@pytest.mark.parametrize('member', [[3, 2, 1], [1, 2], [0, 1, 2], [1, 2, 8], [1, 2, "3"]])
def test_rejects_malformed_members(tmp_path, member):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'n': 7, 'k': 3, 'A': [member], 'B': []}), encoding='utf-8')
    with pytest.raises(FamilyFileError) as info:
        read_pair(str(path))
    assert info.value.path == str(path)


def test_rejects_missing_and_broken_files(tmp_path):
    with pytest.raises(FamilyFileError):
        read_pair(str(tmp_path / 'missing.json'))
    broken = tmp_path / 'broken.json'
    broken.write_text('{"n": 7,', encoding='utf-8')
    with pytest.raises(FamilyFileError):
        read_pair(str(broken))
    with pytest.raises(FamilyFileError):
        pair_from_document({'n': 7, 'A': [], 'B': []})


def test_rejects_file_that_is_not_utf8(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_bytes(b'{"n": 7, "k": 3, "A": [], "B": [], "meta": {"note": "\xff"}}')
    with pytest.raises(FamilyFileError) as info:
        read_pair(str(bad))
    assert info.value.path == str(bad)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
