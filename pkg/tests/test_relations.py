from fractions import Fraction

import pytest

import config
from relations import load_relations, parse_relation


def test_parse_relation():
    rel = parse_relation('4*m_1 = -1 + 2*m_2 + 8*n')
    assert rel.coefficients == {'m_1': 4, 'm_2': -2, 'n': -8}
    assert rel.constant == Fraction(-1)
    assert rel.lead == 'm_1'


def test_parse_canonical_labels_and_constants_on_both_sides():
    rel = parse_relation('2*m_3_58 - n + 1 = 5 - m_2_59')
    assert rel.coefficients == {'m_3_58': 2, 'n': -1, 'm_2_59': 1}
    assert rel.constant == Fraction(4)
    assert rel.lead == 'm_3_58'


def test_parse_leading_sign_and_whitespace():
    rel = parse_relation('  -m_4 +3 * m_5=0 ')
    assert rel.coefficients == {'m_4': -1, 'm_5': 3}
    assert rel.constant == 0


@pytest.mark.parametrize('line', [
    '= 3',
    '1 = 2',
    'm_1 = 2 = 3',
    'm_1 + 2',
    '3*x = 1',
    '2*m_1 = 1 +',
    'm_1 = 1.5',
])
def test_malformed_relations(line):
    with pytest.raises(ValueError):
        parse_relation(line)


def test_load_skips_comments(tmp_path):
    path = tmp_path / 'rels.txt'
    path.write_text('# header\n\n2*m_1 = 1\n  # indented comment\nm_2 = n\n', encoding='utf-8')
    relations = load_relations(path)
    assert [rel.lead for rel in relations] == ['m_1', 'm_2']


def test_load_reports_line_number(tmp_path):
    path = tmp_path / 'rels.txt'
    path.write_text('2*m_1 = 1\nnot a relation\n', encoding='utf-8')
    with pytest.raises(ValueError, match=r'rels\.txt:2:'):
        load_relations(path)


def test_missing_file(tmp_path):
    with pytest.raises(ValueError, match='cannot read relations file'):
        load_relations(tmp_path / 'missing.txt')


def test_default_path_follows_config(tmp_path, monkeypatch):
    path = tmp_path / 'override.txt'
    path.write_text('m_1 = 0\n', encoding='utf-8')
    monkeypatch.setattr(config, 'RELATIONS_PATH', path)
    assert len(load_relations()) == 1


def test_bundled_relations():
    relations = load_relations(config.DEFAULT_RELATIONS_PATH)
    assert len(relations) == 8
    assert [rel.lead for rel in relations] == ['m_1'] + [f"m_{j}" for j in range(10, 17)]
