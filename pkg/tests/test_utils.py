import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from exactmath import cyclotomic_poly
from relations import parse_relation
from report import Report
from utils import (
    format_error,
    format_linear,
    format_obstruction,
    format_poly,
    format_rational,
    format_solved_form,
    parse_points,
    render_text,
)


def test_format_rational():
    assert format_rational(Fraction(3, 1)) == '3'
    assert format_rational(Fraction(-1, 4)) == '-1/4'
    assert format_rational(0) == '0'


def test_format_poly():
    assert format_poly(cyclotomic_poly(60).coeffs) == 'x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1'
    assert format_poly([Fraction(-1, 3), 0], var='zeta') == '-1/3'
    assert format_poly([0, -2, 1], var='zeta') == 'zeta^2 - 2*zeta'
    assert format_poly([]) == '0'


def test_format_linear():
    assert format_linear({'m_2_59': 2, 'm_3_58': -1, 'x': 0, 'n': 8}) == '2*m_2_59 - m_3_58 + 8*n'
    assert format_linear({}) == '0'


def test_solved_form_reads_back():
    text = format_solved_form('m_1', Fraction(4), Fraction(-1), {'m_2': Fraction(-2), 'n': Fraction(-8)})
    assert text == '4*m_1 = -1 + 2*m_2 + 8*n'
    rel = parse_relation(text)
    assert rel.coefficients == {'m_1': 4, 'm_2': -2, 'n': -8}
    assert rel.constant == -1


def test_solved_form_without_constant():
    assert format_solved_form('u', Fraction(1), Fraction(0), {'v': Fraction(2)}) == 'u = -2*v'
    assert format_solved_form('u', Fraction(3), Fraction(0), {}) == '3*u = 0'


def test_parse_points():
    assert parse_points('1,1:8') == [(1, 1, 8)]
    assert parse_points(' 4,1:1 ; 2,3:2 ') == [(1, 4, 1), (2, 3, 2)]
    assert parse_points('') == []


@pytest.mark.parametrize('text', ['1,1', '1:8', 'a,b:1', '1,2:-1', '1,2,3:1'])
def test_parse_points_rejects(text):
    with pytest.raises(ValueError):
        parse_points(text)


def test_render_text():
    lines = render_text({'rows': [{'phi': 1, 'orders': [2]}], 'curve': None, 'ok': True})
    assert lines == ['rows:', '  - phi: 1', '    orders: [2]', 'curve: -', 'ok: true']


def test_format_obstruction():
    assert format_obstruction(2, 1, {'m_1': 1, 'n': -3}) == (
        '2*(m_1 - 3*n) = 1: the left side is even for integer unknowns but 1 is odd'
    )
    assert format_obstruction(3, 2, {'u': 1}).endswith('a multiple of 3 for integer unknowns but 2 is not')


def test_format_error():
    assert format_error('bad input') == 'Error: bad input'
    assert format_error('bad input', {'order': 1}) == 'Error: bad input (order: 1)'


def test_report_render():
    report = Report(command='orders --max-phi 1', result={'rows': [{'phi': 1, 'orders': [2]}]}, format='json')
    assert json.loads(report.render()) == {
        'command': 'orders --max-phi 1',
        'result': {'rows': [{'phi': 1, 'orders': [2]}]},
    }
    text = Report(command='orders', result={'max_phi': 1}).render()
    assert text == 'command: orders\nmax_phi: 1'
    with pytest.raises(ValidationError):
        Report(command='orders', result={}, format='yaml')
