from fractions import Fraction

import pytest

from orbimod.utils.helpers import flatten_field_errors, format_rational, parse_rational, render_text


@pytest.mark.parametrize(('text', 'expected'), [
    ('5/2', Fraction(5, 2)),
    ('-3', Fraction(-3)),
    ('4/6', Fraction(2, 3)),
    (7, Fraction(7)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize('bad', ['1/0', 'x', '1.5', True, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational_lowest_terms():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(4, 2)) == '2'


def test_flatten_field_errors_paths():
    messages = {'cone_points': {0: {'alpha': ['Must be at least 2.']}}, 'l': ['Missing data for required field.']}
    flat = flatten_field_errors(messages)
    assert flat == {
        'cone_points[0].alpha': ['Must be at least 2.'],
        'l': ['Missing data for required field.'],
    }


def test_render_text_tables_records():
    text = render_text({'strata': [{'m': 0, 'index': 2}], 'hyperbolic': True}, title='strata')
    lines = text.splitlines()
    assert lines[0] == '== strata =='
    assert 'hyperbolic: true' in lines
    assert any('index' in line and 'm' in line for line in lines)
