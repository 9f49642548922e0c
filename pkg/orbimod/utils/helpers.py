import re
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Union

import pandas as pd

RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')


def format_rational(value: Union[int, Fraction]) -> str:
    """Format an exact rational as "p/q" in lowest terms, "p" when integral"""
    return str(Fraction(value))


def parse_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Parse an integer or a "p/q" string into an exact rational"""
    if isinstance(value, bool):
        raise ValueError("Value must be an integer or a \"p/q\" string")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_PATTERN.match(value)
        if match:
            numerator, denominator = match.groups()
            if denominator is not None and int(denominator) == 0:
                raise ValueError("Denominator must be non-zero")
            return Fraction(int(numerator), int(denominator or 1))
    raise ValueError("Value must be an integer or a \"p/q\" string")


def format_sign(eps: int) -> str:
    """Render one isotropy-vector entry as +, - or 0"""
    return {1: '+', -1: '-', 0: '0'}[eps]


def format_signs(eps: Sequence[int]) -> str:
    return ''.join(format_sign(e) for e in eps)


def flatten_field_errors(messages, prefix: str = '') -> Dict[str, List[str]]:
    """Flatten nested marshmallow error messages into field paths like cone_points[0].alpha"""
    flat: Dict[str, List[str]] = {}
    if isinstance(messages, list):
        if all(isinstance(item, str) for item in messages):
            flat[prefix or '_schema'] = list(messages)
            return flat
        for index, item in enumerate(messages):
            flat.update(flatten_field_errors(item, f"{prefix}[{index}]"))
        return flat
    if isinstance(messages, dict):
        for key, value in messages.items():
            if isinstance(key, int):
                path = f"{prefix}[{key}]"
            elif key == '_schema' and prefix:
                path = prefix
            else:
                path = f"{prefix}.{key}" if prefix else str(key)
            flat.update(flatten_field_errors(value, path))
        return flat
    flat[prefix or '_schema'] = [str(messages)]
    return flat


def render_table(rows: Sequence[Mapping]) -> str:
    """Render a list of flat records as an aligned text table"""
    if not rows:
        return '  (none)'
    frame = pd.DataFrame([{key: _cell(value) for key, value in row.items()} for row in rows])
    return frame.to_string(index=False)


def render_text(report: Mapping, title: Optional[str] = None) -> str:
    """Render a report dictionary as human-readable text mirroring the JSON"""
    lines: List[str] = []
    if title:
        lines.append(f"== {title} ==")
    _render_mapping(report, lines, indent='')
    return '\n'.join(lines)


def _render_mapping(report: Mapping, lines: List[str], indent: str) -> None:
    for key in sorted(report):
        value = report[key]
        if isinstance(value, Mapping):
            lines.append(f"{indent}{key}:")
            _render_mapping(value, lines, indent + '  ')
        elif isinstance(value, list) and value and all(isinstance(item, Mapping) for item in value):
            lines.append(f"{indent}{key}:")
            for table_line in render_table(value).splitlines():
                lines.append(f"{indent}  {table_line}")
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")


def _cell(value) -> str:
    if isinstance(value, list):
        return '[' + ', '.join(_cell(item) for item in value) + ']'
    if isinstance(value, Mapping):
        return '{' + ', '.join(f"{k}: {_cell(v)}" for k, v in sorted(value.items())) + '}'
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)
