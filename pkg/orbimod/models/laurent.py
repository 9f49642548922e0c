from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import sympy

T = sympy.Symbol('t')


def _poly(coeffs: Tuple[int, ...]) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)) or [0], T, domain='ZZ')


def _coeffs(poly: sympy.Poly) -> Tuple[int, ...]:
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _merge(terms: Iterable[Tuple[str, int, int]]) -> Tuple[Tuple[str, int, int], ...]:
    merged: Dict[Tuple[str, int], int] = {}
    for label, shift, multiplicity in terms:
        merged[(label, shift)] = merged.get((label, shift), 0) + multiplicity
    return tuple(sorted((label, shift, mult) for (label, shift), mult in merged.items() if mult))


@dataclass(frozen=True)
class LaurentPoly:
    """Integer polynomial in t plus named placeholder terms multiplicity * t^shift * P(label)"""

    coeffs: Tuple[int, ...] = ()
    symbolic: Tuple[Tuple[str, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _coeffs(_poly(tuple(int(c) for c in self.coeffs))))
        object.__setattr__(self, 'symbolic', _merge(self.symbolic))

    @classmethod
    def projective(cls, r: int) -> 'LaurentPoly':
        """Poincare polynomial of CP^r, the r-th symmetric power of the sphere"""
        return cls(tuple(1 if k % 2 == 0 else 0 for k in range(2 * r + 1)))

    @classmethod
    def constant(cls, value: int) -> 'LaurentPoly':
        return cls((value,))

    @classmethod
    def placeholder(cls, label: str) -> 'LaurentPoly':
        return cls((), ((label, 0, 1),))

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return LaurentPoly(_coeffs(_poly(self.coeffs) + _poly(other.coeffs)), self.symbolic + other.symbolic)

    def shift(self, power: int) -> 'LaurentPoly':
        """Multiply by t^power"""
        moved = _poly(self.coeffs) * sympy.Poly(T ** power, T, domain='ZZ')
        return LaurentPoly(_coeffs(moved), tuple((label, s + power, m) for label, s, m in self.symbolic))

    def scale(self, factor: int) -> 'LaurentPoly':
        return LaurentPoly(
            _coeffs(_poly(self.coeffs) * factor), tuple((label, s, m * factor) for label, s, m in self.symbolic)
        )

    @property
    def is_concrete(self) -> bool:
        return not self.symbolic

    def total(self) -> Optional[int]:
        """Value at t = 1 (total Betti number), None while placeholders remain"""
        if self.symbolic:
            return None
        return int(_poly(self.coeffs).eval(1))

    def as_expr(self) -> sympy.Expr:
        expr = _poly(self.coeffs).as_expr()
        for label, shift, mult in self.symbolic:
            expr += mult * T ** shift * sympy.Symbol(label)
        return expr

    def to_dict(self) -> Dict:
        return {
            'coeffs': list(self.coeffs),
            'symbolic': [{'label': label, 'shift': shift, 'multiplicity': mult} for label, shift, mult in self.symbolic],
        }

    def __str__(self):
        return str(self.as_expr())
