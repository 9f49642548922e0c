from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from orbimod.errors import InvalidBundleError
from orbimod.models.surface import OrbifoldSurface

# Marked points are labelled by their 1-based index, ordinary points by a name.
PointLabel = Union[int, str]


def _label_key(label: PointLabel):
    return (0, label, '') if isinstance(label, int) else (1, 0, label)


@dataclass(frozen=True)
class Divisor:
    """Finite combination sum n_p p/alpha_p, alpha_p = 1 off the marked set"""

    surface: OrbifoldSurface
    entries: Tuple[Tuple[PointLabel, int], ...]

    def __post_init__(self):
        totals: Counter = Counter()
        for label, coefficient in self.entries:
            self._check_label(label)
            totals[label] += coefficient
        canonical = tuple(
            sorted(((label, n) for label, n in totals.items() if n != 0), key=lambda e: _label_key(e[0]))
        )
        object.__setattr__(self, 'entries', canonical)

    def _check_label(self, label: PointLabel) -> None:
        if isinstance(label, bool):
            raise InvalidBundleError(f"invalid point label {label!r}")
        if isinstance(label, int):
            if not 1 <= label <= self.surface.n:
                raise InvalidBundleError(
                    f"marked point index {label} out of range 1..{self.surface.n}",
                    citation="divisor supported on points of the orbifold",
                )
        elif not isinstance(label, str) or not label:
            raise InvalidBundleError(f"invalid point label {label!r}")

    @classmethod
    def from_mapping(cls, surface: OrbifoldSurface, coefficients: Mapping[PointLabel, int]) -> 'Divisor':
        return cls(surface, tuple(coefficients.items()))

    def alpha_of(self, label: PointLabel) -> int:
        return self.surface.alpha(label) if isinstance(label, int) else 1

    @property
    def degree(self) -> Fraction:
        return sum((Fraction(n, self.alpha_of(label)) for label, n in self.entries), Fraction(0))

    def coefficient(self, label: PointLabel) -> int:
        return dict(self.entries).get(label, 0)

    def __add__(self, other: 'Divisor') -> 'Divisor':
        if other.surface != self.surface:
            raise InvalidBundleError("divisors live on different surfaces")
        return Divisor(self.surface, self.entries + other.entries)

    def to_dict(self) -> Dict:
        return {
            'entries': [{'point': label, 'n': n, 'alpha': self.alpha_of(label)} for label, n in self.entries],
            'degree': str(self.degree),
        }

    def __repr__(self):
        return f'<Divisor {dict(self.entries)}>'
